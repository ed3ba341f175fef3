use super::todd_coxeter::CosetTable;
use super::word::{GroupPresentation, Word};
use crate::error::Result;
use std::collections::{HashMap, VecDeque};

/// Order in which the breadth-first search tries table columns when
/// building the Schreier transversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Transversal {
    #[default]
    Forward,
    Reversed,
}

/// Presentation of the subgroup described by a closed coset table.
///
/// Generators are the non-tree edges `s = t_c g t_{cg}^-1`, named
/// `g_c`; relators are every relator of `p` rewritten from every coset.
pub fn reidemeister_schreier(p: &GroupPresentation, table: &CosetTable, order: Transversal) -> Result<GroupPresentation> {
    table.check_relators(p)?;
    let n = table.index();
    let width = 2 * p.ngens();
    let columns: Vec<usize> = match order {
        Transversal::Forward => (0..width).collect(),
        Transversal::Reversed => (0..width).rev().collect(),
    };
    // tree edges as (coset, generator) with coset * generator = target
    let mut tree = vec![false; n * p.ngens()];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(c) = queue.pop_front() {
        for &x in &columns {
            let d = table.act(c, x);
            if !seen[d] {
                seen[d] = true;
                queue.push_back(d);
                let (from, g) = if x % 2 == 0 { (c, x / 2) } else { (d, x / 2) };
                tree[from * p.ngens() + g] = true;
            }
        }
    }
    let mut names = Vec::new();
    let mut index = HashMap::new();
    for c in 0..n {
        for g in 0..p.ngens() {
            if !tree[c * p.ngens() + g] {
                index.insert((c, g), names.len());
                names.push(format!("{}_{c}", p.generators()[g]));
            }
        }
    }
    let mut rels = Vec::new();
    for r in p.relators() {
        for start in 0..n {
            let mut pairs = Vec::new();
            let mut c = start;
            for x in r.letters() {
                let g = x / 2;
                if x % 2 == 0 {
                    if let Some(&s) = index.get(&(c, g)) {
                        pairs.push((s, 1));
                    }
                    c = table.act(c, x);
                } else {
                    c = table.act(c, x);
                    if let Some(&s) = index.get(&(c, g)) {
                        pairs.push((s, -1));
                    }
                }
            }
            rels.push(Word::new(pairs));
        }
    }
    let mut unique: Vec<Word> = Vec::new();
    for w in rels {
        if !w.is_identity() && !unique.contains(&w) {
            unique.push(w);
        }
    }
    GroupPresentation::new(names, unique)
}
