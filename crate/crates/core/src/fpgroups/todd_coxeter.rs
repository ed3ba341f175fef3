//! HLT coset enumeration with coincidence processing.

use super::word::{GroupPresentation, Word};
use crate::error::{Error, Result};

const NONE: usize = usize::MAX;

/// Default bound on simultaneously live cosets.
pub const DEFAULT_MAX_COSETS: usize = 100_000;

/// `WPSING_MAX_COSETS` if set to a positive integer, else the default.
pub fn default_max_cosets() -> usize {
    std::env::var("WPSING_MAX_COSETS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n| n > 0)
        .unwrap_or(DEFAULT_MAX_COSETS)
}

/// A complete coset table: coset 0 is the subgroup, column `2g` is the
/// action of generator `g` and `2g+1` that of its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    ngens: usize,
    rows: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.rows.len()
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn act(&self, coset: usize, column: usize) -> usize {
        self.rows[coset][column]
    }

    pub fn act_word(&self, coset: usize, w: &Word) -> usize {
        w.letters().into_iter().fold(coset, |c, x| self.rows[c][x])
    }

    /// Table of the kernel of `phi: G -> Z/2`, `phi(g) = flips[g]`.
    pub fn index2_kernel(p: &GroupPresentation, flips: &[bool]) -> Result<CosetTable> {
        if flips.len() != p.ngens() {
            return Err(Error::arg("one parity per generator expected"));
        }
        if !flips.iter().any(|&f| f) {
            return Err(Error::arg("the map to Z/2 must be onto"));
        }
        let rows = (0..2)
            .map(|c| (0..2 * p.ngens()).map(|x| c ^ usize::from(flips[x / 2])).collect())
            .collect();
        let t = CosetTable { ngens: p.ngens(), rows };
        t.check_relators(p)
            .map_err(|_| Error::arg("the parity map does not kill every relator"))?;
        Ok(t)
    }

    /// Every relator fixes every coset, and columns are mutually inverse.
    pub fn check_relators(&self, p: &GroupPresentation) -> Result<()> {
        if p.ngens() != self.ngens {
            return Err(Error::State("coset table and presentation disagree".into()));
        }
        for (c, row) in self.rows.iter().enumerate() {
            for (x, &d) in row.iter().enumerate() {
                if d >= self.rows.len() || self.rows[d][x ^ 1] != c {
                    return Err(Error::State(format!("coset table is not closed at ({c}, {x})")));
                }
            }
        }
        for r in p.relators() {
            for c in 0..self.rows.len() {
                if self.act_word(c, r) != c {
                    return Err(Error::State(format!("relator {} moves coset {c}", p.show_word(r))));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerationResult {
    Finished { index: usize, table: CosetTable },
    BudgetExceeded { cosets_used: usize },
}

impl EnumerationResult {
    pub fn index(&self) -> Option<usize> {
        match self {
            EnumerationResult::Finished { index, .. } => Some(*index),
            EnumerationResult::BudgetExceeded { .. } => None,
        }
    }
}

struct Enumerator {
    width: usize,
    table: Vec<usize>,
    parent: Vec<usize>,
    live: usize,
    peak: usize,
    max: usize,
    queue: Vec<usize>,
}

struct OutOfCosets;

impl Enumerator {
    fn get(&self, c: usize, x: usize) -> usize {
        self.table[c * self.width + x]
    }

    fn set(&mut self, c: usize, x: usize, d: usize) {
        self.table[c * self.width + x] = d;
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn new_coset(&mut self) -> std::result::Result<usize, OutOfCosets> {
        if self.live >= self.max {
            return Err(OutOfCosets);
        }
        let c = self.parent.len();
        self.parent.push(c);
        self.table.extend(std::iter::repeat_n(NONE, self.width));
        self.live += 1;
        self.peak = self.peak.max(self.live);
        Ok(c)
    }

    fn define(&mut self, c: usize, x: usize) -> std::result::Result<(), OutOfCosets> {
        let d = self.new_coset()?;
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = c;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            self.live -= 1;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.width {
                let d = self.get(g, x);
                if d == NONE {
                    continue;
                }
                self.set(d, x ^ 1, NONE);
                let mu = self.rep(g);
                let nu = self.rep(d);
                if self.get(mu, x) != NONE {
                    let t = self.get(mu, x);
                    self.merge(nu, t);
                } else if self.get(nu, x ^ 1) != NONE {
                    let t = self.get(nu, x ^ 1);
                    self.merge(mu, t);
                } else {
                    self.set(mu, x, nu);
                    self.set(nu, x ^ 1, mu);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, a: usize, w: &[usize]) -> std::result::Result<(), OutOfCosets> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (a, a);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.get(f, w[i]) != NONE {
                f = self.get(f, w[i]);
                i += 1;
            }
            if (i as isize) > j {
                if f != a {
                    self.coincidence(f, a);
                }
                return Ok(());
            }
            while j >= i as isize && self.get(b, w[j as usize] ^ 1) != NONE {
                b = self.get(b, w[j as usize] ^ 1);
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn compact(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut number = vec![NONE; n];
        let mut k = 0;
        for (c, slot) in number.iter_mut().enumerate() {
            if self.alive(c) {
                *slot = k;
                k += 1;
            }
        }
        let mut rows = Vec::with_capacity(k);
        for c in 0..n {
            if self.alive(c) {
                let row = (0..self.width)
                    .map(|x| {
                        let d = self.get(c, x);
                        number[self.rep(d)]
                    })
                    .collect();
                rows.push(row);
            }
        }
        rows
    }
}

/// Enumerate the cosets of the subgroup generated by `subgroup` (HLT
/// strategy: relators are traced from each live coset in order, defining
/// new cosets as needed, then the row is completed). At most `max_cosets`
/// cosets are alive at any time; running out is reported, not an error.
pub fn todd_coxeter(p: &GroupPresentation, subgroup: &[Word], max_cosets: usize) -> Result<EnumerationResult> {
    if max_cosets == 0 {
        return Err(Error::arg("max_cosets must be at least 1"));
    }
    let width = 2 * p.ngens();
    let mut e = Enumerator {
        width,
        table: Vec::new(),
        parent: Vec::new(),
        live: 0,
        peak: 0,
        max: max_cosets,
        queue: Vec::new(),
    };
    let budget = |e: &Enumerator| Ok(EnumerationResult::BudgetExceeded { cosets_used: e.peak });
    e.new_coset().map_err(|_| Error::arg("max_cosets must be at least 1"))?;
    let rels: Vec<Vec<usize>> = p.relators().iter().map(Word::letters).collect();
    for w in subgroup {
        if e.scan_and_fill(0, &w.letters()).is_err() {
            return budget(&e);
        }
    }
    let mut a = 0;
    while a < e.parent.len() {
        for r in &rels {
            if !e.alive(a) {
                break;
            }
            if e.scan_and_fill(a, r).is_err() {
                return budget(&e);
            }
        }
        for x in 0..width {
            if e.alive(a) && e.get(a, x) == NONE && e.define(a, x).is_err() {
                return budget(&e);
            }
        }
        a += 1;
    }
    let rows = e.compact();
    Ok(EnumerationResult::Finished { index: rows.len(), table: CosetTable { ngens: p.ngens(), rows } })
}

/// Order of the group, by enumerating the cosets of the trivial subgroup.
pub fn group_order(p: &GroupPresentation, max_cosets: usize) -> Result<EnumerationResult> {
    todd_coxeter(p, &[], max_cosets)
}
