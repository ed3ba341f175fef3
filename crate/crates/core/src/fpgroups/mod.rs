//! Finitely presented groups: words, presentations, abelian invariants,
//! coset enumeration, subgroup presentations and small quotients.

mod builders;
mod parse;
mod reidemeister_schreier;
mod s3;
mod todd_coxeter;
mod word;

pub use builders::{bezout_hats, conic_quotient_order, milnor_fiber_order, Builder, BUILDER_NAMES};
pub use parse::{parse_presentation, parse_word};
pub use reidemeister_schreier::{reidemeister_schreier, Transversal};
pub use s3::count_epimorphisms_to_s3;
pub use todd_coxeter::{default_max_cosets, group_order, todd_coxeter, CosetTable, EnumerationResult, DEFAULT_MAX_COSETS};
pub use word::{GroupPresentation, Word};

use crate::exactmath::{smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

/// `Z^free_rank x Z/t1 x ... x Z/tk` with `t1 | t2 | ...`, all `ti > 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Abelianization {
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl Abelianization {
    /// `None` for an infinite group.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.free_rank + self.torsion.len() <= 1
    }
}

impl fmt::Display for Abelianization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// Smith normal form of the exponent-sum matrix.
pub fn abelianization(p: &GroupPresentation) -> Abelianization {
    let n = p.ngens();
    if p.relators().is_empty() || n == 0 {
        return Abelianization { torsion: vec![], free_rank: n };
    }
    let rows: Vec<Vec<i64>> = p.relators().iter().map(|r| r.exponent_sums(n)).collect();
    let m = IntMatrix::from_rows(&rows).expect("rows have equal length");
    let factors = smith_normal_form(&m);
    let nonzero = factors.iter().filter(|f| !f.is_zero()).count();
    Abelianization {
        torsion: factors.into_iter().filter(|f| !f.is_zero() && !f.is_one()).collect(),
        free_rank: n - nonzero,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_examples() {
        let ab = |t: &str| abelianization(&parse_presentation(t).unwrap());
        assert_eq!(ab("<l, u | l^2, u^3*l^-2>").to_string(), "Z/6");
        assert_eq!(ab("<a, b | a^2, b^3, (a*b)^5>").to_string(), "1");
        assert_eq!(ab("<a, b | a^2, b^4>").to_string(), "Z/2 x Z/4");
        assert_eq!(ab("<a, b | [a,b]>").to_string(), "Z^2");
        assert_eq!(ab("<a, b | a^4>").order(), None);
        assert!(ab("<a, b | a^2*b^-3, b^5>").is_cyclic());
    }
}
