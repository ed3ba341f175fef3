//! Cyclic quotient surface singularities `1/d(a,b)`.
//!
//! `1/d(a,b)` is the germ of `C^2/mu_d` with `zeta` acting by
//! `(zeta^a x, zeta^b y)`. Every faithful action reduces to `1/d'(1,q)`,
//! whose minimal resolution is the bamboo read off from `d'/q`.

use crate::error::{Error, Result};
use crate::exactmath::{hj_expansion, int, mod_inverse};
use crate::plumbing::{PlumbingGraph, Vertex};
use num_integer::Integer;
use std::fmt;
use std::str::FromStr;

/// `1/d(a,b)` with `a, b` stored reduced modulo `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicQuotient {
    d: u64,
    a: u64,
    b: u64,
}

impl CyclicQuotient {
    /// Exponents may be negative; they are reduced modulo `d`.
    pub fn new(d: u64, a: i64, b: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::arg("group order must be positive"));
        }
        let a = a.rem_euclid(d as i64) as u64;
        let b = b.rem_euclid(d as i64) as u64;
        if d.gcd(&a).gcd(&b) != 1 {
            return Err(Error::arg(format!("1/{d}({a},{b}) is not a faithful action")));
        }
        Ok(CyclicQuotient { d, a, b })
    }

    pub fn smooth() -> Self {
        CyclicQuotient { d: 1, a: 0, b: 0 }
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn is_smooth(&self) -> bool {
        normalize(self).d == 1
    }
}

impl fmt::Display for CyclicQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}({},{})", self.d, self.a, self.b)
    }
}

impl FromStr for CyclicQuotient {
    type Err = Error;

    /// Parses `1/d(a,b)`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::arg(format!("expected 1/d(a,b), got {s:?}"));
        let rest = t.strip_prefix("1/").ok_or_else(bad)?;
        let (d, rest) = rest.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let d: u64 = d.parse().map_err(|_| bad())?;
        let a: i64 = a.parse().map_err(|_| bad())?;
        let b: i64 = b.parse().map_err(|_| bad())?;
        CyclicQuotient::new(d, a, b)
    }
}

/// Canonical form `1/d(1,q)`; `d == 1` (with `q == 0`) is a smooth point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NormalizedQuotient {
    d: u64,
    q: u64,
}

impl NormalizedQuotient {
    pub fn new(d: u64, q: u64) -> Result<Self> {
        if d == 1 && q == 0 {
            return Ok(NormalizedQuotient { d, q });
        }
        if d == 0 || q == 0 || q >= d || d.gcd(&q) != 1 {
            return Err(Error::arg(format!("1/{d}(1,{q}) is not a normal form")));
        }
        Ok(NormalizedQuotient { d, q })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_smooth(&self) -> bool {
        self.d == 1
    }

    pub fn to_cyclic(&self) -> CyclicQuotient {
        if self.d == 1 {
            CyclicQuotient::smooth()
        } else {
            CyclicQuotient { d: self.d, a: 1, b: self.q }
        }
    }

    /// The same germ with the coordinates swapped: `1/d(1,q')`, `q q' = 1 mod d`.
    pub fn dual(&self) -> NormalizedQuotient {
        if self.d == 1 {
            return *self;
        }
        let q = mod_inverse(self.q as i64, self.d as i64).expect("q is a unit") as u64;
        NormalizedQuotient { d: self.d, q }
    }
}

impl fmt::Display for NormalizedQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 1 {
            write!(f, "smooth")
        } else {
            write!(f, "1/{}(1,{})", self.d, self.q)
        }
    }
}

/// Remove pseudo-reflections, then scale the action so the first exponent is 1.
///
/// If `g = gcd(d,b) > 1` then `mu_g` fixes `x` and acts on `y` by a
/// reflection; its quotient is `1/(d/g)(a, b/g)`. The same with the roles
/// of `a` and `b` exchanged.
pub fn normalize(s: &CyclicQuotient) -> NormalizedQuotient {
    let (mut d, mut a, mut b) = (s.d, s.a, s.b);
    loop {
        let g = d.gcd(&b);
        if g > 1 {
            d /= g;
            b /= g;
            a %= d;
            b %= d;
            continue;
        }
        let g = d.gcd(&a);
        if g > 1 {
            d /= g;
            a /= g;
            a %= d;
            b %= d;
            continue;
        }
        break;
    }
    if d == 1 {
        return NormalizedQuotient { d: 1, q: 0 };
    }
    let inv = mod_inverse(a as i64, d as i64).expect("a is a unit after reduction") as u64;
    let q = ((u128::from(b) * u128::from(inv)) % u128::from(d)) as u64;
    NormalizedQuotient { d, q }
}

/// Minimal resolution: a chain of rational curves with self-intersections
/// `-b_i`, where `d/q = b1 - 1/(b2 - ...)`.
pub fn resolve_bamboo(s: &NormalizedQuotient) -> Result<PlumbingGraph> {
    if s.d < 2 {
        return Err(Error::arg("a smooth point has nothing to resolve"));
    }
    let bs = hj_expansion(s.d as i64, s.q as i64)?;
    let mut g = PlumbingGraph::default();
    for (i, b) in bs.iter().enumerate() {
        g.vertices.push(Vertex::rational(int(-b)));
        if i > 0 {
            g.add_edge(i - 1, i, int(1));
        }
    }
    Ok(g)
}

/// Order of the small group after normalization; equals `det(-A)` of the
/// resolution bamboo, and 1 for smooth points.
pub fn order(s: &CyclicQuotient) -> u64 {
    normalize(s).d
}

/// Self-intersections of the bamboo, for display.
pub fn bamboo_weights(s: &NormalizedQuotient) -> Result<Vec<i64>> {
    Ok(hj_expansion(s.d as i64, s.q as i64)?.into_iter().map(|b| -b).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plumbing::intersection_matrix;
    use num_bigint::BigInt;

    fn nq(d: u64, q: u64) -> NormalizedQuotient {
        NormalizedQuotient::new(d, q).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let s = CyclicQuotient::new(5, 2, 3).unwrap();
        assert_eq!(normalize(&s), nq(5, 4));
        let s = CyclicQuotient::new(7, 1, 1).unwrap();
        assert_eq!(normalize(&s), nq(7, 1));
        let s = CyclicQuotient::new(6, 2, 3).unwrap();
        assert_eq!(normalize(&s), nq(1, 0));
        // negative exponent reduced at construction
        let s = CyclicQuotient::new(5, 1, -1).unwrap();
        assert_eq!(normalize(&s), nq(5, 4));
        // reflection part of order 2 removed
        let s = CyclicQuotient::new(12, 1, 2).unwrap();
        assert_eq!(normalize(&s), nq(6, 1));
    }

    #[test]
    fn faithfulness_checked() {
        assert!(CyclicQuotient::new(6, 2, 4).is_err());
        assert!(CyclicQuotient::new(0, 1, 1).is_err());
        assert!("1/1(0,0)".parse::<CyclicQuotient>().is_ok());
    }

    #[test]
    fn parse_and_print() {
        let s: CyclicQuotient = " 1/5( 2 , -2 )".parse().unwrap();
        assert_eq!(s.to_string(), "1/5(2,3)");
        assert!("1/5(2)".parse::<CyclicQuotient>().is_err());
        assert!("2/5(1,1)".parse::<CyclicQuotient>().is_err());
    }

    #[test]
    fn bamboos() {
        let g = resolve_bamboo(&nq(5, 2)).unwrap();
        let a = intersection_matrix(&g).unwrap();
        assert_eq!(a, crate::exactmath::RatMatrix::from_i64(&[vec![-3, 1], vec![1, -2]]).unwrap());
        assert_eq!(bamboo_weights(&nq(9, 1)).unwrap(), vec![-9]);
        assert_eq!(bamboo_weights(&nq(7, 3)).unwrap(), vec![-3, -2, -2]);
        assert!(resolve_bamboo(&nq(1, 0)).is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(order(&CyclicQuotient::new(5, 1, 2).unwrap()), 5);
        assert_eq!(order(&CyclicQuotient::smooth()), 1);
        assert_eq!(order(&CyclicQuotient::new(12, 1, 5).unwrap()), 12);
        let g = resolve_bamboo(&nq(12, 5)).unwrap();
        assert_eq!(crate::plumbing::det_singularity(&g).unwrap(), BigInt::from(12));
    }

    #[test]
    fn six_two_three_is_smooth_by_bamboo_comparison() {
        // The reflection quotients make 1/6(2,3) smooth; its "bamboo" is empty,
        // like that of any 1/1 point.
        let s = CyclicQuotient::new(6, 2, 3).unwrap();
        assert!(s.is_smooth());
        assert!(resolve_bamboo(&normalize(&s)).is_err());
    }
}
