use super::coeff::Qz;
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector of a monomial.
pub type Exps = Vec<u64>;

/// Sparse polynomial in 3 or 4 variables over `Q(zeta)`; zero coefficients
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Exps, Qz>,
}

pub(crate) const VAR_NAMES: [&str; 4] = ["x", "y", "z", "w"];

fn overflow() -> Error {
    Error::Arithmetic("exponent overflow".into())
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Qz) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Qz::one())
    }

    pub fn monomial(nvars: usize, exps: Exps, c: Qz) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Qz)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u64]) -> Qz {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Exps, c: &Qz) {
        let entry = self.terms.entry(exps).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Same polynomial seen in more variables.
    pub fn with_nvars(&self, nvars: usize) -> Result<Self> {
        if nvars < self.nvars
            && self.terms.keys().any(|e| e[nvars..].iter().any(|&x| x != 0))
        {
            return Err(Error::arg("polynomial uses a dropped variable"));
        }
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.resize(nvars, 0);
            out.terms.insert(e2, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Qz) -> Self {
        let mut out = Self::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let n = self.nvars.max(other.nvars);
        let (a, b) = (self.with_nvars(n)?, other.with_nvars(n)?);
        let mut out = Self::zero(n);
        for (e1, c1) in &a.terms {
            for (e2, c2) in &b.terms {
                let e = e1
                    .iter()
                    .zip(e2)
                    .map(|(x, y)| x.checked_add(*y).ok_or_else(overflow))
                    .collect::<Result<Exps>>()?;
                out.add_term(e, &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn try_pow(&self, k: u64) -> Result<Self> {
        let mut out = Self::constant(self.nvars, Qz::one());
        for _ in 0..k {
            out = out.try_mul(self)?;
        }
        Ok(out)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Weighted degree of each monomial.
    fn wdeg(e: &[u64], weights: &[u64]) -> Result<u64> {
        e.iter().zip(weights).try_fold(0u64, |acc, (x, w)| {
            x.checked_mul(*w).and_then(|t| acc.checked_add(t)).ok_or_else(overflow)
        })
    }

    /// `Some(deg)` if every monomial has the same weighted degree.
    pub fn weighted_homogeneous_degree(&self, weights: &[u64]) -> Result<Option<u64>> {
        if weights.len() != self.nvars {
            return Err(Error::arg("one weight per variable required"));
        }
        let mut deg = None;
        for e in self.terms.keys() {
            let d = Self::wdeg(e, weights)?;
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return Ok(None),
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Split into weighted-homogeneous forms keyed by degree.
    pub fn wdegree_decompose(&self, weights: &[u64]) -> Result<BTreeMap<u64, MultiPoly>> {
        if weights.len() != self.nvars {
            return Err(Error::arg("one weight per variable required"));
        }
        let mut out: BTreeMap<u64, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = Self::wdeg(e, weights)?;
            out.entry(d)
                .or_insert_with(|| MultiPoly::zero(self.nvars))
                .terms
                .insert(e.clone(), c.clone());
        }
        Ok(out)
    }

    /// Replace every monomial `m` by `map(m)` (a coefficient-free monomial
    /// substitution), summing collisions.
    pub fn map_monomials<F>(&self, nvars: usize, map: F) -> Result<MultiPoly>
    where
        F: Fn(&[u64]) -> Result<Exps>,
    {
        let mut out = MultiPoly::zero(nvars);
        for (e, c) in &self.terms {
            out.add_term(map(e)?, c);
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Qz]) -> Result<Qz> {
        if point.len() != self.nvars {
            return Err(Error::arg("point dimension mismatch"));
        }
        let mut acc = Qz::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                let k = u32::try_from(k).map_err(|_| overflow())?;
                t = &t * &x.pow(k);
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Set variable `i` to zero.
    pub fn restrict_zero(&self, i: usize) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[i] == 0)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms in graded-lex order, highest first.
    pub fn sorted_terms(&self) -> Vec<(&Exps, &Qz)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| graded_lex(b, a));
        v
    }
}

fn graded_lex(a: &[u64], b: &[u64]) -> Ordering {
    let (da, db): (u64, u64) = (a.iter().sum(), b.iter().sum());
    da.cmp(&db).then_with(|| a.cmp(b))
}

fn monomial_text(e: &[u64]) -> String {
    e.iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            if k == 1 {
                VAR_NAMES[i].to_string()
            } else {
                format!("{}^{k}", VAR_NAMES[i])
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for MultiPoly {
    /// Graded-lex order, e.g. `x^2*y - 2*z + (1+zeta)*x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let m = monomial_text(e);
            let (neg, body) = if c.is_rational() {
                let neg = c.a < num_traits::Zero::zero();
                let abs = if neg { -c.a.clone() } else { c.a.clone() };
                let v = crate::exactmath::format_rational(&abs);
                let body = match (m.is_empty(), v == "1") {
                    (true, _) => v,
                    (false, true) => m,
                    (false, false) => format!("{v}*{m}"),
                };
                (neg, body)
            } else if m.is_empty() {
                (false, format!("({c})"))
            } else {
                (false, format!("({c})*{m}"))
            };
            match (k, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        let n = self.nvars.max(o.nvars);
        let mut out = self.with_nvars(n).expect("widening never fails");
        for (e, c) in &o.with_nvars(n).expect("widening never fails").terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        self + &(-o)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Qz::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    /// Panics on exponent overflow; use [`MultiPoly::try_mul`] to recover.
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        self.try_mul(o).expect("exponent overflow in polynomial product")
    }
}
