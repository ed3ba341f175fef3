//! Sparse polynomials over `Q(zeta3)` and the substitutions acting on them.
//!
//! The weighted Cremona map sends a plane curve `f(x,y,z) = 0` to
//! `f(y^a1 z, x^a2 z, x^b1 y^b2) = 0` in `P^2_(a1,a2,a3)`; the Kummer cover
//! raises each variable to a power.

mod catalog;
mod coeff;
mod flex;
mod multipoly;
mod parse;

pub use catalog::{catalog, CatalogCurve, CubeRoot};
pub use coeff::Qz;
pub use flex::{are_collinear, axis_restriction_is_cube, flex_tangency_points};
pub use multipoly::{Exps, MultiPoly};
pub use parse::parse_poly;

use crate::error::{Error, Result};
use crate::wproj::{CremonaParams, Weight3};
use num_integer::Integer;
use std::collections::BTreeMap;

fn checked(a: u64, b: u64, c: u64, d: u64) -> Result<u64> {
    a.checked_mul(b)
        .and_then(|p| c.checked_mul(d).and_then(|q| p.checked_add(q)))
        .ok_or_else(|| Error::Arithmetic("exponent overflow".into()))
}

fn require_three(f: &MultiPoly) -> Result<()> {
    if f.nvars() != 3 {
        return Err(Error::arg("expected a polynomial in x, y, z"));
    }
    Ok(())
}

/// Forms of each `w`-degree.
pub fn wdegree_decompose(f: &MultiPoly, w: &Weight3) -> Result<BTreeMap<u64, MultiPoly>> {
    require_three(f)?;
    f.wdegree_decompose(&w.e())
}

/// `f(y^a1 z, x^a2 z, x^b1 y^b2)`.
///
/// A monomial `x^i y^j z^k` goes to `x^(a2 j + b1 k) y^(a1 i + b2 k) z^(i+j)`,
/// so a form of degree `n` becomes `w`-homogeneous of degree `n (a1 a2 + a3)`.
pub fn cremona_push(f: &MultiPoly, p: &CremonaParams) -> Result<MultiPoly> {
    require_three(f)?;
    let [a1, a2, _] = p.alpha;
    let [b1, b2] = p.beta;
    f.map_monomials(3, |e| {
        let (i, j, k) = (e[0], e[1], e[2]);
        Ok(vec![
            checked(a2, j, b1, k)?,
            checked(a1, i, b2, k)?,
            i.checked_add(j).ok_or_else(|| Error::Arithmetic("exponent overflow".into()))?,
        ])
    })
}

/// Divide out the largest monomial factor: `f = x^a y^b z^c g`.
pub fn strip_monomial_factor(f: &MultiPoly) -> Result<(MultiPoly, Exps)> {
    if f.is_zero() {
        return Err(Error::arg("zero polynomial has no monomial factor"));
    }
    let n = f.nvars();
    let mut m = vec![u64::MAX; n];
    for (e, _) in f.terms() {
        for (mi, &ei) in m.iter_mut().zip(e) {
            *mi = (*mi).min(ei);
        }
    }
    let g = f.map_monomials(n, |e| Ok(e.iter().zip(&m).map(|(a, b)| a - b).collect()))?;
    Ok((g, m))
}

/// `f(x^d1, y^d2, z^d3)` without conditions on the `d_i`.
pub fn substitute_powers(f: &MultiPoly, d: &[u64]) -> Result<MultiPoly> {
    if d.len() != f.nvars() {
        return Err(Error::arg("one exponent per variable required"));
    }
    f.map_monomials(f.nvars(), |e| {
        e.iter()
            .zip(d)
            .map(|(a, b)| a.checked_mul(*b).ok_or_else(|| Error::Arithmetic("exponent overflow".into())))
            .collect()
    })
}

/// Pull back along the Kummer cover `[x:y:z] -> [x^d1 : y^d2 : z^d3]`;
/// the `d_i` must be positive and pairwise coprime.
pub fn kummer_pull(f: &MultiPoly, d: [u64; 3]) -> Result<MultiPoly> {
    require_three(f)?;
    let ok = d.iter().all(|&x| x >= 1)
        && d[0].gcd(&d[1]) == 1
        && d[0].gcd(&d[2]) == 1
        && d[1].gcd(&d[2]) == 1;
    if !ok {
        return Err(Error::arg(format!("{d:?} must be positive and pairwise coprime")));
    }
    substitute_powers(f, &d)
}
