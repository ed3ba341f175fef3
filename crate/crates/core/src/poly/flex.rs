use super::catalog::{catalog, CatalogCurve, CubeRoot};
use super::coeff::Qz;
use super::multipoly::MultiPoly;
use crate::error::{Error, Result};
use num_traits::{One, Zero};

type Point = [Qz; 3];

/// Does `f` restricted to the axis `{x_i = 0}` equal `c * L^3` with `L` the
/// linear form on the axis vanishing at `p`? This is tangency of order 3 at
/// `p`, i.e. `p` is an inflection point with the axis as tangent.
pub fn axis_restriction_is_cube(f: &MultiPoly, axis: usize, p: &Point) -> Result<bool> {
    if !p[axis].is_zero() {
        return Ok(false);
    }
    let (j, k) = ((axis + 1) % 3, (axis + 2) % 3);
    let g = f.restrict_zero(axis);
    // L = p_k * x_j - p_j * x_k
    let l = &MultiPoly::var(3, j).scale(&p[k]) - &MultiPoly::var(3, k).scale(&p[j]);
    if l.is_zero() {
        return Err(Error::arg("zero point"));
    }
    let l3 = l.try_pow(3)?;
    let (e, c) = l3.terms().next().expect("nonzero cube");
    let ratio = &g.coeff(e) * &c.inverse()?;
    Ok(!ratio.is_zero() && g == l3.scale(&ratio))
}

/// The inflection points `[0:1:-l]`, `[-1:0:1]`, `[1:-l:0]` where `H_l` is
/// tangent to `x=0`, `y=0`, `z=0`; each is verified to lie on the curve with
/// a triple contact.
pub fn flex_tangency_points(lambda: CubeRoot) -> Result<[Point; 3]> {
    let l = lambda.value();
    let (zero, one) = (Qz::zero(), Qz::one());
    let pts = [
        [zero.clone(), one.clone(), -l.clone()],
        [-one.clone(), zero.clone(), one.clone()],
        [one, -l, zero],
    ];
    let h = catalog(&CatalogCurve::HLambda(lambda))?;
    for (axis, p) in pts.iter().enumerate() {
        if !h.eval(p)?.is_zero() || !axis_restriction_is_cube(&h, axis, p)? {
            return Err(Error::consistency(format!("point {axis} is not a tangency flex")));
        }
    }
    Ok(pts)
}

fn det3(m: [&Point; 3]) -> Qz {
    let t = |a: &Qz, b: &Qz, c: &Qz| &(a * b) * c;
    let pos = &(&t(&m[0][0], &m[1][1], &m[2][2]) + &t(&m[0][1], &m[1][2], &m[2][0]))
        + &t(&m[0][2], &m[1][0], &m[2][1]);
    let neg = &(&t(&m[0][2], &m[1][1], &m[2][0]) + &t(&m[0][0], &m[1][2], &m[2][1]))
        + &t(&m[0][1], &m[1][0], &m[2][2]);
    &pos - &neg
}

/// Three projective points are on a line iff their coordinate determinant
/// vanishes.
pub fn are_collinear(p1: &Point, p2: &Point, p3: &Point) -> Result<bool> {
    if [p1, p2, p3].iter().any(|p| p.iter().all(Zero::is_zero)) {
        return Err(Error::arg("the zero vector is not a projective point"));
    }
    Ok(det3([p1, p2, p3]).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligned_for_one() {
        let [a, b, c] = flex_tangency_points(CubeRoot::One).unwrap();
        assert_eq!(a, [Qz::from_i64(0), Qz::from_i64(1), Qz::from_i64(-1)]);
        assert!(are_collinear(&a, &b, &c).unwrap());
        let h = catalog(&CatalogCurve::HLambda(CubeRoot::One)).unwrap();
        assert!(h.eval(&a).unwrap().is_zero());
    }

    #[test]
    fn not_aligned_for_zeta() {
        for l in [CubeRoot::Zeta, CubeRoot::Zeta2] {
            let [a, b, c] = flex_tangency_points(l).unwrap();
            assert!(!are_collinear(&a, &b, &c).unwrap());
        }
        let [a, _, _] = flex_tangency_points(CubeRoot::Zeta).unwrap();
        assert_eq!(a[2], -Qz::zeta());
    }

    #[test]
    fn collinear_basics() {
        let e = |a, b, c| [Qz::from_i64(a), Qz::from_i64(b), Qz::from_i64(c)];
        assert!(are_collinear(&e(1, 0, 0), &e(0, 1, 0), &e(1, 1, 0)).unwrap());
        assert!(!are_collinear(&e(1, 0, 0), &e(0, 1, 0), &e(0, 0, 1)).unwrap());
        assert!(are_collinear(&e(0, 0, 0), &e(0, 1, 0), &e(1, 1, 0)).is_err());
    }

    #[test]
    fn non_flex_is_rejected() {
        let h = catalog(&CatalogCurve::HLambda(CubeRoot::One)).unwrap();
        let p = [Qz::from_i64(0), Qz::from_i64(1), Qz::from_i64(1)];
        assert!(!axis_restriction_is_cube(&h, 0, &p).unwrap());
    }
}
