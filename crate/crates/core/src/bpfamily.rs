//! Brieskorn-Pham surfaces `x^n1 + y^n2 + z^n3 = 0` and the complete
//! intersections
//!
//! ```text
//! x1^n1 - x0^n0 + x2^n2 - x0^b20 x1^b21 = x2^n2 - x0^b20 x1^b21 + x3^n3 - x0^b30 x1^b31 x2^b32 = 0
//! ```
//!
//! in `C^4`.
//!
//! For Brieskorn-Pham, with `e = gcd(n)`, `alpha_k = gcd(n_i, n_j)/e` and
//! `d_i = n_i/(e alpha_j alpha_k)`, one weighted blow-up gives a single
//! exceptional curve of genus `(e^2 a1a2a3 - e(a1+a2+a3) + 2)/2` carrying
//! `e alpha_i` cyclic points of order `d_i`, and
//!
//! ```text
//! det S = e * d1^(e a1 - 1) * d2^(e a2 - 1) * d3^(e a3 - 1).
//! ```

use crate::error::{Error, Result};
use crate::exactmath::{big_product, int, lcm_many, rat_pow, Rational};
use crate::leyomdin::WlyCurveData;
use crate::plumbing::{PlumbingGraph, Vertex};
use crate::wproj::Weight3;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BpAnalysis {
    pub n: [u64; 3],
    pub e: u64,
    pub alpha: [u64; 3],
    /// The pairwise coprime `d_i`.
    pub dd: [u64; 3],
    pub omega: [u64; 3],
    /// `omega`-degree of the polynomial.
    pub degree: u64,
    pub exceptional_genus: u64,
    #[serde(serialize_with = "crate::exactmath::ser_bigint")]
    pub det: BigInt,
    pub is_qhs: bool,
    pub is_zhs: bool,
}

fn bp_constants(n: [u64; 3]) -> Result<(u64, [u64; 3], [u64; 3])> {
    if n.contains(&0) {
        return Err(Error::arg("exponents must be positive"));
    }
    let e = n[0].gcd(&n[1]).gcd(&n[2]);
    let alpha = [
        n[1].gcd(&n[2]) / e,
        n[0].gcd(&n[2]) / e,
        n[0].gcd(&n[1]) / e,
    ];
    let dd = [
        n[0] / (e * alpha[1] * alpha[2]),
        n[1] / (e * alpha[0] * alpha[2]),
        n[2] / (e * alpha[0] * alpha[1]),
    ];
    Ok((e, alpha, dd))
}

/// `(e = 2 and alpha = (1,1,1))` or `(e = 1 and two alpha_i equal 1)`.
pub fn qhs_two_branch(e: u64, alpha: [u64; 3]) -> bool {
    let ones = alpha.iter().filter(|&&a| a == 1).count();
    (e == 2 && ones == 3) || (e == 1 && ones >= 2)
}

pub fn bp_analyze(n1: u64, n2: u64, n3: u64) -> Result<BpAnalysis> {
    let n = [n1, n2, n3];
    let (e, alpha, dd) = bp_constants(n)?;
    let omega = [alpha[0] * dd[1] * dd[2], alpha[1] * dd[0] * dd[2], alpha[2] * dd[0] * dd[1]];
    let pa: u64 = alpha.iter().product();
    let degree = e * pa * dd.iter().product::<u64>();
    let sa: u64 = alpha.iter().sum();
    let twice = i128::from(e * e) * i128::from(pa) - i128::from(e) * i128::from(sa) + 2;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::consistency(format!("genus {twice}/2 is not a nonnegative integer")));
    }
    let exceptional_genus = (twice / 2) as u64;
    let det = BigInt::from(e)
        * (0..3).fold(BigInt::one(), |acc, i| acc * BigInt::from(dd[i]).pow(e * alpha[i] - 1));
    let is_qhs = exceptional_genus == 0;
    Ok(BpAnalysis {
        n,
        e,
        alpha,
        dd,
        omega,
        degree,
        exceptional_genus,
        is_zhs: is_qhs && det.is_one(),
        det,
        is_qhs,
    })
}

/// Pairwise coprimality of the exponents.
pub fn pairwise_coprime(v: &[u64]) -> bool {
    (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i].gcd(&v[j]) == 1))
}

/// Compare the unsimplified product
/// `d/((d1d2d3)^2 a1a2a3) * (d1^a1 d2^a2 d3^a3)^e` with the closed form.
pub fn bp_consistency(n1: u64, n2: u64, n3: u64) -> Result<bool> {
    let a = bp_analyze(n1, n2, n3)?;
    let pd = big_product(a.dd);
    let pa = big_product(a.alpha);
    let lhs = Rational::new(BigInt::from(a.degree), &pd * &pd * pa)
        * Rational::from_integer(
            (0..3)
                .fold(BigInt::one(), |acc, i| acc * BigInt::from(a.dd[i]).pow(a.alpha[i]))
                .pow(a.e),
        );
    Ok(lhs == Rational::from_integer(a.det))
}

/// The star-shaped partial resolution: one curve of the exceptional genus,
/// self-intersection `-d/(e1e2e3)`, with `e alpha_i` points of order `d_i`.
pub fn bp_graph(a: &BpAnalysis) -> PlumbingGraph {
    let e_prod = big_product(a.omega);
    let mut v = Vertex::rational(-Rational::new(BigInt::from(a.degree), e_prod));
    v.genus = a.exceptional_genus;
    for i in 0..3 {
        for _ in 0..a.e * a.alpha[i] {
            v.quotient_points.push(a.dd[i]);
        }
    }
    let mut g = PlumbingGraph::default();
    g.add_vertex(v);
    g
}

/// The same singularity as an `(omega, k)`-weighted Le-Yomdin datum: one
/// component of degree `d`, no axes, germ determinants `d_i` repeated
/// `e alpha_i` times.
pub fn bp_wly_data(a: &BpAnalysis, k: u64) -> Result<WlyCurveData> {
    let w = Weight3::new(a.omega[0], a.omega[1], a.omega[2])?;
    let germs = (0..3)
        .flat_map(|i| std::iter::repeat_n(a.dd[i], (a.e * a.alpha[i]) as usize))
        .collect();
    WlyCurveData::new(w, k, a.degree, [false; 3], vec![a.degree], germs)
}

/// Exponents and `b`-data of the complete intersection in `C^4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Family4Input {
    pub n: [u64; 4],
    pub b2: [u64; 2],
    pub b3: [u64; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family4Analysis {
    pub input: Family4Input,
    pub pairwise_coprime: bool,
    /// `b20 n1 + b21 n0`.
    pub b: u64,
    /// `gcd(n3, b)`.
    pub m: u64,
    pub b2_prime: BigInt,
    pub b3_prime: BigInt,
    /// `N1 = n0 n1 n2 n3`, multiplicity of the first exceptional curve.
    pub n1_mult: BigInt,
    /// `N2 = (b2' + N1)/m`.
    pub n2_mult: BigInt,
    /// `n2^(m-1)` when the exponents are pairwise coprime.
    pub det_closed: Option<BigInt>,
    /// Closed formula valid without the coprimality assumption.
    pub det_remark: Rational,
    /// Number of components of the first exceptional divisor, `gcd(n2,n3)`.
    pub e1_components: u64,
    pub genus_e1: Rational,
    pub genus_e2: Rational,
    pub is_zhs: bool,
}

impl Family4Analysis {
    /// `a1(dq) = N2/(N1 dq)`, with `-a1` the self-intersection of `E1`.
    pub fn a1(&self, dq: u64) -> Rational {
        Rational::new(self.n2_mult.clone(), &self.n1_mult * BigInt::from(dq))
    }

    /// `a2(dq) = (m + N1/dq)/N2`.
    pub fn a2(&self, dq: u64) -> Rational {
        (int(self.m as i64) + Rational::new(self.n1_mult.clone(), BigInt::from(dq)))
            / Rational::from_integer(self.n2_mult.clone())
    }

    /// The two-curve partial resolution with edge `1/dq`, self-intersections
    /// solved from the pullback of `{f1 = 0}`.
    pub fn graph(&self, dq: u64) -> Result<PlumbingGraph> {
        if dq == 0 {
            return Err(Error::arg("dq must be positive"));
        }
        if !self.pairwise_coprime {
            return Err(Error::arg("graph assembly needs pairwise coprime exponents"));
        }
        let [n0, n1, n2, n3] = self.input.n;
        let mut g = PlumbingGraph::default();
        let e1 = Vertex::unknown(0, Rational::from_integer(self.n1_mult.clone()), Rational::zero())
            .with_points(&[n0, n1, dq]);
        let mut e2 = Vertex::unknown(0, Rational::from_integer(self.n2_mult.clone()), int(self.m as i64));
        for _ in 0..self.m {
            e2.quotient_points.push(n2);
        }
        e2.quotient_points.push(n3 / self.m);
        g.add_vertex(e1);
        g.add_vertex(e2);
        g.add_edge(0, 1, Rational::new(BigInt::one(), BigInt::from(dq)));
        crate::plumbing::solve_self_intersections(&g)
    }

    /// `det(-A) * prod(orders)` of [`Self::graph`].
    pub fn det_graph(&self, dq: u64) -> Result<BigInt> {
        crate::plumbing::det_singularity(&self.graph(dq)?)
    }
}

fn nijk(a: u64, b: u64, c: u64) -> Result<u64> {
    Ok(a * b * c / lcm_many(&[a, b, c])?)
}

pub fn family4_analyze(input: &Family4Input) -> Result<Family4Analysis> {
    let [n0, n1, n2, n3] = input.n;
    if input.n.contains(&0) {
        return Err(Error::arg("exponents must be positive"));
    }
    let [b20, b21] = input.b2;
    let [b30, b31, b32] = input.b3;
    let n = big_product(input.n);
    let big = |v: u64| BigInt::from(v);
    let b2_prime = big(b20) * (&n / big(n0)) + big(b21) * (&n / big(n1)) - &n;
    if b2_prime.is_negative() {
        return Err(Error::arg(format!("b2' = {b2_prime} is negative")));
    }
    let b3_prime =
        big(b30) * (&n / big(n0)) + big(b31) * (&n / big(n1)) + big(b32) * (&n / big(n2)) - &n;
    let b = b20 * n1 + b21 * n0;
    let m = n3.gcd(&b);
    let num = &b2_prime + &n;
    if !num.is_multiple_of(&big(m)) {
        return Err(Error::consistency(format!("m = {m} does not divide b2' + N1 = {num}")));
    }
    let n2_mult = num / big(m);
    let coprime = pairwise_coprime(&input.n);

    let n23 = n2.gcd(&n3);
    let n123 = nijk(n1, n2, n3)?;
    let n023 = nijk(n0, n2, n3)?;
    let l = int(lcm_many(&input.n)? as i64);
    let alpha = int(lcm_many(&[n1, n2, n3])? as i64);
    let beta = int(lcm_many(&[n0, n2, n3])? as i64);
    let det_remark = rat_pow(&int((b / m) as i64), n23 as i64 - 1)
        * rat_pow(&(&l / &alpha), n123 as i64 - n23 as i64)
        * rat_pow(&(&l / &beta), n023 as i64 - n23 as i64)
        * rat_pow(&int((n2 / n23) as i64), m as i64 - 1);
    let half = Rational::new(BigInt::one(), big(2));
    let genus_e1 = &half * int((n123 / n23) as i64 - 1) * int((n023 / n23) as i64 - 1);
    let genus_e2 = &half * int(n23 as i64 - 1) * int(m as i64 - 1);
    for (name, g) in [("g(E1)", &genus_e1), ("g(E2)", &genus_e2)] {
        if !g.is_integer() {
            return Err(Error::consistency(format!("{name} = {g} is not an integer")));
        }
    }

    let det_closed = coprime.then(|| big(n2).pow(m - 1));
    let mut out = Family4Analysis {
        input: *input,
        pairwise_coprime: coprime,
        b,
        m,
        b2_prime,
        b3_prime,
        n1_mult: n,
        n2_mult,
        is_zhs: det_closed.as_ref().is_some_and(One::is_one),
        det_closed,
        det_remark,
        e1_components: n23,
        genus_e1,
        genus_e2,
    };
    if coprime {
        let want = out.det_closed.clone().expect("coprime branch");
        for dq in 1..=10 {
            let got = out.det_graph(dq)?;
            if got != want {
                return Err(Error::consistency(format!(
                    "graph determinant {got} != {want} at dq = {dq}"
                )));
            }
        }
    }
    out.is_zhs = out.is_zhs && out.genus_e1.is_zero() && out.genus_e2.is_zero();
    Ok(out)
}

/// `gcd(n_i, n_j) = 1` for `i != j` and `m = 1`.
pub fn family4_zhs_criterion(input: &Family4Input) -> bool {
    let [n0, n1, _, n3] = input.n;
    let b = input.b2[0] * n1 + input.b2[1] * n0;
    pairwise_coprime(&input.n) && n3.gcd(&b) == 1
}

impl Family4Analysis {
    /// Graph determinants for each `dq` in the range.
    pub fn dq_scan(&self, range: std::ops::RangeInclusive<u64>) -> Result<Vec<(u64, BigInt)>> {
        range.map(|dq| Ok((dq, self.det_graph(dq)?))).collect()
    }

    pub fn det_remark_integer(&self) -> Option<u64> {
        self.det_remark.is_integer().then(|| self.det_remark.to_integer().to_u64()).flatten()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plumbing::{classify_link, det_singularity};

    #[test]
    fn bp_2_3_5() {
        let a = bp_analyze(2, 3, 5).unwrap();
        assert_eq!((a.e, a.alpha, a.dd), (1, [1, 1, 1], [2, 3, 5]));
        assert_eq!(a.det, BigInt::one());
        assert_eq!(a.exceptional_genus, 0);
        assert!(a.is_zhs);
        assert_eq!(a.omega, [15, 10, 6]);
        assert_eq!(a.degree, 30);
    }

    #[test]
    fn bp_2_2_2() {
        let a = bp_analyze(2, 2, 2).unwrap();
        assert_eq!((a.e, a.alpha, a.dd), (2, [1, 1, 1], [1, 1, 1]));
        assert_eq!(a.det, BigInt::from(2));
        assert!(a.is_qhs && !a.is_zhs);
    }

    #[test]
    fn t_k_table() {
        for k in 1..=60u64 {
            let a = bp_analyze(2, 3, k).unwrap();
            let want = match k.gcd(&6) {
                1 | 6 => 1,
                2 => 3,
                3 => 4,
                _ => unreachable!(),
            };
            assert_eq!(a.det, BigInt::from(want), "k = {k}");
            assert_eq!(a.exceptional_genus == 1, k % 6 == 0);
        }
    }

    #[test]
    fn consistency_examples() {
        assert!(bp_consistency(2, 3, 5).unwrap());
        assert!(bp_consistency(4, 6, 10).unwrap());
        assert!(bp_consistency(1, 1, 1).unwrap());
    }

    #[test]
    fn graph_and_wly_agree_with_closed_form() {
        for n in [[2, 3, 5], [4, 6, 10], [2, 2, 7], [3, 3, 3], [6, 4, 8], [2, 3, 6]] {
            let a = bp_analyze(n[0], n[1], n[2]).unwrap();
            let g = bp_graph(&a);
            assert_eq!(det_singularity(&g).unwrap(), a.det, "{n:?}");
            let c = classify_link(&g).unwrap();
            assert_eq!((c.is_qhs, c.is_zhs), (a.is_qhs, a.is_zhs));
            let w = bp_wly_data(&a, 1).unwrap();
            assert_eq!(crate::leyomdin::wly_det(&w).unwrap(), a.det);
        }
    }

    #[test]
    fn family4_examples() {
        let i = Family4Input { n: [1, 2, 3, 5], b2: [1, 0], b3: [0, 0, 0] };
        let a = family4_analyze(&i).unwrap();
        assert_eq!((a.b, a.m), (2, 1));
        assert_eq!(a.det_closed, Some(BigInt::one()));
        assert!(a.is_zhs && family4_zhs_criterion(&i));
        assert_eq!(a.a1(1), Rational::one());

        let i = Family4Input { n: [1, 2, 3, 5], b2: [0, 5], b3: [0, 0, 0] };
        let a = family4_analyze(&i).unwrap();
        assert_eq!((a.b, a.m), (5, 5));
        assert_eq!(a.det_closed, Some(BigInt::from(81)));
        assert_eq!(a.det_remark, int(81));
        assert!(!a.is_zhs && !family4_zhs_criterion(&i));
        for dq in 1..=10 {
            assert_eq!(a.det_graph(dq).unwrap(), BigInt::from(81));
        }

        let i = Family4Input { n: [1, 2, 3, 5], b2: [0, 0], b3: [1, 0, 0] };
        assert!(matches!(family4_analyze(&i), Err(Error::Argument(_))));

        let i = Family4Input { n: [1, 2, 4, 5], b2: [1, 1], b3: [0, 0, 0] };
        assert!(!family4_zhs_criterion(&i));
    }
}
