//! Determinants of superisolated and (weighted) Le-Yomdin singularities.
//!
//! `F = f_d + f_{d+k} + ...` whose tangent cone `C_d = {f_d = 0}` has
//! components of degrees `delta_i`. One (weighted) blow-up gives a partial
//! resolution whose exceptional curves are the components of `C_d`, so
//!
//! ```text
//! det S = delta_1...delta_s * ((d+k)/k)^(s-1) * prod det S_{P,k}
//! ```
//!
//! where `S_{P,k}` is `z^k = f_P(x,y)` at each singular point of `C_d`.

use crate::bpfamily::bp_analyze;
use crate::error::{Error, Result};
use crate::exactmath::{big_product, format_rational, int, rat_pow, RatMatrix, Rational};
use crate::wproj::{normalize_weight, Weight3};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

fn positive_integer(r: Rational, what: &str) -> Result<BigInt> {
    if r.is_integer() && r.is_positive() {
        Ok(r.to_integer())
    } else {
        Err(Error::consistency(format!("{what} = {} is not a positive integer", format_rational(&r))))
    }
}

fn check_partition(d: u64, deltas: &[u64]) -> Result<()> {
    if deltas.is_empty() || deltas.contains(&0) {
        return Err(Error::arg("component degrees must be positive and nonempty"));
    }
    if deltas.iter().sum::<u64>() != d {
        return Err(Error::arg(format!("degrees {deltas:?} do not add up to {d}")));
    }
    Ok(())
}

/// `(d+1)^(s-1) * delta_1...delta_s`.
pub fn si_det(d: u64, deltas: &[u64]) -> Result<BigInt> {
    check_partition(d, deltas)?;
    Ok(BigInt::from(d + 1).pow(deltas.len() as u32 - 1) * big_product(deltas.iter().copied()))
}

/// Exceptional intersection matrix after blowing up a superisolated point:
/// `C_i^2 = -delta_i (d - delta_i + 1)`, `C_i . C_j = delta_i delta_j`.
pub fn si_intersection_matrix(d: u64, deltas: &[u64]) -> Result<RatMatrix> {
    check_partition(d, deltas)?;
    let s = deltas.len();
    let mut a = RatMatrix::zeros(s);
    for i in 0..s {
        for j in 0..s {
            let (di, dj) = (deltas[i] as i64, deltas[j] as i64);
            a[(i, j)] = if i == j { int(-di * (d as i64 - di + 1)) } else { int(di * dj) };
        }
    }
    Ok(a)
}

/// The closed form without the integrality check.
pub fn ly_det_rational(d: u64, k: u64, deltas: &[u64], germ_dets: &[u64]) -> Result<Rational> {
    check_partition(d, deltas)?;
    if k == 0 {
        return Err(Error::arg("k must be positive"));
    }
    let ratio = Rational::new(BigInt::from(d + k), BigInt::from(k));
    Ok(Rational::from_integer(big_product(deltas.iter().copied()))
        * rat_pow(&ratio, deltas.len() as i64 - 1)
        * Rational::from_integer(big_product(germ_dets.iter().copied())))
}

/// `delta_1...delta_s * ((d+k)/k)^(s-1) * prod germ_dets`, which must be an integer.
pub fn ly_det(d: u64, k: u64, deltas: &[u64], germ_dets: &[u64]) -> Result<BigInt> {
    positive_integer(ly_det_rational(d, k, deltas, germ_dets)?, "Le-Yomdin determinant")
}

/// Tangent cone data of an `(w, k)`-weighted Le-Yomdin singularity: the
/// cone has `s` components of degrees `delta_i` (each divisible by
/// `d1 d2 d3`) plus possibly the axes `x=0`, `y=0`, `z=0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WlyCurveData {
    pub weight: Weight3,
    pub k: u64,
    pub d: u64,
    pub eps: [bool; 3],
    pub deltas: Vec<u64>,
    pub germ_dets: Vec<u64>,
}

impl WlyCurveData {
    pub fn new(
        weight: Weight3,
        k: u64,
        d: u64,
        eps: [bool; 3],
        deltas: Vec<u64>,
        germ_dets: Vec<u64>,
    ) -> Result<Self> {
        if k == 0 || d == 0 {
            return Err(Error::arg("k and d must be positive"));
        }
        if deltas.contains(&0) || germ_dets.contains(&0) {
            return Err(Error::arg("degrees and germ determinants must be positive"));
        }
        let e = weight.e();
        let axes: u64 = (0..3).filter(|&i| eps[i]).map(|i| e[i]).sum();
        if deltas.iter().sum::<u64>() + axes != d {
            return Err(Error::arg(format!(
                "component degrees {deltas:?} plus axes {axes} do not add up to {d}"
            )));
        }
        if deltas.is_empty() && axes == 0 {
            return Err(Error::arg("the tangent cone has no components"));
        }
        let dd: u64 = normalize_weight(&weight).d.iter().product();
        if let Some(bad) = deltas.iter().find(|&&x| x % dd != 0) {
            return Err(Error::arg(format!("degree {bad} is not divisible by d1 d2 d3 = {dd}")));
        }
        Ok(WlyCurveData { weight, k, d, eps, deltas, germ_dets })
    }

    /// Components in matrix order: `(degree, multiplier)` for the curves
    /// `C_i` and then the axes present. An axis `x=0` has degree `e1` and
    /// its intersection numbers on the strict transform pick up `d1`.
    fn components(&self) -> Vec<(u64, u64)> {
        let e = self.weight.e();
        let dn = normalize_weight(&self.weight).d;
        let mut c: Vec<(u64, u64)> = self.deltas.iter().map(|&x| (x, 1)).collect();
        for i in 0..3 {
            if self.eps[i] {
                c.push((e[i], dn[i]));
            }
        }
        c
    }
}

/// Intersection matrix of the exceptional curves on the strict transform:
///
/// ```text
/// C_i^2     = -delta_i (d - delta_i + k) / (k e1e2e3)
/// C_i . C_j =  delta_i delta_j / (k e1e2e3)
/// X^2       = -d1^2 (d - e1 + k) / (k e2e3)
/// C_i . X   =  d1 delta_i / (k e2e3)
/// X . Y     =  d1 d2 / (k e3)
/// ```
pub fn wly_intersection_matrix(data: &WlyCurveData) -> RatMatrix {
    let comps = data.components();
    let ke = BigInt::from(data.k) * big_product(data.weight.e());
    let dk = BigInt::from(data.d + data.k);
    let n = comps.len();
    let mut a = RatMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let (di, mi) = (BigInt::from(comps[i].0), BigInt::from(comps[i].1));
            let (dj, mj) = (BigInt::from(comps[j].0), BigInt::from(comps[j].1));
            let num = if i == j {
                -(&mi * &mi) * &di * (&dk - &di)
            } else {
                mi * mj * di * dj
            };
            a[(i, j)] = Rational::new(num, ke.clone());
        }
    }
    a
}

/// Closed form of `det(-A) * prod germ_dets` for the matrix above: with
/// `E = e1e2e3` and `t` components in total,
///
/// ```text
/// prod_axes(d_i^2 e_i) * prod(delta_i) * ((d+k)/(k E))^(t-1) / E * prod germ_dets.
/// ```
pub fn wly_det_rational(data: &WlyCurveData) -> Rational {
    let comps = data.components();
    let e_prod = big_product(data.weight.e());
    let base = Rational::new(BigInt::from(data.d + data.k), BigInt::from(data.k) * &e_prod);
    let mut r = rat_pow(&base, comps.len() as i64 - 1) / Rational::from_integer(e_prod);
    for (deg, mult) in comps {
        r *= Rational::from_integer(BigInt::from(deg) * BigInt::from(mult) * BigInt::from(mult));
    }
    r * Rational::from_integer(big_product(data.germ_dets.iter().copied()))
}

pub fn wly_det(data: &WlyCurveData) -> Result<BigInt> {
    positive_integer(wly_det_rational(data), "weighted Le-Yomdin determinant")
}

/// `z^k = x^a + y^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicGerm {
    pub a: u64,
    pub b: u64,
    pub k: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GermDet {
    #[serde(serialize_with = "crate::exactmath::ser_bigint")]
    pub det: BigInt,
    pub exceptional_genus: u64,
    pub is_qhs: bool,
}

/// Determinant and genus of `z^k = x^a + y^b`, a Brieskorn-Pham surface.
pub fn cyclic_germ_det(g: &CyclicGerm) -> Result<GermDet> {
    let a = bp_analyze(g.a, g.b, g.k)?;
    Ok(GermDet { det: a.det, exceptional_genus: a.exceptional_genus, is_qhs: a.is_qhs })
}

/// The link of a `k`-Le-Yomdin singularity is a rational homology sphere
/// iff the tangent cone is a union of rational cuspidal curves meeting in a
/// single point and every germ `z^k = f_P` has a QHS link.
pub fn ly_rhs_check(
    rational_cuspidal: &[bool],
    single_intersection_point: bool,
    germ_links_qhs: &[bool],
) -> bool {
    !rational_cuspidal.is_empty()
        && rational_cuspidal.iter().all(|&c| c)
        && (rational_cuspidal.len() == 1 || single_intersection_point)
        && germ_links_qhs.iter().all(|&q| q)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureScan {
    pub a: u64,
    pub b: u64,
    pub k_max: u64,
    #[serde(serialize_with = "ser_big_vec")]
    pub values: Vec<BigInt>,
    /// Least period `P <= k_max/3` for which every residue class is polynomial in `k`.
    pub period: Option<u64>,
    /// For residue `r = 1..=P` (class of `k = r mod P`), coefficients in `k`,
    /// constant term first.
    #[serde(serialize_with = "ser_fit")]
    pub fits: Vec<Vec<Rational>>,
    pub lcm_ab: u64,
    /// Period found and dividing `lcm(a,b)`.
    pub consistent: bool,
}

fn ser_big_vec<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string().parse::<serde_json::Number>().map_err(serde::ser::Error::custom)?)?;
    }
    seq.end()
}

fn ser_fit<S: serde::Serializer>(v: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = v.iter().map(|r| r.iter().map(format_rational).collect()).collect();
    serde::Serialize::serialize(&text, s)
}

/// Smallest `D` with vanishing `(D+1)`-th differences, confirmed by at
/// least `D+1` zero differences.
fn poly_degree(seq: &[Rational]) -> Option<usize> {
    let mut diffs: Vec<Rational> = seq.to_vec();
    let mut deg = 0;
    while 2 * (deg + 1) <= seq.len() {
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        if diffs.iter().all(Zero::is_zero) {
            return Some(deg);
        }
        deg += 1;
    }
    None
}

/// Coefficients (constant first) of the polynomial through the points.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    let n = xs.len();
    let mut out = vec![Rational::zero(); n];
    for i in 0..n {
        // basis polynomial prod_{j != i} (x - x_j)/(x_i - x_j)
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (p, c) in basis.iter().enumerate() {
                next[p + 1] += c;
                next[p] -= c * &xs[j];
            }
            basis = next;
            denom *= &xs[i] - &xs[j];
        }
        let scale = &ys[i] / denom;
        for (o, c) in out.iter_mut().zip(&basis) {
            *o += c * &scale;
        }
    }
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

/// Determinants of `z^k = x^a + y^b` for `k = 1..=k_max`, and the least
/// period of quasi-polynomial behaviour in `k`.
pub fn conjecture_scan(a: u64, b: u64, k_max: u64) -> Result<ConjectureScan> {
    if k_max < 12 {
        return Err(Error::arg("k_max must be at least 12"));
    }
    let values: Vec<BigInt> = (1..=k_max)
        .map(|k| Ok(bp_analyze(a, b, k)?.det))
        .collect::<Result<_>>()?;
    let vals: Vec<Rational> = values.iter().cloned().map(Rational::from_integer).collect();
    let mut period = None;
    let mut fits = Vec::new();
    'p: for p in 1..=k_max / 3 {
        let mut found = Vec::new();
        for r in 1..=p {
            let ks: Vec<u64> = (r..=k_max).step_by(p as usize).collect();
            let seq: Vec<Rational> = ks.iter().map(|&k| vals[(k - 1) as usize].clone()).collect();
            let Some(deg) = poly_degree(&seq) else { continue 'p };
            let xs: Vec<Rational> = ks[..=deg].iter().map(|&k| int(k as i64)).collect();
            found.push(interpolate(&xs, &seq[..=deg]));
        }
        period = Some(p);
        fits = found;
        break;
    }
    let lcm_ab = a.lcm(&b);
    Ok(ConjectureScan {
        a,
        b,
        k_max,
        values,
        consistent: period.is_some_and(|p| lcm_ab.is_multiple_of(p)),
        period,
        fits,
        lcm_ab,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ly2Candidate {
    pub d: u64,
    pub k: u64,
    pub deltas: Vec<u64>,
    pub germs: Vec<(u64, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conjecture2Report {
    pub bound: u64,
    pub examined: u64,
    pub candidates: Vec<Ly2Candidate>,
}

/// All partitions of `n` into parts `<= max`, parts non-increasing.
pub fn partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(n: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Search `d, k in 2..=bound`, all degree partitions of `d`, and up to three
/// germs `z^k = x^a + y^b` with `2 <= a <= b <= bound`, for data where the
/// determinant is 1 while the rational-homology-sphere conditions hold.
/// Such a datum would be an integral homology sphere link with `k > 1`.
pub fn conjecture2_scan(bound: u64) -> Result<Conjecture2Report> {
    if bound < 2 {
        return Err(Error::arg("bound must be at least 2"));
    }
    let pairs: Vec<(u64, u64)> = (2..=bound).flat_map(|a| (a..=bound).map(move |b| (a, b))).collect();
    let mut germ_sets: Vec<Vec<usize>> = vec![vec![]];
    for i in 0..pairs.len() {
        germ_sets.push(vec![i]);
        for j in i..pairs.len() {
            germ_sets.push(vec![i, j]);
            for l in j..pairs.len() {
                germ_sets.push(vec![i, j, l]);
            }
        }
    }
    let mut examined = 0u64;
    let mut candidates = Vec::new();
    for k in 2..=bound {
        let germ: Vec<GermDet> = pairs
            .iter()
            .map(|&(a, b)| cyclic_germ_det(&CyclicGerm { a, b, k }))
            .collect::<Result<_>>()?;
        for d in 2..=bound {
            for deltas in partitions(d) {
                let s = deltas.len() as u32;
                // det = 1  <=>  prod(delta) (d+k)^(s-1) prod(germ) = k^(s-1)
                let lhs_base = big_product(deltas.iter().copied()) * BigInt::from(d + k).pow(s - 1);
                let rhs = BigInt::from(k).pow(s - 1);
                for set in &germ_sets {
                    examined += 1;
                    if !set.iter().all(|&g| germ[g].is_qhs) {
                        continue;
                    }
                    let lhs = set.iter().fold(lhs_base.clone(), |acc, &g| acc * &germ[g].det);
                    if lhs == rhs && ly_rhs_check(&vec![true; deltas.len()], true, &[true]) {
                        candidates.push(Ly2Candidate {
                            d,
                            k,
                            deltas: deltas.clone(),
                            germs: set.iter().map(|&g| pairs[g]).collect(),
                        });
                    }
                }
            }
        }
    }
    Ok(Conjecture2Report { bound, examined, candidates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{det_exact, rat};

    #[test]
    fn si_examples() {
        assert_eq!(si_det(6, &[6]).unwrap(), BigInt::from(6));
        assert_eq!(si_det(3, &[1, 2]).unwrap(), BigInt::from(8));
        assert_eq!(si_det(2, &[1, 1]).unwrap(), BigInt::from(3));
        assert!(si_det(3, &[1, 1]).is_err());
        let a = si_intersection_matrix(3, &[1, 2]).unwrap();
        assert_eq!(a, RatMatrix::from_i64(&[vec![-3, 2], vec![2, -4]]).unwrap());
    }

    #[test]
    fn ly_examples() {
        // tricuspidal quartic, three (2,3,5) germs
        let g = cyclic_germ_det(&CyclicGerm { a: 2, b: 3, k: 5 }).unwrap().det;
        assert_eq!(g, BigInt::one());
        assert_eq!(ly_det(4, 5, &[4], &[1, 1, 1]).unwrap(), BigInt::from(4));
        assert_eq!(ly_det(7, 3, &[7], &[]).unwrap(), BigInt::from(7));
        assert_eq!(ly_det(3, 1, &[1, 2], &[]).unwrap(), si_det(3, &[1, 2]).unwrap());
        // (d+k)/k = 5/3 with s = 2 gives 2*5/3: rejected
        assert!(matches!(ly_det(2, 3, &[1, 1], &[]), Err(Error::Consistency(_))));
    }

    #[test]
    fn wly_examples() {
        let w = Weight3::new(1, 2, 3).unwrap();
        let data = WlyCurveData::new(w, 1, 12, [false; 3], vec![12], vec![]).unwrap();
        assert_eq!(wly_det(&data).unwrap(), BigInt::from(2));
        assert_eq!(wly_intersection_matrix(&data), RatMatrix::from_rows(vec![vec![int(-2)]]).unwrap());
        let data = WlyCurveData::new(w, 1, 7, [false; 3], vec![7], vec![]).unwrap();
        assert!(matches!(wly_det(&data), Err(Error::Consistency(_))));

        let one = Weight3::new(1, 1, 1).unwrap();
        let data = WlyCurveData::new(one, 1, 5, [false; 3], vec![2, 3], vec![]).unwrap();
        assert_eq!(wly_det(&data).unwrap(), si_det(5, &[2, 3]).unwrap());
    }

    #[test]
    fn wly_axis_vertex_term() {
        let w = Weight3::new(2, 3, 5).unwrap();
        let data = WlyCurveData::new(w, 2, 35, [true, true, false], vec![30], vec![]).unwrap();
        let a = wly_intersection_matrix(&data);
        // X . Y = d1 d2 / (k e3) = 1/(k alpha3)
        assert_eq!(a[(1, 2)], rat(1, 10));
        let det = det_exact(&a.neg()).unwrap();
        assert_eq!(det, wly_det_rational(&data));
    }

    #[test]
    fn wly_validation() {
        let w = Weight3::new(6, 10, 15).unwrap();
        assert!(WlyCurveData::new(w, 1, 60, [false; 3], vec![60], vec![]).is_ok());
        assert!(WlyCurveData::new(w, 1, 20, [false; 3], vec![20], vec![]).is_err());
        assert!(WlyCurveData::new(w, 1, 30, [false; 3], vec![60], vec![]).is_err());
    }

    #[test]
    fn cyclic_germs() {
        for k in 1..20 {
            let g = cyclic_germ_det(&CyclicGerm { a: 2, b: 2, k }).unwrap();
            assert_eq!(g.det, BigInt::from(k));
        }
        let g = cyclic_germ_det(&CyclicGerm { a: 2, b: 3, k: 6 }).unwrap();
        assert_eq!(g.exceptional_genus, 1);
    }

    #[test]
    fn rhs_flags() {
        assert!(ly_rhs_check(&[true], false, &[true, true]));
        assert!(!ly_rhs_check(&[false], true, &[]));
        assert!(!ly_rhs_check(&[true, true], false, &[]));
        assert!(ly_rhs_check(&[true, true], true, &[]));
    }

    #[test]
    fn scans() {
        let s = conjecture_scan(2, 3, 60).unwrap();
        assert_eq!(s.period, Some(6));
        assert!(s.fits.iter().all(|f| f.len() == 1));
        assert_eq!(s.fits[0], vec![int(1)]);
        assert_eq!(s.fits[1], vec![int(3)]);
        assert_eq!(s.fits[2], vec![int(4)]);
        assert!(s.consistent);

        let s = conjecture_scan(2, 2, 60).unwrap();
        assert_eq!(s.period, Some(1));
        assert_eq!(s.fits, vec![vec![int(0), int(1)]]);
        assert!(conjecture_scan(2, 3, 11).is_err());
    }

    #[test]
    fn partitions_count() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn small_conjecture2_scan_is_empty() {
        let r = conjecture2_scan(4).unwrap();
        assert!(r.candidates.is_empty());
        assert!(r.examined > 0);
    }
}
