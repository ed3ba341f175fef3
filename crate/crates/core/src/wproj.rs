//! Weighted projective planes `P^2_w`, `w = (e1,e2,e3)`.
//!
//! With `d_k = gcd(e_i, e_j)` and `alpha_k = e_k / (d_i d_j)` the weights
//! `eta = (alpha_1, alpha_2, alpha_3)` are pairwise coprime and
//! `[x:y:z]_w -> [x^d1 : y^d2 : z^d3]_eta` is an isomorphism.

use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::quotientsing::CyclicQuotient;
use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Positive weights with `gcd(e1,e2,e3) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Weight3 {
    e: [u64; 3],
}

impl Weight3 {
    pub fn new(e1: u64, e2: u64, e3: u64) -> Result<Self> {
        if e1 == 0 || e2 == 0 || e3 == 0 {
            return Err(Error::arg("weights must be positive"));
        }
        if e1.gcd(&e2).gcd(&e3) != 1 {
            return Err(Error::arg(format!("gcd({e1},{e2},{e3}) != 1")));
        }
        Ok(Weight3 { e: [e1, e2, e3] })
    }

    pub fn e(&self) -> [u64; 3] {
        self.e
    }

    pub fn product(&self) -> u64 {
        self.e.iter().product()
    }
}

impl fmt::Display for Weight3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.e[0], self.e[1], self.e[2])
    }
}

impl FromStr for Weight3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v = parse_triple(s)?;
        Weight3::new(v[0], v[1], v[2])
    }
}

/// Parse `"a,b,c"` into three unsigned integers.
pub fn parse_triple(s: &str) -> Result<[u64; 3]> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::arg(format!("expected three comma-separated integers, got {s:?}")));
    }
    let mut out = [0u64; 3];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p.parse().map_err(|_| Error::arg(format!("not an integer: {p:?}")))?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WeightNormalization {
    pub d: [u64; 3],
    pub alpha: [u64; 3],
}

pub fn normalize_weight(w: &Weight3) -> WeightNormalization {
    let [e1, e2, e3] = w.e;
    let d = [e2.gcd(&e3), e1.gcd(&e3), e1.gcd(&e2)];
    let alpha = [e1 / (d[1] * d[2]), e2 / (d[0] * d[2]), e3 / (d[0] * d[1])];
    WeightNormalization { d, alpha }
}

fn pairwise_coprime(v: &[u64]) -> bool {
    (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i].gcd(&v[j]) == 1))
}

/// `P_x = 1/a1(a2,a3)`, `P_y = 1/a2(a1,a3)`, `P_z = 1/a3(a1,a2)`; order 1
/// means smooth.
pub fn vertex_singularities(eta: [u64; 3]) -> Result<[CyclicQuotient; 3]> {
    if eta.contains(&0) || !pairwise_coprime(&eta) {
        return Err(Error::arg(format!("weights {eta:?} are not pairwise coprime")));
    }
    let [a1, a2, a3] = eta.map(|a| a as i64);
    Ok([
        CyclicQuotient::new(eta[0], a2, a3)?,
        CyclicQuotient::new(eta[1], a1, a3)?,
        CyclicQuotient::new(eta[2], a1, a2)?,
    ])
}

/// Weighted Bezout: two curves of degrees `deg1`, `deg2` meet in
/// `deg1 deg2 / (e1 e2 e3)` points.
pub fn bezout(deg1: u64, deg2: u64, w: &Weight3) -> Rational {
    Rational::new(
        BigInt::from(deg1) * BigInt::from(deg2),
        BigInt::from(w.product()),
    )
}

/// Genus of a quasi-smooth curve of degree `deg_eta` in `P^2_eta`:
/// `d (d - |eta|) / (2 a1 a2 a3) + 1`.
pub fn quasi_smooth_genus(deg_eta: i64, eta: [u64; 3]) -> Rational {
    let d = BigInt::from(deg_eta);
    let sum: u64 = eta.iter().sum();
    let prod: u64 = eta.iter().product();
    Rational::new(&d * (&d - BigInt::from(sum)), BigInt::from(2 * prod)) + Rational::from_integer(1.into())
}

/// Parameters of the weighted Cremona map
/// `[x:y:z]_w -> [y^a1 z : x^a2 z : x^b1 y^b2]`, `w = (a1,a2,a3)`.
///
/// Requires `a_i` pairwise coprime and `a1 b1 + a2 b2 = a3 + a1 a2`, so all
/// three coordinates have `w`-degree `a1 a2 + a3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CremonaParams {
    pub alpha: [u64; 3],
    pub beta: [u64; 2],
}

impl CremonaParams {
    pub fn new(alpha: [u64; 3], beta: [u64; 2]) -> Result<Self> {
        if alpha.contains(&0) || !pairwise_coprime(&alpha) {
            return Err(Error::arg(format!("alpha {alpha:?} must be positive and pairwise coprime")));
        }
        let [a1, a2, a3] = alpha;
        let [b1, b2] = beta;
        if a1 * b1 + a2 * b2 != a3 + a1 * a2 {
            return Err(Error::arg(format!(
                "a1*b1 + a2*b2 = {} but a3 + a1*a2 = {}",
                a1 * b1 + a2 * b2,
                a3 + a1 * a2
            )));
        }
        Ok(CremonaParams { alpha, beta })
    }

    /// Parse `"a1,a2,a3"` and `"b1,b2"`.
    pub fn parse(alpha: &str, beta: &str) -> Result<Self> {
        let a = parse_triple(alpha)?;
        let parts: Vec<&str> = beta.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::arg(format!("expected two integers, got {beta:?}")));
        }
        let b: Vec<u64> = parts
            .iter()
            .map(|p| p.parse().map_err(|_| Error::arg(format!("not an integer: {p:?}"))))
            .collect::<Result<_>>()?;
        Self::new(a, [b[0], b[1]])
    }

    /// `A = a1 a2 + a3`, the degree of each coordinate of the map.
    pub fn degree_unit(&self) -> u64 {
        self.alpha[0] * self.alpha[1] + self.alpha[2]
    }

    pub fn weight(&self) -> Weight3 {
        Weight3 { e: self.alpha }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum StratumLabel {
    T,
    Lx,
    Ly,
    Lz,
    Px,
    Py,
    Pz,
}

/// The seven pieces of the torus-orbit decomposition of `P^2_w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PointClass {
    Torus,
    /// Open part of `{x=0}`.
    AxisX,
    AxisY,
    AxisZ,
    /// `[1:0:0]`.
    VertexX,
    VertexY,
    VertexZ,
}

impl PointClass {
    pub const ALL: [PointClass; 7] = [
        PointClass::Torus,
        PointClass::AxisX,
        PointClass::AxisY,
        PointClass::AxisZ,
        PointClass::VertexX,
        PointClass::VertexY,
        PointClass::VertexZ,
    ];
}

/// Transverse type of the ambient 3-fold along a stratum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Germ {
    Smooth,
    /// `(C,0) x 1/d(a,b)`.
    Product { d: u64, a: u64, b: u64 },
    /// `1/d(a1,a2,a3)` in `C^3`.
    ThreeFold { d: u64, a: [u64; 3] },
}

impl fmt::Display for Germ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Germ::Smooth => write!(f, "smooth"),
            Germ::Product { d, a, b } => write!(f, "(C,0)x1/{d}({a},{b})"),
            Germ::ThreeFold { d, a } => write!(f, "1/{d}({},{},{})", a[0], a[1], a[2]),
        }
    }
}

/// How the axis stratum `L_i` sits on its axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AxisShape {
    Empty,
    Open,
    /// Open axis together with one vertex.
    OpenWith(PointClass),
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub label: StratumLabel,
    pub members: Vec<PointClass>,
    pub germ: Germ,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Strata {
    pub strata: Vec<Stratum>,
}

impl Strata {
    /// The stratum containing `p`.
    pub fn label_of(&self, p: PointClass) -> Option<StratumLabel> {
        self.strata.iter().find(|s| s.members.contains(&p)).map(|s| s.label)
    }

    pub fn get(&self, label: StratumLabel) -> &Stratum {
        self.strata.iter().find(|s| s.label == label).expect("all labels present")
    }
}

/// Axis `i` (0 for `{x=0}`), its open class and its two vertices.
fn axis_data(i: usize) -> (PointClass, [(usize, PointClass); 2]) {
    match i {
        0 => (PointClass::AxisX, [(1, PointClass::VertexY), (2, PointClass::VertexZ)]),
        1 => (PointClass::AxisY, [(0, PointClass::VertexX), (2, PointClass::VertexZ)]),
        _ => (PointClass::AxisZ, [(0, PointClass::VertexX), (1, PointClass::VertexY)]),
    }
}

/// Decision table for `L_i`, with `d_i` the gcd of the two other weights
/// `e_j`, `e_k` (the weights of the vertices on the axis).
pub fn axis_shape(w: &Weight3, i: usize) -> AxisShape {
    let e = w.e;
    let di = normalize_weight(w).d[i];
    let (_, [(j, pj), (k, pk)]) = axis_data(i);
    if di == 1 {
        AxisShape::Empty
    } else if di == e[j] && di == e[k] {
        AxisShape::Full
    } else if di == e[j] {
        AxisShape::OpenWith(pj)
    } else if di == e[k] {
        AxisShape::OpenWith(pk)
    } else {
        AxisShape::Open
    }
}

fn vertex_is_stratum(w: &Weight3, i: usize) -> bool {
    let e = w.e;
    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
    !e[j].is_multiple_of(e[i]) && !e[k].is_multiple_of(e[i])
}

fn members_of(w: &Weight3, label: StratumLabel) -> Vec<PointClass> {
    let vertex_class = [PointClass::VertexX, PointClass::VertexY, PointClass::VertexZ];
    match label {
        StratumLabel::T => {
            let mut m = vec![PointClass::Torus];
            for i in 0..3 {
                if axis_shape(w, i) == AxisShape::Empty {
                    m.push(axis_data(i).0);
                }
            }
            for (i, &v) in vertex_class.iter().enumerate() {
                if w.e[i] == 1 {
                    m.push(v);
                }
            }
            m
        }
        StratumLabel::Lx | StratumLabel::Ly | StratumLabel::Lz => {
            let i = label as usize - StratumLabel::Lx as usize;
            let (open, [(_, p), (_, q)]) = axis_data(i);
            match axis_shape(w, i) {
                AxisShape::Empty => vec![],
                AxisShape::Open => vec![open],
                AxisShape::OpenWith(v) => vec![open, v],
                AxisShape::Full => vec![open, p, q],
            }
        }
        StratumLabel::Px | StratumLabel::Py | StratumLabel::Pz => {
            let i = label as usize - StratumLabel::Px as usize;
            if vertex_is_stratum(w, i) {
                vec![vertex_class[i]]
            } else {
                vec![]
            }
        }
    }
}

fn germ_of(w: &Weight3, label: StratumLabel) -> Germ {
    let e = w.e;
    let d = normalize_weight(w).d;
    let neg = |m: u64| m - 1;
    match label {
        StratumLabel::T => Germ::Smooth,
        StratumLabel::Lx | StratumLabel::Ly | StratumLabel::Lz => {
            let i = label as usize - StratumLabel::Lx as usize;
            if d[i] == 1 {
                Germ::Smooth
            } else {
                Germ::Product { d: d[i], a: e[i] % d[i], b: neg(d[i]) }
            }
        }
        StratumLabel::Px | StratumLabel::Py | StratumLabel::Pz => {
            let i = label as usize - StratumLabel::Px as usize;
            let m = e[i];
            let mut a = [e[0] % m, e[1] % m, e[2] % m];
            a[i] = neg(m);
            Germ::ThreeFold { d: m, a }
        }
    }
}

/// Strata of the exceptional divisor of the `w`-blow-up, each with its
/// transverse germ type (`(C,0) x 1/d1(e1,-1)` along `L_x`,
/// `1/e3(e1,e2,-1)` at `P_z`, ...).
pub fn stratify(w: &Weight3) -> Strata {
    use StratumLabel::*;
    let strata = [T, Lx, Ly, Lz, Px, Py, Pz]
        .into_iter()
        .map(|label| Stratum { label, members: members_of(w, label), germ: germ_of(w, label) })
        .collect();
    Strata { strata }
}
