//! Decorated partial-resolution graphs.
//!
//! A vertex is an exceptional curve (genus, rational self-intersection,
//! orders of the cyclic quotient points of the ambient surface lying on it).
//! Edges carry rational intersection numbers, as happens on orbifold
//! surfaces. The determinant of the singularity is
//!
//! ```text
//! det S = det(-A) * prod(orders of the quotient points)
//! ```
//!
//! and must be a positive integer.

use crate::error::{Error, Result};
use crate::exactmath::{det_exact, format_rational, int, parse_rational, RatMatrix, Rational};
use crate::quotientsing::{self, CyclicQuotient, NormalizedQuotient};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub genus: u64,
    /// `None` until solved from pullback relations.
    pub self_intersection: Option<Rational>,
    pub quotient_points: Vec<u64>,
    /// Intersection with the strict transform of the reference divisor.
    pub contact: Rational,
    /// Coefficient in the pullback of the reference divisor.
    pub multiplicity: Rational,
}

impl Vertex {
    /// Rational curve with known self-intersection and nothing attached.
    pub fn rational(self_intersection: Rational) -> Self {
        Vertex {
            genus: 0,
            self_intersection: Some(self_intersection),
            quotient_points: Vec::new(),
            contact: Rational::zero(),
            multiplicity: Rational::one(),
        }
    }

    /// Curve whose self-intersection is to be solved.
    pub fn unknown(genus: u64, multiplicity: Rational, contact: Rational) -> Self {
        Vertex {
            genus,
            self_intersection: None,
            quotient_points: Vec::new(),
            contact,
            multiplicity,
        }
    }

    pub fn with_points(mut self, orders: &[u64]) -> Self {
        self.quotient_points.extend_from_slice(orders);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub intersection: Rational,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PlumbingGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

/// Homological data of the link.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkClassification {
    pub rank_h1: u64,
    /// `det S`; the order of the torsion of `H1` when the link is a QHS.
    pub torsion_order: BigInt,
    pub is_qhs: bool,
    pub is_zhs: bool,
}

impl PlumbingGraph {
    pub fn add_vertex(&mut self, v: Vertex) -> usize {
        self.vertices.push(v);
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize, intersection: Rational) {
        self.edges.push(Edge { u, v, intersection });
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.vertices.len();
        for e in &self.edges {
            if e.u >= n || e.v >= n {
                return Err(Error::arg(format!("edge {}-{} out of range", e.u, e.v)));
            }
            if e.u == e.v {
                return Err(Error::arg(format!("loop at vertex {}", e.u)));
            }
            if !e.intersection.is_positive() {
                return Err(Error::arg("edge intersections must be positive"));
            }
        }
        if self.vertices.iter().any(|v| v.quotient_points.contains(&0)) {
            return Err(Error::arg("quotient point of order 0"));
        }
        Ok(())
    }

    /// First Betti number of the underlying graph (number of independent cycles).
    pub fn cycle_rank(&self) -> u64 {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut cycles = 0;
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a == b {
                cycles += 1;
            } else {
                parent[a] = b;
            }
        }
        cycles
    }

    pub fn total_genus(&self) -> u64 {
        self.vertices.iter().map(|v| v.genus).sum()
    }

    /// Product of all annotated quotient orders.
    pub fn orders_product(&self) -> BigInt {
        crate::exactmath::big_product(self.vertices.iter().flat_map(|v| v.quotient_points.iter().copied()))
    }
}

/// Diagonal: self-intersections; off-diagonal: summed edge intersections.
pub fn intersection_matrix(g: &PlumbingGraph) -> Result<RatMatrix> {
    g.validate()?;
    let n = g.vertices.len();
    let mut a = RatMatrix::zeros(n);
    for (i, v) in g.vertices.iter().enumerate() {
        a[(i, i)] = v
            .self_intersection
            .clone()
            .ok_or_else(|| Error::State(format!("self-intersection of vertex {i} is unknown")))?;
    }
    for e in &g.edges {
        a[(e.u, e.v)] += &e.intersection;
        a[(e.v, e.u)] += &e.intersection;
    }
    Ok(a)
}

/// `det(-A) * prod(orders)` without definiteness or integrality checks.
pub fn det_rational(g: &PlumbingGraph) -> Result<Rational> {
    let a = intersection_matrix(g)?;
    Ok(det_exact(&a.neg())? * Rational::from_integer(g.orders_product()))
}

/// `det S = det(-A) * prod(orders)`, checked to be a positive integer of a
/// negative definite configuration.
pub fn det_singularity(g: &PlumbingGraph) -> Result<BigInt> {
    let a = intersection_matrix(g)?;
    if !a.is_negative_definite() {
        return Err(Error::consistency("intersection matrix is not negative definite"));
    }
    let det = det_exact(&a.neg())? * Rational::from_integer(g.orders_product());
    if !det.is_integer() || !det.is_positive() {
        return Err(Error::consistency(format!(
            "determinant {} is not a positive integer",
            format_rational(&det)
        )));
    }
    Ok(det.to_integer())
}

/// Solve `E_v . phi^*Y = 0` for every vertex:
/// `self_v = -(contact_v + sum_{u != v} N_u (E_u . E_v)) / N_v`.
pub fn solve_self_intersections(g: &PlumbingGraph) -> Result<PlumbingGraph> {
    g.validate()?;
    let n = g.vertices.len();
    let mut off = vec![Rational::zero(); n];
    for e in &g.edges {
        off[e.u] += &g.vertices[e.v].multiplicity * &e.intersection;
        off[e.v] += &g.vertices[e.u].multiplicity * &e.intersection;
    }
    let mut out = g.clone();
    for (i, v) in out.vertices.iter_mut().enumerate() {
        if v.multiplicity.is_zero() {
            return Err(Error::arg(format!("multiplicity of vertex {i} is zero")));
        }
        v.self_intersection = Some(-(&v.contact + &off[i]) / &v.multiplicity);
    }
    Ok(out)
}

/// Rank of `H1` of the link, the determinant, and the QHS/ZHS flags.
pub fn classify_link(g: &PlumbingGraph) -> Result<LinkClassification> {
    let det = det_singularity(g)?;
    let rank_h1 = 2 * g.total_genus() + g.cycle_rank();
    let is_qhs = rank_h1 == 0;
    Ok(LinkClassification {
        rank_h1,
        is_zhs: is_qhs && det.is_one(),
        torsion_order: det,
        is_qhs,
    })
}

/// Replace the `index`-th quotient point of `vertex` (of order `d`) by the
/// bamboo of `1/d(1,q)`, attached at its first curve. The curve's
/// self-intersection drops by `q/d` and the determinant is unchanged.
pub fn resolve_quotient_point(
    g: &PlumbingGraph,
    vertex: usize,
    index: usize,
    q: u64,
) -> Result<PlumbingGraph> {
    let d = *g
        .vertices
        .get(vertex)
        .and_then(|v| v.quotient_points.get(index))
        .ok_or_else(|| Error::arg("no such quotient point"))?;
    let mut out = g.clone();
    out.vertices[vertex].quotient_points.remove(index);
    if d == 1 {
        return Ok(out);
    }
    let nq = NormalizedQuotient::new(d, q)?;
    let bamboo = quotientsing::resolve_bamboo(&nq)?;
    let v = &mut out.vertices[vertex];
    let e = v
        .self_intersection
        .clone()
        .ok_or_else(|| Error::State("splicing needs a known self-intersection".into()))?;
    v.self_intersection = Some(e - Rational::new(BigInt::from(q), BigInt::from(d)));
    let offset = out.vertices.len();
    out.vertices.extend(bamboo.vertices);
    for b in bamboo.edges {
        out.add_edge(b.u + offset, b.v + offset, b.intersection);
    }
    out.add_edge(vertex, offset, int(1));
    Ok(out)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    vertices: Vec<JsonVertex>,
    #[serde(default)]
    edges: Vec<JsonEdge>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonVertex {
    #[serde(default)]
    genus: u64,
    #[serde(rename = "self", alias = "self_intersection", default, skip_serializing_if = "Option::is_none")]
    self_intersection: Option<JsonRational>,
    #[serde(default)]
    orders: Vec<JsonOrder>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    contact: Option<JsonRational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mult: Option<JsonRational>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonEdge {
    u: usize,
    v: usize,
    i: JsonRational,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonRational {
    Int(i64),
    Text(String),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonOrder {
    Int(u64),
    Text(String),
}

impl JsonRational {
    fn value(&self) -> Result<Rational> {
        match self {
            JsonRational::Int(n) => Ok(int(*n)),
            JsonRational::Text(s) => parse_rational(s),
        }
    }
}

impl JsonOrder {
    fn value(&self) -> Result<u64> {
        match self {
            JsonOrder::Int(n) => Ok(*n),
            JsonOrder::Text(s) => match s.trim().parse::<u64>() {
                Ok(n) => Ok(n),
                Err(_) => Ok(quotientsing::order(&s.parse::<CyclicQuotient>()?)),
            },
        }
    }
}

impl PlumbingGraph {
    /// Parse the JSON graph format; rationals may be strings `"p/q"` or
    /// integers, quotient points may be orders or `"1/d(a,b)"`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: JsonGraph = serde_json::from_str(text)
            .map_err(|e| Error::arg(format!("invalid graph JSON: {e}")))?;
        let mut g = PlumbingGraph::default();
        for v in &raw.vertices {
            g.vertices.push(Vertex {
                genus: v.genus,
                self_intersection: v.self_intersection.as_ref().map(JsonRational::value).transpose()?,
                quotient_points: v.orders.iter().map(JsonOrder::value).collect::<Result<_>>()?,
                contact: v.contact.as_ref().map(JsonRational::value).transpose()?.unwrap_or_default(),
                multiplicity: v
                    .mult
                    .as_ref()
                    .map(JsonRational::value)
                    .transpose()?
                    .unwrap_or_else(Rational::one),
            });
        }
        for e in &raw.edges {
            g.add_edge(e.u, e.v, e.i.value()?);
        }
        g.validate()?;
        Ok(g)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let text = |r: &Rational| JsonRational::Text(format_rational(r));
        let raw = JsonGraph {
            vertices: self
                .vertices
                .iter()
                .map(|v| JsonVertex {
                    genus: v.genus,
                    self_intersection: v.self_intersection.as_ref().map(text),
                    orders: v.quotient_points.iter().map(|&o| JsonOrder::Int(o)).collect(),
                    contact: Some(text(&v.contact)),
                    mult: Some(text(&v.multiplicity)),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| JsonEdge { u: e.u, v: e.v, i: text(&e.intersection) })
                .collect(),
        };
        serde_json::to_value(raw).expect("graph serializes")
    }
}

/// The `E8` configuration: eight `(-2)`-curves, arms of length 1, 2 and 4
/// around a central curve.
pub fn e8_graph() -> PlumbingGraph {
    let mut g = PlumbingGraph::default();
    for _ in 0..8 {
        g.add_vertex(Vertex::rational(int(-2)));
    }
    for (u, v) in [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7)] {
        g.add_edge(u, v, int(1));
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn bamboo(ws: &[i64]) -> PlumbingGraph {
        let mut g = PlumbingGraph::default();
        for (i, &w) in ws.iter().enumerate() {
            g.add_vertex(Vertex::rational(int(w)));
            if i > 0 {
                g.add_edge(i - 1, i, int(1));
            }
        }
        g
    }

    #[test]
    fn matrices() {
        let a = intersection_matrix(&bamboo(&[-3, -2])).unwrap();
        assert_eq!(a, RatMatrix::from_i64(&[vec![-3, 1], vec![1, -2]]).unwrap());
        let a = intersection_matrix(&bamboo(&[-7])).unwrap();
        assert_eq!(a, RatMatrix::from_i64(&[vec![-7]]).unwrap());
        let mut g = PlumbingGraph::default();
        g.add_vertex(Vertex::unknown(0, int(1), int(1)));
        assert!(matches!(intersection_matrix(&g), Err(Error::State(_))));
    }

    #[test]
    fn determinants() {
        assert_eq!(det_singularity(&bamboo(&[-3, -2])).unwrap(), BigInt::from(5));
        assert_eq!(det_singularity(&e8_graph()).unwrap(), BigInt::one());
        // not negative definite
        assert!(matches!(det_singularity(&bamboo(&[-1, -1])), Err(Error::Consistency(_))));
        // a rational determinant is rejected
        let mut g = PlumbingGraph::default();
        g.add_vertex(Vertex::rational(rat(-5, 2)));
        assert!(matches!(det_singularity(&g), Err(Error::Consistency(_))));
        g.vertices[0].quotient_points.push(2);
        assert_eq!(det_singularity(&g).unwrap(), BigInt::from(5));
    }

    #[test]
    fn classification() {
        let c = classify_link(&bamboo(&[-2, -2])).unwrap();
        assert_eq!((c.torsion_order.clone(), c.is_qhs, c.is_zhs), (BigInt::from(3), true, false));
        let c = classify_link(&e8_graph()).unwrap();
        assert!(c.is_zhs);
        let mut g = PlumbingGraph::default();
        g.add_vertex(Vertex { genus: 1, ..Vertex::rational(int(-1)) });
        let c = classify_link(&g).unwrap();
        assert_eq!(c.rank_h1, 2);
        assert!(!c.is_qhs);
    }

    #[test]
    fn solve_single_vertex() {
        let mut g = PlumbingGraph::default();
        g.add_vertex(Vertex::unknown(0, int(1), int(4)));
        let s = solve_self_intersections(&g).unwrap();
        assert_eq!(s.vertices[0].self_intersection, Some(int(-4)));
        g.vertices[0].multiplicity = Rational::zero();
        assert!(matches!(solve_self_intersections(&g), Err(Error::Argument(_))));
    }

    #[test]
    fn superisolated_by_pullback() {
        // Pull back a generic linear form: every component C_i of the tangent
        // cone has multiplicity 1 and meets the strict transform in delta_i
        // points, while C_i . C_j = delta_i delta_j.
        let (d, deltas) = (3i64, [1i64, 2]);
        let mut g = PlumbingGraph::default();
        for &di in &deltas {
            g.add_vertex(Vertex::unknown(0, int(1), int(di)));
        }
        g.add_edge(0, 1, int(deltas[0] * deltas[1]));
        let s = solve_self_intersections(&g).unwrap();
        for (v, &di) in s.vertices.iter().zip(&deltas) {
            assert_eq!(v.self_intersection, Some(int(-di * (d - di + 1))));
        }
        assert_eq!(det_singularity(&s).unwrap(), BigInt::from(8));
    }

    #[test]
    fn splice_keeps_determinant() {
        let mut g = PlumbingGraph::default();
        g.add_vertex(Vertex::rational(rat(-9, 5)).with_points(&[5]));
        let before = det_rational(&g).unwrap();
        let after = det_rational(&resolve_quotient_point(&g, 0, 0, 2).unwrap()).unwrap();
        assert_eq!(before, after);
        assert_eq!(before, int(9));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"vertices":[{"genus":0,"self":"-5/2","orders":[3],"contact":"1","mult":"2"},
                      {"genus":0,"self":"-3","orders":["1/5(1,2)"]}],
                      "edges":[{"u":0,"v":1,"i":"1/3"}]}"#;
        let g = PlumbingGraph::from_json(text).unwrap();
        assert_eq!(g.vertices[1].quotient_points, vec![5]);
        assert_eq!(g.edges[0].intersection, rat(1, 3));
        let again = PlumbingGraph::from_json(&g.to_json().to_string()).unwrap();
        assert_eq!(g, again);
        assert!(PlumbingGraph::from_json(r#"{"vertices":[{}],"edges":[{"u":0,"v":0,"i":"1"}]}"#).is_err());
    }
}
