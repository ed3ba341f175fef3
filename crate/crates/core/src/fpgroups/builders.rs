//! Presentations of the complement groups of the cubic and conic
//! arrangements, their quotients, and a few classical groups.

use super::word::{GroupPresentation, Word};
use crate::error::{Error, Result};
use crate::exactmath::mod_inverse;
use crate::wproj::CremonaParams;
use num_integer::Integer;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builder {
    /// Smooth cubic and three inflectional tangents at aligned flexes.
    GrupoP2,
    /// `GrupoP2` with the meridians of the three exceptional curves killed.
    CubicQuotient(CremonaParams),
    /// Two-generator form of `CubicQuotient`.
    Pres1(CremonaParams),
    /// `< l, u | l^A, u^3 l^-2 >`.
    PresOdd(u64),
    /// Smooth conic and three tangent lines.
    Conic,
    /// `Conic` with the meridians of the three exceptional curves killed.
    ConicQuotient(CremonaParams),
    /// Two-generator form of `ConicQuotient` using that `u^2` is central.
    ConicSimplified(CremonaParams),
    /// `Conic` with `l_x^d1 = l_y^d2 = l_z^d3 = 1`.
    Orbifold([u64; 3]),
    Triangle(u64, u64, u64),
    /// Rational sextic with four cusps in the plane of weights `(1,1,2)`.
    Quartic,
    Cyclic(u64),
}

pub const BUILDER_NAMES: [&str; 11] = [
    "grupo_p2",
    "cubic_quotient",
    "pres1",
    "pres_odd",
    "conic",
    "conic_quotient",
    "conic_simplified",
    "orbifold",
    "triangle",
    "quartic",
    "cyclic",
];

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn g(i: usize) -> Word {
    Word::gen(i)
}

fn gp(i: usize, e: u64) -> Word {
    Word::power_of(i, e as i64)
}

fn prod(ws: &[Word]) -> Word {
    ws.iter().fold(Word::identity(), |a, b| a.mul(b))
}

fn comm(a: &Word, b: &Word) -> Word {
    Word::commutator(a, b)
}

/// `(h1, h2)` with `a2 h1 - a1 h2 = 1` and `0 <= h1 < a1` (`h1 = 0` when `a1 = 1`).
pub fn bezout_hats(a1: u64, a2: u64) -> Result<(i64, i64)> {
    let (a1, a2) = (a1 as i64, a2 as i64);
    let h1 = if a1 == 1 { 0 } else { mod_inverse(a2, a1)? };
    Ok((h1, (a2 * h1 - 1) / a1))
}

/// `[l_x,l_y], [l_y,l_z], [l_z,l_x], [c, l_x^-1 l_z], [c, l_y^-1 l_z], c l_x c l_y c l_z`.
fn grupo_p2_relators() -> Vec<Word> {
    let (c, lx, ly, lz) = (g(0), g(1), g(2), g(3));
    vec![
        comm(&lx, &ly),
        comm(&ly, &lz),
        comm(&lz, &lx),
        comm(&c, &lx.inverse().mul(&lz)),
        comm(&c, &ly.inverse().mul(&lz)),
        prod(&[c.clone(), lx, c.clone(), ly, c, lz]),
    ]
}

/// `[l_x,l_y], [l_x,l_z], [l_y^u,l_z], u l_y u l_x l_z^-1`.
fn conic_relators() -> Vec<Word> {
    let (u, lx, ly, lz) = (g(0), g(1), g(2), g(3));
    vec![
        comm(&lx, &ly),
        comm(&lx, &lz),
        comm(&Word::conjugate(&ly, &u), &lz),
        prod(&[u.clone(), ly, u, lx, lz.inverse()]),
    ]
}

impl Builder {
    pub fn presentation(&self) -> Result<GroupPresentation> {
        match *self {
            Builder::GrupoP2 => GroupPresentation::new(names(&["c", "l_x", "l_y", "l_z"]), grupo_p2_relators()),
            Builder::CubicQuotient(cp) => {
                let ([a1, a2, _], [b1, b2]) = (cp.alpha, cp.beta);
                let mut rels = grupo_p2_relators();
                rels.push(g(1).mul(&g(2)));
                rels.push(gp(1, a1).mul(&gp(3, b2)));
                rels.push(gp(2, a2).mul(&gp(3, b1)));
                GroupPresentation::new(names(&["c", "l_x", "l_y", "l_z"]), rels)
            }
            Builder::Pres1(cp) => {
                let ([a1, a2, _], [b1, b2]) = (cp.alpha, cp.beta);
                let (h1, h2) = bezout_hats(a1, a2)?;
                let h = h1 * b2 as i64 + h2 * b1 as i64;
                let (l, u) = (g(0), g(1));
                GroupPresentation::new(
                    names(&["l", "u"]),
                    vec![gp(0, cp.degree_unit()), comm(&u, &l.pow(h - 1)), u.pow(3).mul(&l.pow(-2))],
                )
            }
            Builder::PresOdd(a) => {
                if a == 0 {
                    return Err(Error::arg("A must be positive"));
                }
                GroupPresentation::new(names(&["l", "u"]), vec![gp(0, a), gp(1, 3).mul(&Word::power_of(0, -2))])
            }
            Builder::Conic => GroupPresentation::new(names(&["u", "l_x", "l_y", "l_z"]), conic_relators()),
            Builder::ConicQuotient(cp) => {
                let ([a1, a2, _], [b1, b2]) = (cp.alpha, cp.beta);
                let mut rels = conic_relators();
                rels.push(g(1).mul(&g(2)));
                rels.push(gp(1, a1).mul(&gp(3, b2)));
                rels.push(prod(&[g(0).inverse(), gp(2, a2), g(0), gp(3, b1)]));
                GroupPresentation::new(names(&["u", "l_x", "l_y", "l_z"]), rels)
            }
            Builder::ConicSimplified(cp) => {
                let ([a1, a2, _], [b1, b2]) = (cp.alpha, cp.beta);
                let (b1, b2) = (b1 as i64, b2 as i64);
                let (u, lx) = (g(0), g(1));
                let x1 = Word::conjugate(&lx, &u.inverse());
                GroupPresentation::new(
                    names(&["u", "l_x"]),
                    vec![
                        comm(&lx, &u.pow(2)),
                        comm(&lx, &x1),
                        prod(&[u.pow(2 * b2), lx.pow(a1 as i64 + b2), x1.pow(-b2)]),
                        prod(&[u.pow(2 * b1), x1.pow(-(a2 as i64 + b1)), lx.pow(b1)]),
                    ],
                )
            }
            Builder::Orbifold(d) => {
                if d.contains(&0) {
                    return Err(Error::arg("orbifold indices must be positive"));
                }
                if d[0].gcd(&d[1]) != 1 || d[0].gcd(&d[2]) != 1 || d[1].gcd(&d[2]) != 1 {
                    return Err(Error::arg(format!("orbifold indices {d:?} must be pairwise coprime")));
                }
                let mut rels = conic_relators();
                rels.extend((0..3).map(|i| gp(i + 1, d[i])));
                GroupPresentation::new(names(&["u", "l_x", "l_y", "l_z"]), rels)
            }
            Builder::Triangle(p, q, r) => {
                if p == 0 || q == 0 || r == 0 {
                    return Err(Error::arg("triangle exponents must be positive"));
                }
                GroupPresentation::new(
                    names(&["m1", "m2", "m3"]),
                    vec![gp(0, p), gp(1, q), gp(2, r), prod(&[g(2), g(1), g(0)])],
                )
            }
            Builder::Quartic => {
                let (s, t, u) = (g(0), g(1), g(2));
                let braid = |a: &Word, b: &Word| prod(&[a.clone(), b.clone(), a.clone()]).mul(&prod(&[b.clone(), a.clone(), b.clone()]).inverse());
                GroupPresentation::new(
                    names(&["s", "t", "u"]),
                    vec![braid(&s, &t), braid(&s, &u), braid(&t, &u), prod(&[s, t, u]).pow(2)],
                )
            }
            Builder::Cyclic(n) => GroupPresentation::new(names(&["a"]), vec![gp(0, n)]),
        }
    }
}

/// Order of the fundamental group of the Milnor fiber of the conic push:
/// `gcd(a1 + 2 b2, a2 + 2 b1)`.
pub fn milnor_fiber_order(cp: &CremonaParams) -> u64 {
    let ([a1, a2, _], [b1, b2]) = (cp.alpha, cp.beta);
    (a1 + 2 * b2).gcd(&(a2 + 2 * b1))
}

/// `2 gcd(a1 + 2 b2, a2 + 2 b1) (a1 a2 + a3)`.
pub fn conic_quotient_order(cp: &CremonaParams) -> u64 {
    2 * milnor_fiber_order(cp) * cp.degree_unit()
}
