use super::coeff::Qz;
use super::multipoly::MultiPoly;
use super::parse_poly;
use crate::error::{Error, Result};
use crate::wproj::CremonaParams;
use num_integer::Integer;
use num_traits::One;
use std::str::FromStr;

/// A cube root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CubeRoot {
    One,
    Zeta,
    Zeta2,
}

impl CubeRoot {
    pub fn value(self) -> Qz {
        match self {
            CubeRoot::One => Qz::one(),
            CubeRoot::Zeta => Qz::zeta(),
            CubeRoot::Zeta2 => Qz::zeta().pow(2),
        }
    }

    pub fn inverse(self) -> CubeRoot {
        match self {
            CubeRoot::One => CubeRoot::One,
            CubeRoot::Zeta => CubeRoot::Zeta2,
            CubeRoot::Zeta2 => CubeRoot::Zeta,
        }
    }

    pub const ALL: [CubeRoot; 3] = [CubeRoot::One, CubeRoot::Zeta, CubeRoot::Zeta2];
}

impl FromStr for CubeRoot {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" | "one" => Ok(CubeRoot::One),
            "zeta" => Ok(CubeRoot::Zeta),
            "zeta2" | "zeta^2" => Ok(CubeRoot::Zeta2),
            other => Err(Error::arg(format!("lambda must be 1, zeta or zeta2, got {other:?}"))),
        }
    }
}

/// Named curves used throughout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogCurve {
    /// `x^3+y^3+z^3+3xy(x/l+l y)+3xz(x+z)+3yz(y/l+l z)`, smooth cubic tangent
    /// to the three axes at inflection points.
    HLambda(CubeRoot),
    /// `x^2+y^2+z^2-2(yz+xz+xy)`, tangent to the three axes.
    Conic,
    /// The Cremona transform of the conic, written out:
    /// `y^(2a1) z^2 + x^(2a2) z^2 + x^(2b1) y^(2b2)
    ///  - 2z(x^a2 y^a1 z + x^b1 y^(a1+b2) + x^(a2+b1) y^b2)`.
    CremonaConic(CremonaParams),
    /// `x^(2d1)+y^(2d2)+z^(2d3)-2(y^d2 z^d3 + x^d1 z^d3 + x^d1 y^d2)`.
    KummerConic([u64; 3]),
}

impl CatalogCurve {
    /// Build from a name (`H_lambda`, `conic`, `F_wcremona_conic`,
    /// `F_kummer_conic`) and its parameters.
    pub fn from_name(
        name: &str,
        lambda: Option<CubeRoot>,
        cremona: Option<CremonaParams>,
        d: Option<[u64; 3]>,
    ) -> Result<Self> {
        let missing = |what: &str| Error::arg(format!("{name} needs {what}"));
        match name {
            "H_lambda" | "cubic" => Ok(CatalogCurve::HLambda(lambda.unwrap_or(CubeRoot::One))),
            "conic" => Ok(CatalogCurve::Conic),
            "F_wcremona_conic" => Ok(CatalogCurve::CremonaConic(cremona.ok_or_else(|| missing("--alpha/--beta"))?)),
            "F_kummer_conic" => Ok(CatalogCurve::KummerConic(d.ok_or_else(|| missing("--d"))?)),
            other => Err(Error::arg(format!("unknown curve {other:?}"))),
        }
    }
}

fn mono(e: [u64; 3], c: i64) -> MultiPoly {
    MultiPoly::monomial(3, e.to_vec(), Qz::from_i64(c))
}

pub fn catalog(curve: &CatalogCurve) -> Result<MultiPoly> {
    match curve {
        CatalogCurve::HLambda(l) => {
            let lam = MultiPoly::constant(3, l.value());
            let inv = MultiPoly::constant(3, l.inverse().value());
            let x = MultiPoly::var(3, 0);
            let y = MultiPoly::var(3, 1);
            let z = MultiPoly::var(3, 2);
            let three = MultiPoly::constant(3, Qz::from_i64(3));
            let cubes = &(&x.try_pow(3)? + &y.try_pow(3)?) + &z.try_pow(3)?;
            let t1 = &(&three * &(&x * &y)) * &(&(&inv * &x) + &(&lam * &y));
            let t2 = &(&three * &(&x * &z)) * &(&x + &z);
            let t3 = &(&three * &(&y * &z)) * &(&(&inv * &y) + &(&lam * &z));
            Ok(&(&(&cubes + &t1) + &t2) + &t3)
        }
        CatalogCurve::Conic => parse_poly("x^2+y^2+z^2-2*(y*z+x*z+x*y)"),
        CatalogCurve::CremonaConic(p) => {
            let [a1, a2, _] = p.alpha;
            let [b1, b2] = p.beta;
            let terms = [
                mono([0, 2 * a1, 2], 1),
                mono([2 * a2, 0, 2], 1),
                mono([2 * b1, 2 * b2, 0], 1),
                mono([a2, a1, 2], -2),
                mono([b1, a1 + b2, 1], -2),
                mono([a2 + b1, b2, 1], -2),
            ];
            Ok(terms.iter().fold(MultiPoly::zero(3), |acc, t| &acc + t))
        }
        CatalogCurve::KummerConic(d) => {
            let ok = d.iter().all(|&x| x >= 1)
                && d[0].gcd(&d[1]) == 1
                && d[0].gcd(&d[2]) == 1
                && d[1].gcd(&d[2]) == 1;
            if !ok {
                return Err(Error::arg(format!("{d:?} must be positive and pairwise coprime")));
            }
            let [d1, d2, d3] = *d;
            let terms = [
                mono([2 * d1, 0, 0], 1),
                mono([0, 2 * d2, 0], 1),
                mono([0, 0, 2 * d3], 1),
                mono([0, d2, d3], -2),
                mono([d1, 0, d3], -2),
                mono([d1, d2, 0], -2),
            ];
            Ok(terms.iter().fold(MultiPoly::zero(3), |acc, t| &acc + t))
        }
    }
}
