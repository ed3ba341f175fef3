use crate::error::{Error, Result};
use crate::exactmath::{format_rational, int, Rational};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Element `a + b*zeta` of `Q(zeta)`, `zeta^2 = -zeta - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Qz {
    pub a: Rational,
    pub b: Rational,
}

impl Qz {
    pub fn new(a: Rational, b: Rational) -> Self {
        Qz { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        Qz { a, b: Rational::zero() }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::rational(int(n))
    }

    pub fn zeta() -> Self {
        Qz { a: Rational::zero(), b: Rational::one() }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `N(a + b zeta) = a^2 - ab + b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<Qz> {
        if self.is_zero() {
            return Err(Error::Arithmetic("inverse of zero".into()));
        }
        let n = self.norm();
        Ok(Qz { a: (&self.a - &self.b) / &n, b: -&self.b / &n })
    }

    pub fn pow(&self, e: u32) -> Qz {
        let mut out = Qz::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }
}

impl Zero for Qz {
    fn zero() -> Self {
        Qz::default()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Qz {
    fn one() -> Self {
        Qz::from_i64(1)
    }
}

impl Add for Qz {
    type Output = Qz;
    fn add(self, o: Qz) -> Qz {
        &self + &o
    }
}

impl<'a> Add<&'a Qz> for &'a Qz {
    type Output = Qz;
    fn add(self, o: &Qz) -> Qz {
        Qz { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl AddAssign<&Qz> for Qz {
    fn add_assign(&mut self, o: &Qz) {
        self.a += &o.a;
        self.b += &o.b;
    }
}

impl Sub for Qz {
    type Output = Qz;
    fn sub(self, o: Qz) -> Qz {
        &self - &o
    }
}

impl<'a> Sub<&'a Qz> for &'a Qz {
    type Output = Qz;
    fn sub(self, o: &Qz) -> Qz {
        Qz { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Neg for Qz {
    type Output = Qz;
    fn neg(self) -> Qz {
        Qz { a: -self.a, b: -self.b }
    }
}

impl Mul for Qz {
    type Output = Qz;
    fn mul(self, o: Qz) -> Qz {
        &self * &o
    }
}

impl<'a> Mul<&'a Qz> for &'a Qz {
    type Output = Qz;
    // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2, z^2 = -z - 1
    fn mul(self, o: &Qz) -> Qz {
        let bd = &self.b * &o.b;
        Qz {
            a: &self.a * &o.a - &bd,
            b: &self.a * &o.b + &self.b * &o.a - bd,
        }
    }
}

impl fmt::Display for Qz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = format_rational(&self.b);
        let zeta = match b.as_str() {
            "1" => "zeta".to_string(),
            "-1" => "-zeta".to_string(),
            _ => format!("{b}*zeta"),
        };
        if self.b.is_zero() {
            write!(f, "{}", format_rational(&self.a))
        } else if self.a.is_zero() {
            write!(f, "{zeta}")
        } else if zeta.starts_with('-') {
            write!(f, "{}{zeta}", format_rational(&self.a))
        } else {
            write!(f, "{}+{zeta}", format_rational(&self.a))
        }
    }
}
