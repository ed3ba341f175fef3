//! Exact integer and rational arithmetic.
//!
//! Everything downstream (determinants of resolution graphs, abelianizations,
//! polynomial coefficients) goes through these primitives; no floating point
//! is used anywhere in the crate.

mod matrix;

pub use matrix::{det_exact, smith_normal_form, IntMatrix, RatMatrix, SmithForm};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Reduced fraction with positive denominator.
pub type Rational = BigRational;

/// `n/d` as a [`Rational`]. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::arg(format!("not a rational number: {text:?}"));
    match t.split_once('/') {
        None => t.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::arg("zero denominator"));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// The integer value of `r`, if it is one.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

/// Greatest common divisor of a nonempty list; `gcd_many(&[0, 0]) == 0`.
pub fn gcd_many<T>(values: &[T]) -> Result<T>
where
    T: Integer + Signed + Clone,
{
    let (first, rest) = values
        .split_first()
        .ok_or_else(|| Error::arg("gcd of an empty list"))?;
    Ok(rest.iter().fold(first.abs(), |g, v| g.gcd(v)))
}

/// Least common multiple of a nonempty list of positive integers.
pub fn lcm_many(values: &[u64]) -> Result<u64> {
    if values.is_empty() {
        return Err(Error::arg("lcm of an empty list"));
    }
    values.iter().try_fold(1u64, |l, &v| {
        let g = l.gcd(&v);
        (l / g.max(1))
            .checked_mul(v)
            .ok_or_else(|| Error::Arithmetic("lcm overflows u64".into()))
    })
}

/// Inverse of `a` modulo `m`, in `[0, m)`.
pub fn mod_inverse(a: i64, m: i64) -> Result<i64> {
    if m <= 0 {
        return Err(Error::arg(format!("modulus must be positive, got {m}")));
    }
    let e = i128::from(a).extended_gcd(&i128::from(m));
    if e.gcd != 1 {
        return Err(Error::Arithmetic(format!("{a} is not invertible modulo {m}")));
    }
    let r = e.x.mod_floor(&i128::from(m));
    Ok(r as i64)
}

/// Hirzebruch-Jung expansion `d/a = b1 - 1/(b2 - 1/(...))` with every `b_i >= 2`.
///
/// The chain `[-b1, ..., -br]` is the minimal resolution of `1/d(1,a)`.
pub fn hj_expansion(d: i64, a: i64) -> Result<Vec<i64>> {
    if d < 1 || a <= 0 || a >= d {
        return Err(Error::arg(format!("need 0 < a < d, got d={d}, a={a}")));
    }
    if d.gcd(&a) != 1 {
        return Err(Error::arg(format!("gcd({d},{a}) != 1")));
    }
    let (mut num, mut den) = (d, a);
    let mut out = Vec::new();
    while den != 0 {
        let b = Integer::div_ceil(&num, &den);
        out.push(b);
        let next = b * den - num;
        num = den;
        den = next;
    }
    Ok(out)
}

/// Evaluate `b1 - 1/(b2 - 1/(...))`.
pub fn hj_evaluate(bs: &[i64]) -> Rational {
    let mut acc: Option<Rational> = None;
    for &b in bs.iter().rev() {
        let b = int(b);
        acc = Some(match acc {
            None => b,
            Some(t) => b - t.recip(),
        });
    }
    acc.unwrap_or_else(Rational::zero)
}

/// `base^exp` for a rational base and any integer exponent.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), (-exp) as usize)
    }
}

/// Product of a list of integers as a `BigInt`.
pub fn big_product<I: IntoIterator<Item = u64>>(it: I) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, v| acc * BigInt::from(v))
}

/// Serialize an integer as a JSON number when it fits in `i64`, else as a
/// decimal string.
pub fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    use num_traits::ToPrimitive;
    match v.to_i64() {
        Some(n) => s.serialize_i64(n),
        None => s.serialize_str(&v.to_string()),
    }
}

/// Serialize a rational as its `"p/q"` string.
pub fn ser_rational<S: serde::Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_many(&[6i64, 10, 15]).unwrap(), 1);
        assert_eq!(gcd_many(&[4i64, 6]).unwrap(), 2);
        assert_eq!(gcd_many(&[0i64, 0, 5]).unwrap(), 5);
        assert_eq!(gcd_many(&[0i64, 0]).unwrap(), 0);
        assert!(gcd_many::<i64>(&[]).is_err());
        let big = [BigInt::from(12), BigInt::from(-18)];
        assert_eq!(gcd_many(&big).unwrap(), BigInt::from(6));
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(2, 5).unwrap(), 3);
        assert_eq!(mod_inverse(1, 7).unwrap(), 1);
        let r = mod_inverse(3, 1_000_003).unwrap();
        assert_eq!((3 * r) % 1_000_003, 1);
        assert_eq!(mod_inverse(-1, 7).unwrap(), 6);
        assert!(matches!(mod_inverse(4, 6), Err(Error::Arithmetic(_))));
    }

    #[test]
    fn hj_examples() {
        assert_eq!(hj_expansion(5, 2).unwrap(), vec![3, 2]);
        assert_eq!(hj_expansion(9, 1).unwrap(), vec![9]);
        assert_eq!(hj_expansion(7, 3).unwrap(), vec![3, 2, 2]);
        assert_eq!(hj_evaluate(&[3, 2, 2]), rat(7, 3));
        assert!(hj_expansion(6, 2).is_err());
        assert!(hj_expansion(5, 5).is_err());
        assert!(hj_expansion(5, 0).is_err());
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("-5/2").unwrap(), rat(-5, 2));
        assert_eq!(parse_rational(" 4/2 ").unwrap(), int(2));
        assert_eq!(format_rational(&rat(6, -4)), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm_many(&[4, 6, 10]).unwrap(), 60);
        assert_eq!(lcm_many(&[1]).unwrap(), 1);
    }
}
