use super::coeff::Qz;
use super::multipoly::{MultiPoly, VAR_NAMES};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use num_bigint::BigInt;
use num_traits::Zero;

/// Parse a polynomial in `x, y, z` (and `w`), with integer or `zeta`
/// constants, `+ - * / ^` and parentheses. Division is only by nonzero
/// constants. Whitespace is ignored.
///
/// ```
/// let f = wpsing::poly::parse_poly("x^2 + y^3").unwrap();
/// assert_eq!(f.num_terms(), 2);
/// ```
pub fn parse_poly(text: &str) -> Result<MultiPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected character"));
    }
    let uses_w = f.terms().any(|(e, _)| e[3] > 0);
    f.with_nvars(if uses_w { 4 } else { 3 })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

const NV: usize = 4;

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = MultiPoly::zero(NV);
        let mut first = true;
        loop {
            let sign = if self.eat(b'+') {
                1
            } else if self.eat(b'-') {
                -1
            } else if first {
                1
            } else {
                return Ok(acc);
            };
            first = false;
            let t = self.term()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                let f = self.power()?;
                acc = acc.try_mul(&f)?;
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let f = self.power()?;
                let c = constant_value(&f).ok_or(Error::Syntax {
                    pos: at,
                    msg: "division by a non-constant".into(),
                })?;
                let inv = c.inverse().map_err(|_| Error::Syntax {
                    pos: at,
                    msg: "division by zero".into(),
                })?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let k = self.number()?;
            let k: u64 = k.try_into().map_err(|_| self.error("exponent too large"))?;
            return base.try_pow(k);
        }
        Ok(base)
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                Ok(MultiPoly::constant(NV, Qz::rational(Rational::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let word = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if word == "zeta" {
                    return Ok(MultiPoly::constant(NV, Qz::zeta()));
                }
                match VAR_NAMES.iter().position(|v| *v == word) {
                    Some(i) => Ok(MultiPoly::var(NV, i)),
                    None => Err(Error::Syntax { pos: start, msg: format!("unknown symbol {word:?}") }),
                }
            }
            _ => Err(self.error("expected a term")),
        }
    }
}

fn constant_value(f: &MultiPoly) -> Option<Qz> {
    match f.num_terms() {
        0 => Some(Qz::zero()),
        1 => {
            let (e, c) = f.terms().next()?;
            e.iter().all(|&k| k == 0).then(|| c.clone())
        }
        _ => None,
    }
}
