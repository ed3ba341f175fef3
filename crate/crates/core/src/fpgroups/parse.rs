use super::word::{GroupPresentation, Word};
use crate::error::{Error, Result};

/// Parse `< a, b | a^2, b^3, (a*b)^5 >`.
///
/// Words are products of factors joined by `*`; a factor is a generator, a
/// parenthesised word or a commutator `[x,y] = x^-1 y^-1 x y`, optionally
/// raised to an integer power. A relation `u = v = w` stands for the
/// relators `u v^-1` and `v w^-1`; `1` is the empty word.
///
/// ```
/// let p = wpsing::fpgroups::parse_presentation("<a, b | a^2, b^3, (a*b)^5>").unwrap();
/// assert_eq!(p.relators().len(), 3);
/// ```
pub fn parse_presentation(text: &str) -> Result<GroupPresentation> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, gens: Vec::new() };
    p.expect(b'<')?;
    loop {
        let start = p.pos;
        let name = p.ident().ok_or_else(|| Error::Syntax { pos: start, msg: "expected generator name".into() })?;
        if p.gens.contains(&name) {
            return Err(Error::Syntax { pos: start, msg: format!("duplicate generator {name:?}") });
        }
        p.gens.push(name);
        if !p.eat(b',') {
            break;
        }
    }
    let mut rels = Vec::new();
    if p.eat(b'|') && p.peek() != Some(b'>') {
        loop {
            rels.extend(p.relation()?);
            if !p.eat(b',') {
                break;
            }
        }
    }
    p.expect(b'>')?;
    p.end()?;
    GroupPresentation::new(p.gens, rels)
}

/// Parse a word over the generators of `pres`.
pub fn parse_word(text: &str, pres: &GroupPresentation) -> Result<Word> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, gens: pres.generators().to_vec() };
    let w = p.word()?;
    p.end()?;
    Ok(w)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    gens: Vec<String>,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn peek(&mut self) -> Option<u8> {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        let hit = self.peek() == Some(c);
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error("unexpected trailing input")),
        }
    }

    fn ident(&mut self) -> Option<String> {
        let c = self.peek()?;
        if !(c.is_ascii_alphabetic() || c == b'_') {
            return None;
        }
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|&c| c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        Some(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn integer(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        self.peek();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer exponent"));
        }
        let n: i64 = std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Syntax { pos: start, msg: "exponent out of range".into() })?;
        Ok(if neg { -n } else { n })
    }

    fn relation(&mut self) -> Result<Vec<Word>> {
        let mut sides = vec![self.word()?];
        while self.eat(b'=') {
            sides.push(self.word()?);
        }
        if sides.len() == 1 {
            return Ok(sides);
        }
        Ok(sides.windows(2).map(|s| s[0].mul(&s[1].inverse())).collect())
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = self.factor()?;
        while self.eat(b'*') {
            w = w.mul(&self.factor()?);
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                w
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.word()?;
                self.expect(b',')?;
                let b = self.word()?;
                self.expect(b']')?;
                Word::commutator(&a, &b)
            }
            Some(b'1') => {
                self.pos += 1;
                Word::identity()
            }
            _ => {
                let start = self.pos;
                let name = self.ident().ok_or_else(|| self.error("expected generator, '(' or '['"))?;
                let g = self
                    .gens
                    .iter()
                    .position(|x| *x == name)
                    .ok_or(Error::Syntax { pos: start, msg: format!("unknown generator {name:?}") })?;
                Word::gen(g)
            }
        };
        if self.eat(b'^') {
            Ok(base.pow(self.integer()?))
        } else {
            Ok(base)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic() {
        let p = parse_presentation("<a | a^5>").unwrap();
        assert_eq!(p.ngens(), 1);
        assert_eq!(p.relators(), &[Word::power_of(0, 5)]);
    }

    #[test]
    fn pres_odd_shape() {
        let p = parse_presentation("<l,u | l^2, u^3*l^-2>").unwrap();
        assert_eq!(p.relators()[1], Word::new([(1, 3), (0, -2)]));
    }

    #[test]
    fn commutator_sugar() {
        let p = parse_presentation("<x, y | [x,y]>").unwrap();
        assert_eq!(p.to_string(), "< x, y | x^-1*y^-1*x*y >");
    }

    #[test]
    fn equations() {
        let p = parse_presentation("<a,b | a*b = b*a, a^2 = b^3 = 1>").unwrap();
        assert_eq!(p.relators().len(), 3);
        assert_eq!(p.relators()[2], Word::power_of(1, 3));
    }

    #[test]
    fn round_trip() {
        let text = "< l_x, u | l_x^3*u^-2, u*l_x*u^-1*l_x^-1 >";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.to_string(), text);
        assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_presentation("<a | b>"), Err(Error::Syntax { pos: 5, .. })));
        assert!(matches!(parse_presentation("<a | a^>"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_presentation("<a | a"), Err(Error::Syntax { .. })));
        assert!(parse_presentation("<a, a | a>").is_err());
        assert!(parse_presentation("<a | a^2> x").is_err());
    }

    #[test]
    fn no_relators() {
        assert_eq!(parse_presentation("<a,b>").unwrap().relators().len(), 0);
        assert_eq!(parse_presentation("<a,b|>").unwrap().relators().len(), 0);
    }
}
