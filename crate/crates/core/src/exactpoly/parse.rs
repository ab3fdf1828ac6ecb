use num_bigint::BigInt;
use num_traits::Zero;

use super::{MultiPoly, PolyError, Rational, Var};

/// Parses the polynomial text grammar:
///
/// ```text
/// expr   := ['+'|'-'] term (('+'|'-') term)*
/// term   := factor ('*' factor)*
/// factor := base ('^' uint)?
/// base   := 'x' | 'y' | 'z' | rational | '(' expr ')'
/// rational := int ('/' uint)?
/// ```
///
/// A single leading sign is accepted so that printed polynomials with a
/// negative leading coefficient parse back.
pub fn parse_poly(text: &str) -> Result<MultiPoly, PolyError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
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

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut negate_first = false;
        match self.peek() {
            Some(b'-') => {
                negate_first = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if negate_first {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        let b = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            if self.peek() == Some(b'-') {
                return Err(PolyError::NegativeExponent { pos: self.pos });
            }
            let e = self.uint()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            return Ok(b.pow(e));
        }
        Ok(b)
    }

    fn base(&mut self) -> Result<MultiPoly, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.uint()?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    return Ok(MultiPoly::constant(Rational::new(n, d)));
                }
                Ok(MultiPoly::constant(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("?");
                let mut chars = name.chars();
                match (chars.next().and_then(Var::from_char), chars.next()) {
                    (Some(v), None) => Ok(MultiPoly::var(v)),
                    _ => Err(PolyError::UnknownIdentifier {
                        pos: start,
                        name: name.to_string(),
                    }),
                }
            }
            Some(_) => Err(self.err("expected variable, number or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn uint(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected unsigned integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().expect("ascii digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::Monomial;
    use num_traits::One;

    #[test]
    fn conic_terms() {
        let f2 = parse_poly("x*z - y^2").unwrap();
        assert_eq!(f2.num_terms(), 2);
        assert!(f2.coeff(&Monomial([1, 0, 1])).is_one());
        assert_eq!(f2.coeff(&Monomial([0, 2, 0])), -Rational::one());
    }

    #[test]
    fn zero_and_identities() {
        assert!(parse_poly("0").unwrap().is_zero());
        assert_eq!(
            parse_poly("(x+y)^2 - x^2 - 2*x*y").unwrap(),
            parse_poly("y^2").unwrap()
        );
    }

    #[test]
    fn errors_carry_position() {
        assert!(matches!(
            parse_poly("x + w"),
            Err(PolyError::UnknownIdentifier { pos: 4, .. })
        ));
        assert!(matches!(parse_poly("x^-2"), Err(PolyError::NegativeExponent { .. })));
        assert!(matches!(parse_poly("x +"), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_poly("2x"), Err(PolyError::Syntax { pos: 1, .. })));
        assert!(matches!(parse_poly("1/0"), Err(PolyError::Syntax { .. })));
    }

    #[test]
    fn rationals() {
        let p = parse_poly("3/4*x - 1/2").unwrap();
        assert_eq!(p.to_string(), "3/4*x - 1/2");
    }
}
