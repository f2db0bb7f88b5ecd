//! Expression grammar shared by the parser and the renderer:
//!
//! ```text
//! expr    := ['+' | '-'] product (('+' | '-') product)*
//! product := factor ('*' factor)*
//! factor  := '-' factor | power
//! power   := atom ('^' uint)*
//! atom    := uint ['/' uint] | identifier | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, PolyRing, Polynomial, Rational};
use crate::error::{Error, ParseError, ParseErrorKind, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn malformed(msg: impl Into<String>, position: usize) -> Error {
    Error::Parse(ParseError {
        kind: ParseErrorKind::Malformed(msg.into()),
        position,
    })
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'^' => Token::Caret,
            b'/' => Token::Slash,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits parse as an integer");
                out.push((Token::Int(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Token::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(malformed(format!("unexpected character `{}`", ch), start));
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a PolyRing,
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.0)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map(|t| t.1).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Token::Plus) => {
                self.bump();
                self.product()?
            }
            Some(Token::Minus) => {
                self.bump();
                -self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = &acc + &self.product()?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if let Some(Token::Minus) = self.peek() {
            self.bump();
            return Ok(-self.factor()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let mut base = self.atom()?;
        while let Some(Token::Caret) = self.peek() {
            self.bump();
            let at = self.offset();
            match self.bump() {
                Some(Token::Int(n)) => {
                    let e: u32 =
                        u32::try_from(&n).map_err(|_| malformed("exponent too large", at))?;
                    base = base.pow(e);
                }
                Some(Token::Minus) => {
                    return Err(Error::Parse(ParseError {
                        kind: ParseErrorKind::NegativeExponent,
                        position: at,
                    }))
                }
                _ => return Err(malformed("expected a nonnegative integer exponent", at)),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let at = self.offset();
        match self.bump() {
            Some(Token::Int(n)) => {
                if let Some(Token::Slash) = self.peek() {
                    self.bump();
                    let dat = self.offset();
                    match self.bump() {
                        Some(Token::Int(d)) if !d.is_zero() => {
                            Ok(self.ring.constant(Rational::new(n, d)))
                        }
                        Some(Token::Int(_)) => Err(malformed("zero denominator", dat)),
                        _ => Err(malformed("expected an integer denominator", dat)),
                    }
                } else {
                    Ok(self.ring.constant(Rational::from_integer(n)))
                }
            }
            Some(Token::Ident(name)) => match self.ring.index_of(&name) {
                Some(i) => Ok(self.ring.var_at(i)),
                None => Err(Error::Parse(ParseError {
                    kind: ParseErrorKind::UndeclaredVariable(name),
                    position: at,
                })),
            },
            Some(Token::LParen) => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(malformed("expected `)`", close)),
                }
            }
            Some(tok) => Err(malformed(format!("unexpected token {:?}", tok), at)),
            None => Err(malformed("unexpected end of input", at)),
        }
    }
}

impl Polynomial {
    pub fn parse(text: &str, ring: &PolyRing) -> Result<Polynomial> {
        let tokens = tokenize(text)?;
        let mut parser = Parser {
            ring,
            tokens,
            pos: 0,
            end: text.len(),
        };
        let p = parser.expr()?;
        if parser.pos < parser.tokens.len() {
            return Err(malformed("trailing input", parser.offset()));
        }
        Ok(p)
    }

    /// Canonical text form, parseable by [`Polynomial::parse`] in the same ring.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let vars = self.ring().vars();
        let mut out = String::new();
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            let mono = render_monomial(m, vars);
            if mono.is_empty() {
                out.push_str(&render_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&render_rational(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

fn render_monomial(m: &Monomial, vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{}", vars[i], e)),
        }
    }
    parts.join("*")
}

/// `a` or `a/b` in lowest terms.
pub fn render_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| malformed(format!("invalid rational `{}`", text), 0))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| malformed(format!("invalid rational `{}`", text), 0))?;
    if d.is_zero() {
        return Err(malformed("zero denominator", 0));
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zt() -> PolyRing {
        PolyRing::grevlex(&["Z", "T"]).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn zero_literal() {
        assert!(zt().parse("0").unwrap().is_zero());
        assert!(zt().parse("Z - Z").unwrap().is_zero());
    }

    #[test]
    fn cusp_matches_hand_built_terms() {
        let r = zt();
        let expected = Polynomial::from_terms(
            &r,
            vec![
                (Monomial::from_exponents([3, 0]), q(1, 1)),
                (Monomial::from_exponents([0, 2]), q(-1, 1)),
            ],
        );
        assert_eq!(r.parse("Z^3 - T^2").unwrap(), expected);
    }

    #[test]
    fn nested_product_expands() {
        let r = zt();
        let z = r.var("Z").unwrap();
        let z1 = &z + &r.one();
        let expected = &(&(&z * &z1) * &z1) - &r.var("T").unwrap().pow(2);
        let parsed = r.parse("Z*(Z+1)^2 - T^2").unwrap();
        assert_eq!(parsed, expected);
        assert_eq!(parsed.render(), "Z^3 + 2*Z^2 - T^2 + Z");
    }

    #[test]
    fn rational_literals_and_signs() {
        let r = zt();
        let p = r.parse("-3/6*Z + -(T) - 2/1").unwrap();
        assert_eq!(p.render(), "-1/2*Z - T - 2");
        assert_eq!(r.parse(&p.render()).unwrap(), p);
        assert_eq!(r.parse("2^3").unwrap(), r.int(8));
    }

    #[test]
    fn errors() {
        let r = zt();
        match r.parse("Z + Q") {
            Err(Error::Parse(ParseError {
                kind: ParseErrorKind::UndeclaredVariable(v),
                position,
            })) => {
                assert_eq!(v, "Q");
                assert_eq!(position, 4);
            }
            other => panic!("unexpected {:?}", other),
        }
        assert!(matches!(
            r.parse("Z^-2"),
            Err(Error::Parse(ParseError {
                kind: ParseErrorKind::NegativeExponent,
                ..
            }))
        ));
        for bad in ["", "Z +", "(Z", "Z)", "Z^", "1/0", "Z $ T", "Z T", "Z/T"] {
            assert!(r.parse(bad).is_err(), "{:?} should not parse", bad);
        }
    }

    #[test]
    fn rational_helpers() {
        assert_eq!(parse_rational("-4/6").unwrap(), q(-2, 3));
        assert_eq!(render_rational(&q(-2, 3)), "-2/3");
        assert_eq!(render_rational(&q(10, 5)), "2");
        assert!(parse_rational("1/0").is_err());
    }
}
