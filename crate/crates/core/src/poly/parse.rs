//! Text grammar for polynomials:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := coeff | [coeff ['*']] factor ('*' factor)*
//! factor := var ['^' posint]
//! coeff  := integer | integer '/' posint
//! ```
//!
//! Whitespace is insignificant. Variables must be declared by the context and
//! must all come from the requested side. A coefficient may be juxtaposed
//! with the first factor, so `2u` reads as `2*u`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial, Side, VariableContext};
use crate::error::{Error, Result};
use crate::Scalar;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            c if c.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits parse");
                out.push((start, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    position: start,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ctx: &'a Arc<VariableContext>,
    side: Side,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut poly = Polynomial::zero(self.ctx, self.side);
        let mut sign = Scalar::one();
        if self.peek() == Some(&Tok::Minus) {
            sign = -sign;
            self.pos += 1;
        }
        loop {
            let (m, c) = self.term()?;
            poly.add_term(m, c * &sign);
            match self.peek() {
                None => break,
                Some(Tok::Plus) => sign = Scalar::one(),
                Some(Tok::Minus) => sign = -Scalar::one(),
                Some(_) => return self.syntax("expected `+`, `-` or end of input"),
            }
            self.pos += 1;
        }
        Ok(poly)
    }

    fn term(&mut self) -> Result<(Monomial, Scalar)> {
        let mut coeff = Scalar::one();
        let mut mono = Monomial::one(self.ctx.nvars());
        if let Some(Tok::Int(_)) = self.peek() {
            coeff = self.coeff()?;
            match self.peek() {
                Some(Tok::Star) => self.pos += 1,
                Some(Tok::Ident(_)) => {}
                _ => return Ok((mono, coeff)),
            }
        }
        mono = mono.mul(&self.factor()?);
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            mono = mono.mul(&self.factor()?);
        }
        Ok((mono, coeff))
    }

    fn coeff(&mut self) -> Result<Scalar> {
        let num = match self.peek() {
            Some(Tok::Int(n)) => n.clone(),
            _ => return self.syntax("expected an integer"),
        };
        self.pos += 1;
        if self.peek() != Some(&Tok::Slash) {
            return Ok(Scalar::from_integer(num));
        }
        self.pos += 1;
        match self.peek() {
            Some(Tok::Int(den)) if !den.is_zero() => {
                let den = den.clone();
                self.pos += 1;
                Ok(Scalar::new(num, den))
            }
            _ => self.syntax("expected a positive denominator"),
        }
    }

    fn factor(&mut self) -> Result<Monomial> {
        let position = self.offset();
        let name = match self.peek() {
            Some(Tok::Ident(name)) => name.clone(),
            _ => return self.syntax("expected a variable"),
        };
        let index = match self.ctx.lookup(&name) {
            None => return Err(Error::UnknownVariable { name, position }),
            Some((side, _)) if side != self.side => {
                return Err(Error::WrongSide {
                    name,
                    position,
                    found: side,
                    expected: self.side,
                })
            }
            Some((_, i)) => i,
        };
        self.pos += 1;
        let mut exp = 1u32;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            exp = match self.peek() {
                Some(Tok::Int(n)) if !n.is_zero() => match u32::try_from(n) {
                    Ok(e) => e,
                    Err(_) => return self.syntax("exponent too large"),
                },
                _ => return self.syntax("expected a positive exponent"),
            };
            self.pos += 1;
        }
        let mut exps = vec![0; self.ctx.nvars()];
        exps[index] = exp;
        Ok(Monomial::new(exps))
    }
}

/// Parses `text` as a polynomial on `side` of `ctx`, collecting like terms.
pub fn parse_poly(text: &str, ctx: &Arc<VariableContext>, side: Side) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Syntax {
            position: 0,
            message: "empty expression".into(),
        });
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ctx,
        side,
    };
    parser.expr()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx() -> Arc<VariableContext> {
        VariableContext::threefold()
    }

    #[test]
    fn parses_normal_form() {
        let p = parse_poly("X*U^4 + Y*U^3*V + Z*U^2*V^2", &ctx(), Side::S).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.homogeneous_degree().unwrap(), 5);
    }

    #[test]
    fn zero_and_like_terms() {
        assert!(parse_poly("0", &ctx(), Side::S).unwrap().is_zero());
        let p = parse_poly("2*U^2 - U*U", &ctx(), Side::S).unwrap();
        assert_eq!(p.to_string(), "U^2");
    }

    #[test]
    fn rational_coefficients_and_leading_sign() {
        let p = parse_poly("-3/6*X + 1/2*X + 7", &ctx(), Side::S).unwrap();
        assert_eq!(p.to_string(), "7");
        let q = parse_poly("3X*U - 2/3U", &ctx(), Side::S).unwrap();
        assert_eq!(q.to_string(), "3*X*U - 2/3*U");
    }

    #[test]
    fn errors_carry_positions() {
        let c = ctx();
        assert_eq!(
            parse_poly("X + W", &c, Side::S),
            Err(Error::UnknownVariable {
                name: "W".into(),
                position: 4
            })
        );
        assert!(matches!(
            parse_poly("X + u", &c, Side::S),
            Err(Error::WrongSide { position: 4, .. })
        ));
        assert!(matches!(
            parse_poly("X + * U", &c, Side::S),
            Err(Error::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse_poly("X^0", &c, Side::S),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_poly("2/0*X", &c, Side::S),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_poly("X $", &c, Side::S),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_poly("  ", &c, Side::S),
            Err(Error::Syntax { .. })
        ));
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(Vec<u32>, i64, i64)>> {
        prop::collection::vec(
            (prop::collection::vec(0u32..4, 5), -30i64..30, 1i64..7),
            0..8,
        )
    }

    proptest! {
        #[test]
        fn display_round_trips(terms in arb_poly()) {
            let c = ctx();
            let p = Polynomial::from_terms(
                &c,
                Side::S,
                terms
                    .into_iter()
                    .map(|(e, n, d)| (Monomial::new(e), Scalar::new(n.into(), d.into()))),
            );
            let back = parse_poly(&p.to_string(), &c, Side::S).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
