//! Text parser for ring elements.
//!
//! Grammar: integers (optionally `n/d` rationals), variable names, and
//! `+ - * ^ ( )` with explicit multiplication; whitespace is ignored.

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;
use crate::ring::RingSpec;

pub fn parse<F: Field>(text: &str, ring: Arc<RingSpec<F>>) -> Result<Polynomial<F>> {
    let mut p = Parser {
        text,
        bytes: text.as_bytes(),
        pos: 0,
        ring,
    };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(Error::Parse {
            pos: p.pos,
            msg: format!("unexpected `{}`", p.current_char()),
        });
    }
    Ok(poly)
}

struct Parser<'a, F: Field> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    ring: Arc<RingSpec<F>>,
}

impl<'a, F: Field> Parser<'a, F> {
    fn current_char(&self) -> char {
        self.text[self.pos..].chars().next().unwrap_or(' ')
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = if self.eat(b'-') {
            self.term()?.neg_raw()
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add_raw(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub_raw(&self.term()?);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.checked_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<F>> {
        if self.eat(b'-') {
            return Ok(self.factor()?.neg_raw());
        }
        let base = self.primary()?;
        if self.eat(b'^') {
            let (exp, pos) = self.natural()?;
            let exp = u32::try_from(exp).map_err(|_| Error::Parse {
                pos,
                msg: "exponent too large".into(),
            })?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(Error::Parse {
                        pos: self.pos,
                        msg: "expected `)`".into(),
                    });
                }
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => self.number(),
            Some(b) if (b as char).is_ascii_alphabetic() => self.variable(),
            _ => Err(Error::Parse {
                pos: self.pos,
                msg: format!("expected a term, found `{}`", self.current_char()),
            }),
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse {
                pos: start,
                msg: "expected digits".into(),
            });
        }
        Ok(&self.text[start..self.pos])
    }

    fn natural(&mut self) -> Result<(u64, usize)> {
        let start = self.pos;
        let d = self.digits()?;
        self.skip_ws();
        let n = d.parse::<u64>().map_err(|_| Error::Parse {
            pos: start,
            msg: "number too large".into(),
        })?;
        Ok((n, start))
    }

    fn number(&mut self) -> Result<Polynomial<F>> {
        let start = self.pos;
        let digits = self.digits()?;
        let ch = self.ring.characteristic();
        let mut value = F::from_digits(digits, ch).map_err(|msg| Error::Parse { pos: start, msg })?;
        self.skip_ws();
        // Rational literal n/d (characteristic zero) or modular division.
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let dstart = self.pos;
            let den = self.digits()?;
            self.skip_ws();
            let den = F::from_digits(den, ch).map_err(|msg| Error::Parse { pos: dstart, msg })?;
            if den.is_zero() {
                return Err(Error::Parse {
                    pos: dstart,
                    msg: "zero denominator".into(),
                });
            }
            value = value.div_exact(&den);
        }
        Ok(Polynomial::constant(self.ring.clone(), value))
    }

    fn variable(&mut self) -> Result<Polynomial<F>> {
        let start = self.pos;
        while self.pos < self.bytes.len()
            && ((self.bytes[self.pos] as char).is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = &self.text[start..self.pos];
        self.skip_ws();
        match self.ring.var_index(name) {
            Some(i) => Ok(Polynomial::var(self.ring.clone(), i)),
            None => Err(Error::UnknownVariable {
                name: name.to_string(),
                pos: start,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    fn ring() -> Arc<RingSpec<BigRational>> {
        RingSpec::new(&["a1", "a2"], 0).unwrap()
    }

    #[test]
    fn parses_two_term_polynomial() {
        let r = ring();
        let f = parse("a1^3*a2 - 2*a2^4", r.clone()).unwrap();
        assert_eq!(f.terms().len(), 2);
    }

    #[test]
    fn parses_product_with_parens() {
        let r = ring();
        let f = parse("a1*(a1+a2)", r.clone()).unwrap();
        assert_eq!(f, parse("a1^2 + a1*a2", r).unwrap());
    }

    #[test]
    fn unknown_variable_reports_position() {
        let r = ring();
        match parse("a1 + a3", r) {
            Err(Error::UnknownVariable { name, pos }) => {
                assert_eq!(name, "a3");
                assert_eq!(pos, 5);
            }
            other => panic!("expected unknown-variable error, got {other:?}"),
        }
    }

    #[test]
    fn syntax_error_reports_position() {
        let r = ring();
        assert!(matches!(parse("a1 + ", r.clone()), Err(Error::Parse { .. })));
        assert!(matches!(parse("a1 a2", r.clone()), Err(Error::Parse { .. })));
        assert!(matches!(parse("(a1", r), Err(Error::Parse { .. })));
    }

    #[test]
    fn rational_literals() {
        let r = ring();
        let f = parse("1/2*a1 - 3/4", r.clone()).unwrap();
        let doubled = f.checked_add(&f).unwrap();
        assert_eq!(doubled, parse("a1 - 3/2", r).unwrap());
    }

    #[test]
    fn prime_field_literals() {
        use crate::field::Fp;
        let r = RingSpec::<Fp>::new(&["a1"], 5).unwrap();
        let f = parse("7*a1", r.clone()).unwrap();
        assert_eq!(f, parse("2*a1", r.clone()).unwrap());
        assert!(parse("5*a1", r).unwrap().is_zero());
    }
}
