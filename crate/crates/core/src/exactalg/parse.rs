//! Parser for the canonical text form, e.g. `1 + 2*q + q^2*t - x_3`.

use alloc::format;
use alloc::string::ToString;
use core::str::FromStr;

use num_bigint::BigInt;

use super::monomial::{Monomial, Var};
use super::poly::Poly;
use crate::Error;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn err(&self, what: &str) -> Error {
        Error::PolyParse(format!("{what} at byte {} of {:?}", self.pos, self.src))
    }

    fn var(&mut self) -> Result<Option<Var>, Error> {
        self.skip_ws();
        let v = match self.peek() {
            Some('q') => Var::Q,
            Some('t') => Var::T,
            Some('r') => Var::R,
            Some('u') => Var::U,
            Some('x') => {
                self.pos += 1;
                if !self.eat('_') {
                    return Err(self.err("expected '_' after x"));
                }
                let d = self.digits().ok_or_else(|| self.err("expected index"))?;
                let i: u32 = d.parse().map_err(|_| self.err("bad index"))?;
                if i == 0 {
                    return Err(self.err("x indices start at 1"));
                }
                return Ok(Some(Var::X(i)));
            }
            _ => return Ok(None),
        };
        self.pos += 1;
        Ok(Some(v))
    }

    fn term(&mut self) -> Result<(BigInt, Monomial), Error> {
        let mut coeff = BigInt::from(1);
        let mut mono = Monomial::one();
        loop {
            if let Some(d) = self.digits() {
                coeff *= BigInt::from_str(d).map_err(|_| self.err("bad integer"))?;
            } else if let Some(v) = self.var()? {
                let e = if self.eat('^') {
                    let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
                    d.parse::<u32>().map_err(|_| self.err("bad exponent"))?
                } else {
                    1
                };
                mono = mono.mul(&Monomial::var_pow(v, e));
            } else {
                return Err(self.err("expected integer or variable"));
            }
            if !self.eat('*') {
                return Ok((coeff, mono));
            }
        }
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Poly, Error> {
        let mut cur = Cursor { src: s, pos: 0 };
        let mut out = Poly::zero();
        let mut sign = if cur.eat('-') {
            -1
        } else {
            cur.eat('+');
            1
        };
        loop {
            let (c, m) = cur.term()?;
            out.add_term(m, c * sign);
            cur.skip_ws();
            if cur.pos == s.len() {
                return Ok(out);
            }
            sign = if cur.eat('+') {
                1
            } else if cur.eat('-') {
                -1
            } else {
                return Err(Error::PolyParse(format!(
                    "unexpected {:?} at byte {}",
                    cur.peek().map(|c| c.to_string()).unwrap_or_default(),
                    cur.pos
                )));
            };
        }
    }
}
