use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial, Rational, VariableSet};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
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

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("nonempty digit run"))
    }

    fn exponent(&mut self) -> Result<u32> {
        let at = self.pos;
        let e = self.digits()?;
        u32::try_from(e).map_err(|_| Error::Parse {
            pos: at,
            msg: "exponent too large".into(),
        })
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier")
    }
}

/// Parses signed sums of `coef*mon` terms; `^` binds tighter than `*`.
pub(crate) fn parse_polynomial(ring: &Arc<VariableSet>, text: &str) -> Result<Polynomial> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let mut coef = Rational::one();
        match cur.peek() {
            None if first => return cur.err("empty input"),
            None => return cur.err("expected a term after sign"),
            _ => {}
        }
        if cur.eat(b'-') {
            coef = -coef;
        } else if !cur.eat(b'+') && !first {
            return cur.err("expected `+` or `-` between terms");
        }
        first = false;
        let mut mono = Monomial::one(ring.len());
        loop {
            match cur.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = cur.digits()?;
                    let den = if cur.eat(b'/') { cur.digits()? } else { BigInt::one() };
                    if den.is_zero() {
                        return cur.err("zero denominator");
                    }
                    let mut r = Rational::new(num, den);
                    if cur.eat(b'^') {
                        r = num_traits::pow(r, cur.exponent()? as usize);
                    }
                    coef *= r;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let at = cur.pos;
                    let name = cur.ident();
                    let v = ring.index_of(name).ok_or_else(|| Error::Parse {
                        pos: at,
                        msg: format!("unknown variable `{name}`"),
                    })?;
                    let e = if cur.eat(b'^') { cur.exponent()? } else { 1 };
                    mono = mono.mul(&Monomial::variable(ring.len(), v, e));
                }
                Some(_) => return cur.err("expected a number or variable"),
                None => return cur.err("unexpected end of input"),
            }
            if !cur.eat(b'*') {
                break;
            }
        }
        terms.push((mono, coef));
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}
