//! Recursive-descent parser for the ASCII polynomial grammar.
//!
//! ```text
//! expr  := term (('+'|'-') term)*      (a leading sign is allowed)
//! term  := coeff ('*' mono)? | mono
//! mono  := 'x' ('^' uint)? ('*' 'y' ('^' uint)?)? | 'y' ('^' uint)?
//! coeff := int ('/' uint)?
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polycore::Poly2;
use crate::rational::Rational;

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

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax { offset: self.pos, message: message.into() }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("validated digits"))
    }

    fn exponent(&mut self) -> Result<u32> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let at = self.pos;
        let e = self.uint()?;
        u32::try_from(e).map_err(|_| Error::Syntax { offset: at, message: "exponent too large".into() })
    }

    fn mono(&mut self) -> Result<(u32, u32)> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let a = self.exponent()?;
                let save = self.pos;
                if self.eat(b'*') {
                    if self.eat(b'y') {
                        return Ok((a, self.exponent()?));
                    }
                    self.pos = save;
                    return Err(Error::Syntax { offset: save, message: "expected 'y' after 'x^a*'".into() });
                }
                Ok((a, 0))
            }
            Some(b'y') => {
                self.pos += 1;
                Ok((0, self.exponent()?))
            }
            _ => Err(self.err("expected 'x' or 'y'")),
        }
    }

    fn term(&mut self) -> Result<(Rational, u32, u32)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let mut den = BigInt::one();
                if self.eat(b'/') {
                    self.skip_ws();
                    let at = self.pos;
                    den = self.uint()?;
                    if den.is_zero() {
                        return Err(Error::ZeroDenominator { offset: at });
                    }
                }
                let c = Rational::new(num, den);
                if self.eat(b'*') {
                    let (a, b) = self.mono()?;
                    Ok((c, a, b))
                } else {
                    Ok((c, 0, 0))
                }
            }
            _ => {
                let (a, b) = self.mono()?;
                Ok((Rational::one(), a, b))
            }
        }
    }
}

/// Parses a polynomial in `x, y`; errors carry the byte offset of the problem.
pub fn parse_poly(text: &str) -> Result<Poly2> {
    let mut cur = Cursor { src: text.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    let mut negative = if cur.eat(b'-') {
        true
    } else {
        cur.eat(b'+');
        false
    };
    loop {
        let (c, a, b) = cur.term()?;
        terms.push((a, b, if negative { -c } else { c }));
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.pos += 1;
                negative = false;
            }
            Some(b'-') => {
                cur.pos += 1;
                negative = true;
            }
            Some(_) => return Err(cur.err("expected '+', '-' or end of input")),
        }
    }
    Ok(Poly2::from_terms(terms))
}
