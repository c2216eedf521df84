//! Text form of monomial ideals.
//!
//! ```text
//! ideal  := term (',' term)*
//! term   := '1' | factor+
//! factor := ('x' | 'y' | 'z') ('^' uint)?
//! ```
//!
//! Whitespace is ignored between tokens and `*` may separate factors. The
//! single token `0` denotes the zero ideal.

use crate::error::{Error, Result};
use crate::ideal::{check_degree, minimal_generators, MonomialIdeal, DEFAULT_DEGREE_CAP};
use crate::monomial::{Monomial, Var};

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    parse_ideal_capped(text, DEFAULT_DEGREE_CAP)
}

/// Like [`parse_ideal`], rejecting generators whose degree exceeds `cap`.
pub fn parse_ideal_capped(text: &str, cap: u32) -> Result<MonomialIdeal> {
    if text.trim() == "0" {
        return Ok(MonomialIdeal::zero());
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        cap,
    };
    let mut gens = vec![p.term()?];
    loop {
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b',') => {
                p.pos += 1;
                gens.push(p.term()?);
            }
            Some(c) => {
                return Err(p.err(format!(
                    "expected ',' or end of input, found '{}'",
                    c as char
                )))
            }
        }
    }
    Ok(minimal_generators(gens))
}

/// Parses a single monomial such as `x^3*y^2*z`.
pub fn parse_monomial(text: &str) -> Result<Monomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        cap: DEFAULT_DEGREE_CAP,
    };
    let m = p.term()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(m),
        Some(c) => Err(p.err(format!("unexpected '{}'", c as char))),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    cap: u32,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, message: String) -> Error {
        Error::Syntax {
            position: self.pos,
            message,
        }
    }

    fn term(&mut self) -> Result<Monomial> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Monomial::ONE);
        }
        let mut exps = [0u32; 3];
        let mut seen = [false; 3];
        let mut factors = 0;
        loop {
            self.skip_ws();
            if factors > 0 && self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                if !matches!(self.peek(), Some(b'x' | b'y' | b'z')) {
                    return Err(self.err("expected a variable after '*'".into()));
                }
            }
            let var = match self.peek() {
                Some(b'x') => Var::X,
                Some(b'y') => Var::Y,
                Some(b'z') => Var::Z,
                _ => break,
            };
            let var_pos = self.pos;
            self.pos += 1;
            if seen[var.index()] {
                return Err(Error::RepeatedVariable {
                    position: var_pos,
                    variable: var.symbol(),
                });
            }
            seen[var.index()] = true;
            self.skip_ws();
            let e = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                self.uint()?
            } else {
                1
            };
            exps[var.index()] = e;
            factors += 1;
        }
        if factors == 0 {
            return Err(match self.peek() {
                None => self.err("expected a monomial, found end of input".into()),
                Some(c) => self.err(format!("expected a monomial, found '{}'", c as char)),
            });
        }
        let m = Monomial::from_exponents(exps);
        check_degree(exps.iter().map(|&e| u64::from(e)).sum(), self.cap).map_err(|e| match e {
            Error::DegreeCap { degree, cap } => Error::Syntax {
                position: start,
                message: format!("monomial degree {degree} exceeds cap {cap}"),
            },
            other => other,
        })?;
        Ok(m)
    }

    fn uint(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an exponent".into()));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits.parse().map_err(|_| Error::Syntax {
            position: start,
            message: format!("exponent '{digits}' out of range"),
        })
    }
}
