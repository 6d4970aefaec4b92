//! Plain-text rendering and parsing of Laurent polynomials.
//!
//! Printed form, also accepted by the parser:
//!
//! ```text
//! t^4 - 5*t^3 + 25 - 21*t^-1 + t^(-3/2)
//! t1^(1/2)*t2^(1/2) - t1^(-1/2)*t2^(-1/2)
//! ```
//!
//! Terms print in descending lexicographic exponent order, integer exponents
//! bare, half-integer exponents parenthesized. The parser additionally
//! tolerates arbitrary whitespace and redundant integer factors.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{HalfInt, LaurentPoly, VarSet};
use crate::error::{Error, Result};

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = self.vars.names();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (v, &e2) in m.exps2().iter().enumerate() {
                if e2 == 0 {
                    continue;
                }
                let name = &names[v];
                if e2 == 2 {
                    factors.push(name.clone());
                } else if e2 % 2 == 0 {
                    factors.push(format!("{name}^{}", e2 / 2));
                } else {
                    factors.push(format!("{name}^({})", HalfInt::from_twice(e2)));
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        match self.bump() {
            Some(x) if x == b => Ok(()),
            _ => Err(self.error(format!("expected `{}`", b as char))),
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos.min(self.bytes.len()),
            msg: msg.into(),
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        match self.bytes.get(self.pos) {
            Some(&b) if b.is_ascii_alphabetic() || b == b'_' => self.pos += 1,
            _ => return None,
        }
        while let Some(&b) = self.bytes.get(self.pos) {
            if b.is_ascii_alphanumeric() || b == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        Some(String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
    }

    /// Unsigned decimal digits as a BigInt.
    fn uint_big(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while let Some(&b) = self.bytes.get(self.pos) {
            if b.is_ascii_digit() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        BigInt::parse_bytes(&self.bytes[start..self.pos], 10)
            .ok_or_else(|| self.error("bad integer"))
    }

    /// Signed machine integer (for exponents).
    fn int_small(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while let Some(&b) = self.bytes.get(self.pos) {
            if b.is_ascii_digit() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let v: i64 = s.parse().map_err(|_| self.error("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

/// Exponent after `^`: either a signed integer, or a parenthesized
/// half-integer `(k/2)` (a parenthesized integer is also tolerated).
fn parse_exponent(cur: &mut Cursor) -> Result<HalfInt> {
    if cur.peek() == Some(b'(') {
        cur.expect(b'(')?;
        let n = cur.int_small()?;
        let h = if cur.peek() == Some(b'/') {
            cur.expect(b'/')?;
            let d = cur.int_small()?;
            if d != 2 {
                return Err(cur.error("denominator must be 2"));
            }
            HalfInt::from_twice(n)
        } else {
            HalfInt::from_int(n)
        };
        cur.expect(b')')?;
        Ok(h)
    } else {
        Ok(HalfInt::from_int(cur.int_small()?))
    }
}

/// One multiplicand: an unsigned integer constant or `var[^exp]`.
fn parse_factor(cur: &mut Cursor, vars: &VarSet) -> Result<LaurentPoly> {
    match cur.peek() {
        Some(b) if b.is_ascii_digit() => {
            let c = cur.uint_big()?;
            let mut p = LaurentPoly::zero(vars.clone());
            p.add_term(vec![0; vars.len()], c);
            Ok(p)
        }
        _ => {
            let start = cur.pos;
            let name = cur
                .ident()
                .ok_or_else(|| cur.error("expected a variable or number"))?;
            let idx = vars.index_of(&name).ok_or(Error::Parse {
                pos: start,
                msg: format!("unknown variable `{name}`"),
            })?;
            let exp = if cur.peek() == Some(b'^') {
                cur.expect(b'^')?;
                parse_exponent(cur)?
            } else {
                HalfInt::ONE
            };
            let mut e2 = vec![0i64; vars.len()];
            e2[idx] = exp.twice();
            let mut p = LaurentPoly::zero(vars.clone());
            p.add_term(e2, BigInt::one());
            Ok(p)
        }
    }
}

/// Parse the textual form produced by [`fmt::Display`].
///
/// The variable set of the result is exactly the set of identifiers that
/// appear in the input; an input with no identifiers (e.g. `"7"`) yields a
/// constant over the empty set.
pub fn parse_poly(input: &str) -> Result<LaurentPoly> {
    // first pass: collect the variable names so factors can be built over
    // the full set up front
    let mut names: BTreeSet<String> = BTreeSet::new();
    {
        let mut cur = Cursor::new(input);
        while cur.pos < cur.bytes.len() {
            if let Some(id) = cur.ident() {
                names.insert(id);
            } else {
                cur.pos += 1;
            }
        }
    }
    let vars = VarSet::new(names)?;
    let mut cur = Cursor::new(input);
    let mut total = LaurentPoly::zero(vars.clone());
    let mut first = true;
    loop {
        cur.skip_ws();
        let sign = match cur.peek() {
            Some(b'+') if !first => {
                cur.bump();
                false
            }
            Some(b'-') => {
                cur.bump();
                true
            }
            Some(_) if first => false,
            None if first => return Err(cur.error("empty input")),
            None => break,
            Some(c) => return Err(cur.error(format!("unexpected `{}`", c as char))),
        };
        let mut term = parse_factor(&mut cur, &vars)?;
        while cur.peek() == Some(b'*') {
            cur.expect(b'*')?;
            let f = parse_factor(&mut cur, &vars)?;
            term = term.mul(&f).expect("same variable set");
        }
        if sign {
            term = term.neg();
        }
        total = total.add(&term).expect("same variable set");
        first = false;
        if cur.at_end() {
            break;
        }
    }
    Ok(total)
}
