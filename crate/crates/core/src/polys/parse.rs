//! A small expression reader for polynomials, e.g. `sqrt(3)*z*w^2 - i*conj(w)/2`.
//!
//! Variables are `z, w` when `n = 2` and `z1, ..., zn` otherwise (`z1, z2` are
//! also accepted for `n = 2`). Division is only allowed by constants.

use super::{BiPoly, Monomial, Var};
use crate::error::{Error, Result};
use crate::scalars::{ComplexRadical, RadicalReal};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

fn err(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
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

    fn ident(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| err(format!("expected an integer at offset {start}")))
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        if self.n == 2 {
            match name {
                "z" => return Some(0),
                "w" => return Some(1),
                _ => {}
            }
        }
        let idx: usize = name.strip_prefix('z')?.parse().ok()?;
        (1..=self.n).contains(&idx).then(|| idx - 1)
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.power()?;
            } else if self.eat(b'/') {
                let d = self.power()?;
                let c = d
                    .as_constant()
                    .filter(|c| !c.is_zero())
                    .ok_or_else(|| err("division by a non-constant or zero"))?;
                acc = acc.scale(&c.inverse().map_err(Error::from)?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<BiPoly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.integer()?;
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BiPoly> {
        let n = self.n;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(err("unbalanced parenthesis"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(BiPoly::constant(n, ComplexRadical::from_integer(v as i64)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                match name.as_str() {
                    "i" => Ok(BiPoly::constant(n, ComplexRadical::i())),
                    "sqrt" => {
                        if !self.eat(b'(') {
                            return Err(err("sqrt needs parentheses"));
                        }
                        let r = self.integer()?;
                        if !self.eat(b')') {
                            return Err(err("sqrt takes a natural number"));
                        }
                        Ok(BiPoly::constant(n, RadicalReal::sqrt_int(r).into()))
                    }
                    "conj" => {
                        if !self.eat(b'(') {
                            return Err(err("conj needs parentheses"));
                        }
                        let inner = self.expr()?;
                        if !self.eat(b')') {
                            return Err(err("unbalanced parenthesis"));
                        }
                        Ok(inner.conjugate())
                    }
                    other => {
                        let j = self
                            .var_index(other)
                            .ok_or_else(|| err(format!("unknown symbol {other:?}")))?;
                        Ok(BiPoly::term(Monomial::var(n, Var::Z(j)), ComplexRadical::one()))
                    }
                }
            }
            _ => Err(err(format!("unexpected input at offset {}", self.pos))),
        }
    }
}

impl BiPoly {
    /// Parses a polynomial expression in `n` variables.
    pub fn parse(n: usize, s: &str) -> Result<BiPoly> {
        let cleaned: Vec<u8> = s.bytes().filter(|c| !c.is_ascii_whitespace()).collect();
        let mut p = Parser {
            src: &cleaned,
            pos: 0,
            n,
        };
        let out = p.expr()?;
        if p.pos != cleaned.len() {
            return Err(err(format!("trailing input in {s:?}")));
        }
        Ok(out)
    }
}

/// Parses a comma separated list of polynomials; commas inside parentheses
/// do not split.
pub fn parse_list(n: usize, s: &str) -> Result<Vec<BiPoly>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .filter(|t| balanced(t))
        .unwrap_or(s);
    split_top_level(s, ',')
        .into_iter()
        .map(|piece| BiPoly::parse(n, piece))
        .collect()
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

/// Splits on `sep` outside of any brackets.
pub fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(s[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_map_components() {
        let v = parse_list(2, "(z^4, z^3*w, sqrt(3)*z*w, w^3)").unwrap();
        assert_eq!(v.len(), 4);
        assert_eq!(v[2].to_string(), "sqrt(3)*z*w");
        let p = BiPoly::parse(2, "(z+w)^2 - 2*z*w").unwrap();
        assert_eq!(p, BiPoly::parse(2, "z^2 + w^2").unwrap());
        let q = BiPoly::parse(2, "sqrt(3)/2*z^2").unwrap();
        assert_eq!(q.to_string(), "1/2*sqrt(3)*z^2");
        let c = BiPoly::parse(2, "i*z*conj(w)").unwrap();
        assert_eq!(c.conjugate(), BiPoly::parse(2, "-i*conj(z)*w").unwrap());
        let three = BiPoly::parse(3, "z1*z3 - z2").unwrap();
        assert_eq!(three.n(), 3);
    }

    #[test]
    fn rejects_garbage() {
        assert!(BiPoly::parse(2, "z +").is_err());
        assert!(BiPoly::parse(2, "q").is_err());
        assert!(BiPoly::parse(2, "1/z").is_err());
        assert!(BiPoly::parse(2, "(z").is_err());
    }
}
