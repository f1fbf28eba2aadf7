//! Textual scalar syntax: rational literals, `i`, declared symbols, `+ - * / ^`
//! and parentheses. Division is only by nonzero constants.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{GaussianRational, Polynomial};
use crate::error::{Error, Result};

struct Parser<'a, F> {
    src: &'a str,
    pos: usize,
    resolve: F,
}

impl<'a, F: Fn(&str) -> Option<Polynomial>> Parser<'a, F> {
    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn bump(&mut self) {
        if let Some(c) = self.src[self.pos..].chars().next() {
            self.pos += c.len_utf8();
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in `{}`", self.pos, self.src))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some('/') => {
                    self.bump();
                    let d = self.unary()?;
                    let c = d
                        .as_constant()
                        .and_then(|c| c.inv())
                        .ok_or_else(|| self.err("division by a non-constant or zero"))?;
                    acc = acc.scale(&c);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some('-') => {
                self.bump();
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let digits = self.take_while(|c| c.is_ascii_digit());
            let e: u32 = digits.parse().map_err(|_| self.err("expected integer exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if pred(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                let n: BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
                Ok(Polynomial::constant(GaussianRational::real(BigRational::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
                if name == "i" {
                    return Ok(Polynomial::constant(GaussianRational::i()));
                }
                (self.resolve)(name).ok_or_else(|| Error::Parse(format!("undeclared symbol `{name}`")))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses a scalar expression. `resolve` maps identifiers (other than `i`)
/// to polynomials, typically declared symbols and their `_bar` partners.
pub fn parse_scalar(text: &str, resolve: impl Fn(&str) -> Option<Polynomial>) -> Result<Polynomial> {
    let mut p = Parser { src: text, pos: 0, resolve };
    if p.peek().is_none() {
        return Err(Error::Parse("empty scalar".into()));
    }
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Symbol;

    fn resolve(name: &str) -> Option<Polynomial> {
        match name {
            "lam" => Some(Polynomial::var(Symbol::real("lam"))),
            "psi2" => Some(Polynomial::var(Symbol::complex("psi2"))),
            "psi2_bar" => Some(Polynomial::var(Symbol::complex("psi2").conj())),
            _ => None,
        }
    }

    #[test]
    fn literals() {
        let p = parse_scalar("1/2+3/4*i", resolve).unwrap();
        assert_eq!(p.as_constant().unwrap(), GaussianRational::complex((1, 2), (3, 4)));
        assert_eq!(parse_scalar("-3", resolve).unwrap(), Polynomial::int(-3));
        assert_eq!(parse_scalar("2^3", resolve).unwrap(), Polynomial::int(8));
    }

    #[test]
    fn symbols_and_round_trip() {
        let p = parse_scalar("-psi2/2 + (1-2*i)*lam*psi2_bar", resolve).unwrap();
        let again = parse_scalar(&p.to_string(), resolve).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn rejects() {
        assert!(parse_scalar("x", resolve).is_err());
        assert!(parse_scalar("1/lam", resolve).is_err());
        assert!(parse_scalar("1/0", resolve).is_err());
        assert!(parse_scalar("(1", resolve).is_err());
        assert!(parse_scalar("1 2", resolve).is_err());
        assert!(parse_scalar("", resolve).is_err());
    }
}
