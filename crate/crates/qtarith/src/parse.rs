//! Recursive-descent parser for expressions in `q`, `t`, integers,
//! `+ - * / ^` and parentheses. Juxtaposition such as `2q` or `(1-q)(1-t)`
//! is read as multiplication.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::QtError;
use crate::poly::QTPoly;
use crate::rational::QTRational;

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    i: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(p, c)| (p, if c == '\u{2212}' { '-' } else { c }))
            .collect();
        Parser { chars, i: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.i).map_or(self.src.len(), |&(p, _)| p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, QtError> {
        Err(QtError::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<QTRational, QtError> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.i += 1;
            let rhs = self.term()?;
            acc = if c == '+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QTRational, QtError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.i += 1;
                    acc = acc * self.unary()?;
                }
                Some('/') => {
                    self.i += 1;
                    let at = self.pos();
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs).map_err(|_| QtError::Parse {
                        pos: at,
                        msg: "division by zero".into(),
                    })?;
                }
                Some(c) if c == '(' || c == 'q' || c == 't' || c.is_ascii_digit() => {
                    acc = acc * self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<QTRational, QtError> {
        match self.peek() {
            Some('-') => {
                self.i += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.i += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<QTRational, QtError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.i += 1;
        let neg = if self.peek() == Some('-') {
            self.i += 1;
            true
        } else {
            false
        };
        let e = self.integer()?;
        let e: u32 = match u32::try_from(&e) {
            Ok(e) => e,
            Err(_) => return self.err("exponent too large"),
        };
        let p = base.pow(e);
        if neg {
            p.inv().or_else(|_| self.err("zero to a negative power"))
        } else {
            Ok(p)
        }
    }

    fn integer(&mut self) -> Result<BigInt, QtError> {
        let start = self.i;
        let mut n = BigInt::zero();
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            n = n * 10u32 + d;
            self.i += 1;
        }
        if self.i == start {
            return self.err("expected an integer");
        }
        Ok(n)
    }

    fn atom(&mut self) -> Result<QTRational, QtError> {
        match self.peek() {
            Some('q') => {
                self.i += 1;
                Ok(QTRational::q())
            }
            Some('t') => {
                self.i += 1;
                Ok(QTRational::t())
            }
            Some('(') => {
                self.i += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.i += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(QTRational::from_poly(QTPoly::constant(self.integer()?))),
            Some(c) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an element of `Q(q,t)`.
pub fn parse_rational(s: &str) -> Result<QTRational, QtError> {
    let mut p = Parser::new(s);
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parses a polynomial; fails if the expression has a nontrivial denominator.
pub fn parse_poly(s: &str) -> Result<QTPoly, QtError> {
    let r = parse_rational(s)?;
    if !r.den().is_one() {
        return Err(QtError::Parse { pos: 0, msg: "not a polynomial".into() });
    }
    Ok(r.into_parts().0)
}
