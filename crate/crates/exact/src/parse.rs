//! Recursive-descent reader for polynomial and rational-function literals.
//!
//! Accepts `+ - * / ^`, parentheses, unary minus, integer exponents (possibly
//! negative) and implicit multiplication such as `2a(1+a)`.

use num_bigint::BigInt;

use crate::{ExactError, MultiPoly, RatFunc, Rational};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ExactError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Num(src[start..i].parse().unwrap())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(ExactError::Parse {
                pos: i,
                msg: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn fail<T>(&self, msg: &str) -> Result<T, ExactError> {
        Err(ExactError::Parse {
            pos: self.pos(),
            msg: msg.to_string(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc, ExactError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_primary(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')))
    }

    fn term(&mut self) -> Result<RatFunc, ExactError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let pos = self.pos();
                let d = self.unary()?;
                acc = acc.div(&d).map_err(|_| ExactError::Parse {
                    pos,
                    msg: "division by zero".into(),
                })?;
            } else if self.starts_primary() {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, ExactError> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc, ExactError> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let paren = self.eat('(');
        let neg = self.eat('-');
        let e: i32 = match self.peek() {
            Some(Tok::Num(n)) => match i32::try_from(n.clone()) {
                Ok(v) => v,
                Err(_) => return self.fail("exponent too large"),
            },
            _ => return self.fail("expected integer exponent"),
        };
        self.at += 1;
        if paren && !self.eat(')') {
            return self.fail("expected ')'");
        }
        let e = if neg { -e } else { e };
        let pos = self.pos();
        base.pow(e).map_err(|_| ExactError::Parse {
            pos,
            msg: "negative power of zero".into(),
        })
    }

    fn primary(&mut self) -> Result<RatFunc, ExactError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(RatFunc::from_rational(Rational::from_integer(n)))
            }
            Some(Tok::Ident(v)) => {
                self.at += 1;
                Ok(RatFunc::from_poly(MultiPoly::var(&v)))
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.fail("expected ')'");
                }
                Ok(inner)
            }
            _ => self.fail("expected number, variable or '('"),
        }
    }
}

pub fn parse_ratfunc(src: &str) -> Result<RatFunc, ExactError> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
        end: src.len(),
    };
    let out = p.expr()?;
    if p.at != p.toks.len() {
        return p.fail("trailing input");
    }
    Ok(out)
}

/// Parses and insists the result is a polynomial.
pub fn parse_poly(src: &str) -> Result<MultiPoly, ExactError> {
    parse_ratfunc(src)?.to_poly()
}
