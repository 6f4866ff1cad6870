//! Small expression language shared by field elements, polynomials and
//! cohomology classes: integers, identifiers, `+ - * / ^` and parentheses.
//! Whitespace is ignored.

use std::fmt;

use super::{Field, FieldError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub message: String,
    /// Byte offset into the input.
    pub position: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at position {}", self.message, self.position)
    }
}

impl ParseError {
    pub fn new(message: impl Into<String>, position: usize) -> Self {
        Self { message: message.into(), position }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Sym(String, usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u64),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            let n = s[start..i]
                .parse::<i64>()
                .map_err(|_| ParseError::new("integer literal too large", start))?;
            out.push((Tok::Int(n), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(s[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else {
            return Err(ParseError::new(format!("unexpected character '{c}'"), i));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    // sum := term (('+'|'-') term)*
    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    // term := unary (('*'|'/') unary)*
    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(&Tok::Op('/')) {
                let at = self.offset();
                self.pos += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), at);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            let at = self.offset();
            match self.peek().cloned() {
                Some(Tok::Int(n)) if n >= 0 => {
                    self.pos += 1;
                    Ok(Expr::Pow(Box::new(base), n as u64))
                }
                _ => Err(ParseError::new("expected a non-negative integer exponent", at)),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Expr::Sym(name, at))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(')') {
                    return Err(ParseError::new("expected ')'", self.offset()));
                }
                Ok(e)
            }
            Some(Tok::Op(c)) => Err(ParseError::new(format!("unexpected '{c}'"), at)),
            None => Err(ParseError::new("unexpected end of input", at)),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks, pos: 0, end: s.len() };
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(ParseError::new("trailing input", p.offset()));
    }
    Ok(e)
}

/// Target of expression evaluation.
pub trait EvalTarget {
    type Value: Clone;
    fn constant(&self, n: i64) -> Self::Value;
    fn symbol(&self, name: &str, position: usize) -> Result<Self::Value, FieldError>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn div(&self, a: &Self::Value, b: &Self::Value, position: usize) -> Result<Self::Value, FieldError>;

    fn pow(&self, a: &Self::Value, e: u64) -> Self::Value {
        let mut acc = self.constant(1);
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

pub fn eval<T: EvalTarget>(target: &T, e: &Expr) -> Result<T::Value, FieldError> {
    Ok(match e {
        Expr::Int(n) => target.constant(*n),
        Expr::Sym(name, at) => target.symbol(name, *at)?,
        Expr::Add(a, b) => target.add(&eval(target, a)?, &eval(target, b)?),
        Expr::Sub(a, b) => target.sub(&eval(target, a)?, &eval(target, b)?),
        Expr::Mul(a, b) => target.mul(&eval(target, a)?, &eval(target, b)?),
        Expr::Div(a, b, at) => target.div(&eval(target, a)?, &eval(target, b)?, *at)?,
        Expr::Neg(a) => target.neg(&eval(target, a)?),
        Expr::Pow(a, k) => target.pow(&eval(target, a)?, *k),
    })
}

struct FieldTarget<'a, F: Field> {
    field: &'a F,
    symbols: &'a dyn Fn(&str) -> Option<F::Elem>,
}

impl<F: Field> EvalTarget for FieldTarget<'_, F> {
    type Value = F::Elem;

    fn constant(&self, n: i64) -> F::Elem {
        self.field.from_int(n)
    }

    fn symbol(&self, name: &str, position: usize) -> Result<F::Elem, FieldError> {
        (self.symbols)(name)
            .ok_or_else(|| ParseError::new(format!("unknown symbol '{name}' in {}", self.field.name()), position).into())
    }

    fn add(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.field.add(a, b)
    }

    fn sub(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.field.sub(a, b)
    }

    fn mul(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.field.mul(a, b)
    }

    fn neg(&self, a: &F::Elem) -> F::Elem {
        self.field.neg(a)
    }

    fn div(&self, a: &F::Elem, b: &F::Elem, position: usize) -> Result<F::Elem, FieldError> {
        self.field
            .div(a, b)
            .map_err(|_| ParseError::new("division by zero", position).into())
    }

    fn pow(&self, a: &F::Elem, e: u64) -> F::Elem {
        self.field.pow(a, e)
    }
}

/// Evaluate an expression inside a field, resolving identifiers through `symbols`.
pub fn eval_in_field<F: Field>(
    field: &F,
    e: &Expr,
    symbols: &dyn Fn(&str) -> Option<F::Elem>,
) -> Result<F::Elem, FieldError> {
    eval(&FieldTarget { field, symbols }, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_whitespace() {
        let e = parse_expr(" 1 + 2*3 ^2 ").unwrap();
        let f = super::super::PrimeField::new(101).unwrap();
        assert_eq!(eval_in_field(&f, &e, &|_| None).unwrap(), 19);
    }

    #[test]
    fn reports_position() {
        let err = parse_expr("1 + * 2").unwrap_err();
        assert_eq!(err.position, 4);
        let err = parse_expr("(1 + 2").unwrap_err();
        assert_eq!(err.position, 6);
        assert!(parse_expr("x^-1").is_err());
    }
}
