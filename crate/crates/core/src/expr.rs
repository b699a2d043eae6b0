//! Parser for coefficient and element expressions.
//!
//! Grammar (whitespace insensitive, left associative):
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' INTEGER)*
//! atom    := INTEGER | IDENT | '(' sum ')'
//! IDENT   := [a-zA-Z][a-zA-Z0-9_]*
//! ```
//!
//! Identifiers resolve either to indeterminates of a function field or, for
//! element expressions, to basis vectors of an algebra. Basis names win over
//! field symbols.

use num_bigint::BigInt;
use thiserror::Error;

use crate::scalars::{Field, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: unknown symbol `{name}`")]
    UnknownSymbol {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("{0}")]
    Type(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Sym { name: String, column: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_column: usize,
}

fn tokenize(text: &str, line: usize, column0: usize) -> Result<(Vec<(Tok, usize)>, usize), ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = column0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Int(s.parse().unwrap()), col));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), col));
            i += 1;
        } else if c == '\u{2212}' {
            out.push((Tok::Op('-'), col));
            i += 1;
        } else {
            return Err(ExprError::Parse {
                line,
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok((out, column0 + chars.len()))
}

impl Parser {
    fn err<T>(&self, column: usize, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Parse {
            line: self.line,
            column,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end_column)
    }

    fn eat_op(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.product()?;
        loop {
            if self.eat_op('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
            } else if self.eat_op('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat_op('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat_op('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat_op('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let mut base = self.atom()?;
        while self.eat_op('^') {
            let col = self.column();
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let Ok(e) = u32::try_from(n) else {
                        return self.err(col, "exponent too large");
                    };
                    base = Expr::Pow(Box::new(base), e);
                }
                _ => return self.err(col, "exponent must be a nonnegative integer"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let col = self.column();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Expr::Sym { name, column: col })
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat_op(')') {
                    return self.err(self.column(), "expected `)`");
                }
                Ok(e)
            }
            Some(Tok::Op(c)) => self.err(col, format!("unexpected `{c}`")),
            None => self.err(col, "unexpected end of expression"),
        }
    }
}

/// Parses `text`; `line` and `column0` locate it in an enclosing document
/// for error messages (columns are 1-based).
pub fn parse_at(text: &str, line: usize, column0: usize) -> Result<Expr, ExprError> {
    let (toks, end_column) = tokenize(text, line, column0)?;
    let mut p = Parser {
        toks,
        pos: 0,
        line,
        end_column,
    };
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return p.err(p.column(), "trailing input");
    }
    Ok(e)
}

pub fn parse(text: &str) -> Result<Expr, ExprError> {
    parse_at(text, 1, 1)
}

/// Result of evaluating an element expression.
#[derive(Debug, Clone, PartialEq)]
enum Value {
    Scalar(Scalar),
    Vector(Vec<Scalar>),
}

impl Expr {
    /// Evaluates a pure coefficient expression in `field`.
    pub fn eval_scalar(&self, field: &Field) -> Result<Scalar, ExprError> {
        match self.eval(field, &[], 1)? {
            Value::Scalar(s) => Ok(s),
            Value::Vector(_) => unreachable!("no basis names supplied"),
        }
    }

    /// Evaluates a linear combination of the named basis vectors. A bare
    /// zero is accepted as the zero vector.
    pub fn eval_element(&self, field: &Field, basis: &[String]) -> Result<Vec<Scalar>, ExprError> {
        self.eval_element_at(field, basis, 1)
    }

    pub fn eval_element_at(
        &self,
        field: &Field,
        basis: &[String],
        line: usize,
    ) -> Result<Vec<Scalar>, ExprError> {
        match self.eval(field, basis, line)? {
            Value::Vector(v) => Ok(v),
            Value::Scalar(s) if s.is_zero() => Ok(vec![field.zero(); basis.len()]),
            Value::Scalar(s) => Err(ExprError::Type(format!(
                "expected an algebra element, found the scalar {s}"
            ))),
        }
    }

    fn eval(&self, field: &Field, basis: &[String], line: usize) -> Result<Value, ExprError> {
        use Value::{Scalar as S, Vector as V};
        Ok(match self {
            Expr::Int(n) => S(field.from_bigint(n)),
            Expr::Sym { name, column } => {
                if let Some(i) = basis.iter().position(|b| b == name) {
                    let mut v = vec![field.zero(); basis.len()];
                    v[i] = field.one();
                    V(v)
                } else {
                    match field.symbol(name) {
                        Ok(s) => S(s),
                        Err(_) => {
                            return Err(ExprError::UnknownSymbol {
                                line,
                                column: *column,
                                name: name.clone(),
                            })
                        }
                    }
                }
            }
            Expr::Neg(e) => match e.eval(field, basis, line)? {
                S(s) => S(-s),
                V(v) => V(v.iter().map(|x| -x).collect()),
            },
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let sub = matches!(self, Expr::Sub(..));
                let l = a.eval(field, basis, line)?;
                let r = b.eval(field, basis, line)?;
                match (l, r) {
                    (S(x), S(y)) => S(if sub { x.checked_sub(&y)? } else { x.checked_add(&y)? }),
                    (V(x), V(y)) => V(x
                        .iter()
                        .zip(&y)
                        .map(|(p, q)| if sub { p - q } else { p + q })
                        .collect()),
                    (V(v), S(s)) if s.is_zero() => V(v),
                    (S(s), V(v)) if s.is_zero() => {
                        if sub {
                            V(v.iter().map(|x| -x).collect())
                        } else {
                            V(v)
                        }
                    }
                    _ => {
                        return Err(ExprError::Type(
                            "cannot add a nonzero scalar to an algebra element".into(),
                        ))
                    }
                }
            }
            Expr::Mul(a, b) => {
                let l = a.eval(field, basis, line)?;
                let r = b.eval(field, basis, line)?;
                match (l, r) {
                    (S(x), S(y)) => S(x.checked_mul(&y)?),
                    (S(s), V(v)) | (V(v), S(s)) => V(v.iter().map(|x| &s * x).collect()),
                    (V(_), V(_)) => {
                        return Err(ExprError::Type(
                            "products of algebra elements are not linear".into(),
                        ))
                    }
                }
            }
            Expr::Div(a, b) => {
                let l = a.eval(field, basis, line)?;
                let r = b.eval(field, basis, line)?;
                match (l, r) {
                    (S(x), S(y)) => S(x.checked_div(&y)?),
                    (V(v), S(s)) => {
                        let inv = s.inv()?;
                        V(v.iter().map(|x| x * &inv).collect())
                    }
                    _ => return Err(ExprError::Type("cannot divide by an algebra element".into())),
                }
            }
            Expr::Pow(e, k) => match e.eval(field, basis, line)? {
                S(s) => S(s.pow(*k)),
                V(_) => return Err(ExprError::Type("cannot raise an algebra element to a power".into())),
            },
        })
    }
}

/// Parses and evaluates a coefficient expression.
pub fn parse_scalar(text: &str, field: &Field) -> Result<Scalar, ExprError> {
    parse(text)?.eval_scalar(field)
}

/// Parses and evaluates an element expression over `basis`.
pub fn parse_element(text: &str, field: &Field, basis: &[String]) -> Result<Vec<Scalar>, ExprError> {
    parse(text)?.eval_element(field, basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_scalar("1/3 + 1/6", &Field::Rational).unwrap(), Scalar::rational(1, 2));
        assert_eq!(parse_scalar("-2^2", &Field::Rational).unwrap(), Scalar::rational(-4, 1));
        assert_eq!(parse_scalar("(-2)^2", &Field::Rational).unwrap(), Scalar::rational(4, 1));
        assert_eq!(parse_scalar("8/2/2", &Field::Rational).unwrap(), Scalar::rational(2, 1));
        assert_eq!(parse_scalar("1 - 2 - 3", &Field::Rational).unwrap(), Scalar::rational(-4, 1));
    }

    #[test]
    fn prime_literals() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(parse_scalar("1/3", &f5).unwrap(), f5.from_integer(2));
        assert!(matches!(
            parse_scalar("1/5", &f5),
            Err(ExprError::Scalar(ScalarError::DivisionByZero))
        ));
    }

    #[test]
    fn symbols_in_function_field() {
        let f = Field::skew_symbols();
        let e = parse_scalar("(alpha - beta)*(1/(alpha - beta))", &f).unwrap();
        assert!(e.is_one());
        let err = parse_scalar("alpha + gamma", &f).unwrap_err();
        assert_eq!(
            err,
            ExprError::UnknownSymbol {
                line: 1,
                column: 9,
                name: "gamma".into()
            }
        );
    }

    #[test]
    fn element_expressions() {
        let basis = names(&["s1", "s2", "d1", "d2"]);
        let v = parse_element("1/3*s1 + 1/6*d1 - 1/6*d2", &Field::Rational, &basis).unwrap();
        assert_eq!(
            v,
            vec![
                Scalar::rational(1, 3),
                Scalar::rational(0, 1),
                Scalar::rational(1, 6),
                Scalar::rational(-1, 6)
            ]
        );
        let z = parse_element("0", &Field::Rational, &basis).unwrap();
        assert!(z.iter().all(Scalar::is_zero));
        let w = parse_element("(s1 - s2)/2", &Field::Rational, &basis).unwrap();
        assert_eq!(w[1], Scalar::rational(-1, 2));
        assert!(parse_element("s1*s2", &Field::Rational, &basis).is_err());
        assert!(parse_element("1 + s1", &Field::Rational, &basis).is_err());
        assert!(parse_element("2", &Field::Rational, &basis).is_err());
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_at("1 + * 2", 4, 10) {
            Err(ExprError::Parse { line, column, .. }) => {
                assert_eq!((line, column), (4, 14));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse("x^y").is_err());
        assert!(parse("(1 + 2").is_err());
        assert!(parse("1 2").is_err());
        assert!(parse("3 $ 4").is_err());
    }
}
