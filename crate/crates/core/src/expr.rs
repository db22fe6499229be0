//! A small expression language shared by every section of a model file.
//!
//! Expressions are built from integer literals, identifiers, `+ - * / ^` and
//! parentheses. The identifiers `i` and `s` always denote the scalars `i` and
//! `s`; every other identifier is resolved by the caller, so the same syntax
//! evaluates to scalars, vectors (`e1 - s*e2`), forms (`x1*x2`, where `*`
//! between forms is the wedge product) or polynomials (`a1*x4`).

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exterior::Form;
use crate::scalar::Scalar;

/// A parse or evaluation error, positioned at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ExprError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl Pos {
    fn err(self, message: impl Into<String>) -> ExprError {
        ExprError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(BigInt, Pos),
    Ident(String, Pos),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>, Pos),
    Div(Box<Expr>, Box<Expr>, Pos),
    Pow(Box<Expr>, i32, Pos),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str, line: usize, col0: usize) -> Result<Vec<(Tok, Pos)>, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let pos = Pos {
            line,
            column: col0 + k,
        };
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push((Tok::Ident(chars[start..k].iter().collect()), pos));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), pos));
            k += 1;
        } else {
            return Err(pos.err(format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
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

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let pos = self.pos();
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?), pos);
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), pos);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        let pos = self.pos();
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let epos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                let e: i32 = n.try_into().map_err(|_| epos.err("exponent too large"))?;
                Ok(Expr::Pow(Box::new(base), if negative { -e } else { e }, pos))
            }
            _ => Err(epos.err("expected an integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ok(Expr::Int(n, pos))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                Ok(Expr::Ident(name, pos))
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.pos().err("expected ')'"));
                }
                Ok(inner)
            }
            Some(Tok::Op(c)) => Err(pos.err(format!("unexpected '{c}'"))),
            None => Err(pos.err("unexpected end of expression")),
        }
    }
}

/// Parses `text`, reporting positions relative to `line` and the 1-based
/// column `col0` at which `text` starts.
pub fn parse_at(text: &str, line: usize, col0: usize) -> Result<Expr, ExprError> {
    let toks = tokenize(text, line, col0)?;
    let end = Pos {
        line,
        column: col0 + text.chars().count(),
    };
    let mut p = Parser { toks, at: 0, end };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return Err(p.pos().err("unexpected trailing input"));
    }
    Ok(e)
}

pub fn parse(text: &str) -> Result<Expr, ExprError> {
    parse_at(text, 1, 1)
}

/// The algebra an expression is evaluated into.
pub trait Element: Clone {
    fn add(&self, other: &Self) -> Result<Self, String>;
    fn mul(&self, other: &Self) -> Result<Self, String>;
    fn scale(&self, c: &Scalar) -> Self;
    /// Embeds a scalar, if the algebra has a unit.
    fn lift(&self, c: &Scalar) -> Option<Self>;
}

#[derive(Clone, Debug)]
enum Value<T> {
    Scalar(Scalar),
    Elem(T),
}

/// Evaluates `e`, resolving identifiers other than `i` and `s` with `env`.
/// A purely scalar result is lifted with `unit`.
pub fn eval<T: Element>(
    e: &Expr,
    env: &dyn Fn(&str) -> Option<T>,
    unit: &dyn Fn(&Scalar) -> Option<T>,
) -> Result<T, ExprError> {
    match eval_value(e, env)? {
        Value::Elem(t) => Ok(t),
        Value::Scalar(c) => unit(&c).ok_or_else(|| first_pos(e).err("expected a non-scalar expression")),
    }
}

/// Evaluates an expression that may only mention `i` and `s`.
pub fn eval_scalar(e: &Expr) -> Result<Scalar, ExprError> {
    match eval_value::<NoElem>(e, &|_| None)? {
        Value::Scalar(c) => Ok(c),
        Value::Elem(n) => match n {},
    }
}

pub fn parse_scalar(text: &str) -> Result<Scalar, ExprError> {
    eval_scalar(&parse(text)?)
}

#[derive(Clone, Debug)]
enum NoElem {}

impl Element for NoElem {
    fn add(&self, _: &Self) -> Result<Self, String> {
        match *self {}
    }
    fn mul(&self, _: &Self) -> Result<Self, String> {
        match *self {}
    }
    fn scale(&self, _: &Scalar) -> Self {
        match *self {}
    }
    fn lift(&self, _: &Scalar) -> Option<Self> {
        match *self {}
    }
}

fn first_pos(e: &Expr) -> Pos {
    match e {
        Expr::Int(_, p) | Expr::Ident(_, p) | Expr::Mul(_, _, p) | Expr::Div(_, _, p) | Expr::Pow(_, _, p) => *p,
        Expr::Neg(a) | Expr::Add(a, _) | Expr::Sub(a, _) => first_pos(a),
    }
}

fn add_values<T: Element>(a: Value<T>, b: Value<T>, pos: Pos) -> Result<Value<T>, ExprError> {
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x + &y),
        (Value::Elem(x), Value::Elem(y)) => Value::Elem(x.add(&y).map_err(|m| pos.err(m))?),
        (Value::Elem(x), Value::Scalar(c)) | (Value::Scalar(c), Value::Elem(x)) => {
            if c.is_zero() {
                Value::Elem(x)
            } else {
                let lifted = x.lift(&c).ok_or_else(|| pos.err("cannot add a scalar here"))?;
                Value::Elem(x.add(&lifted).map_err(|m| pos.err(m))?)
            }
        }
    })
}

fn neg_value<T: Element>(a: Value<T>) -> Value<T> {
    match a {
        Value::Scalar(x) => Value::Scalar(-x),
        Value::Elem(x) => Value::Elem(x.scale(&Scalar::from_int(-1))),
    }
}

fn eval_value<T: Element>(e: &Expr, env: &dyn Fn(&str) -> Option<T>) -> Result<Value<T>, ExprError> {
    match e {
        Expr::Int(n, _) => Ok(Value::Scalar(Scalar::from_bigint(n.clone()))),
        Expr::Ident(name, pos) => match name.as_str() {
            "i" => Ok(Value::Scalar(Scalar::i())),
            "s" => Ok(Value::Scalar(Scalar::s())),
            _ => env(name)
                .map(Value::Elem)
                .ok_or_else(|| pos.err(format!("unknown identifier '{name}'"))),
        },
        Expr::Neg(a) => Ok(neg_value(eval_value(a, env)?)),
        Expr::Add(a, b) => add_values(eval_value(a, env)?, eval_value(b, env)?, first_pos(b)),
        Expr::Sub(a, b) => add_values(eval_value(a, env)?, neg_value(eval_value(b, env)?), first_pos(b)),
        Expr::Mul(a, b, pos) => Ok(match (eval_value(a, env)?, eval_value(b, env)?) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x * &y),
            (Value::Scalar(c), Value::Elem(x)) | (Value::Elem(x), Value::Scalar(c)) => Value::Elem(x.scale(&c)),
            (Value::Elem(x), Value::Elem(y)) => Value::Elem(x.mul(&y).map_err(|m| pos.err(m))?),
        }),
        Expr::Div(a, b, pos) => {
            let Value::Scalar(d) = eval_value(b, env)? else {
                return Err(pos.err("can only divide by a scalar"));
            };
            let inv = d.inv().map_err(|_| pos.err("division by zero"))?;
            Ok(match eval_value(a, env)? {
                Value::Scalar(x) => Value::Scalar(&x * &inv),
                Value::Elem(x) => Value::Elem(x.scale(&inv)),
            })
        }
        Expr::Pow(a, k, pos) => match eval_value(a, env)? {
            Value::Scalar(x) => x
                .pow(*k)
                .map(Value::Scalar)
                .map_err(|_| pos.err("division by zero")),
            Value::Elem(x) => {
                if *k < 1 {
                    return Err(pos.err("only positive powers of non-scalars"));
                }
                let mut acc = x.clone();
                for _ in 1..*k {
                    acc = acc.mul(&x).map_err(|m| pos.err(m))?;
                }
                Ok(Value::Elem(acc))
            }
        },
    }
}

/// Parses an identifier of the form `<prefix><k>` with `1 ≤ k ≤ n`,
/// returning the zero-based index.
pub fn indexed(name: &str, prefix: &str, n: usize) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    if rest.starts_with('0') {
        return None;
    }
    let k: usize = rest.parse().ok()?;
    (1..=n).contains(&k).then(|| k - 1)
}

/// Forms multiply by the wedge product.
impl Element for Form {
    fn add(&self, o: &Self) -> Result<Self, String> {
        Form::add(self, o).map_err(|e| e.to_string())
    }
    fn mul(&self, o: &Self) -> Result<Self, String> {
        self.wedge(o).map_err(|e| e.to_string())
    }
    fn scale(&self, c: &Scalar) -> Self {
        Form::scale(self, c)
    }
    fn lift(&self, c: &Scalar) -> Option<Self> {
        Some(Form::constant(self.dim(), c.clone()))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n, _) => write!(f, "{n}"),
            Expr::Ident(s, _) => write!(f, "{s}"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b, _) => write!(f, "({a} * {b})"),
            Expr::Div(a, b, _) => write!(f, "({a} / {b})"),
            Expr::Pow(a, k, _) => write!(f, "({a})^{k}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::Form;

    #[test]
    fn scalar_expressions() {
        assert_eq!(parse_scalar("(1+i)*(1-i)").unwrap(), Scalar::from_int(2));
        assert_eq!(parse_scalar("1/(s+i)").unwrap(), (&Scalar::s() + &Scalar::i()).inv().unwrap());
        assert_eq!(parse_scalar("-s^2 + 3/2").unwrap().to_string(), "-s^2 + 3/2");
        assert_eq!(parse_scalar("2^-1").unwrap(), Scalar::ratio(1, 2));
    }

    #[test]
    fn scalar_display_round_trips() {
        for text in ["(1+2*i)", "s^2 - i*s", "(s - i)/(s^2 + 1)", "-3/4*i"] {
            let v = parse_scalar(text).unwrap();
            assert_eq!(parse_scalar(&v.to_string()).unwrap(), v, "{text}");
        }
    }

    #[test]
    fn form_expressions() {
        let env = |name: &str| indexed(name, "x", 4).map(|k| Form::generator(4, k));
        let unit = |c: &Scalar| Some(Form::constant(4, c.clone()));
        let omega = eval(&parse("x1*x2 + x3*x4").unwrap(), &env, &unit).unwrap();
        assert_eq!(omega.to_string(), "x1*x2 + x3*x4");
        let swapped = eval(&parse("x2*x1").unwrap(), &env, &unit).unwrap();
        assert_eq!(swapped.to_string(), "-x1*x2");
        let again = eval(&parse(&omega.to_string()).unwrap(), &env, &unit).unwrap();
        assert_eq!(again, omega);
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_at("1 + $", 7, 3).unwrap_err();
        assert_eq!((err.line, err.column), (7, 7));
        let err = parse("(1 + s").unwrap_err();
        assert_eq!(err.column, 7);
        let err = parse_scalar("1/0").unwrap_err();
        assert!(err.message.contains("division by zero"));
        let err = parse_scalar("2*q").unwrap_err();
        assert_eq!(err.column, 3);
        assert!(parse("1 2").is_err());
        assert!(parse("x^y").is_err());
    }

    #[test]
    fn indexed_identifiers() {
        assert_eq!(indexed("x3", "x", 4), Some(2));
        assert_eq!(indexed("x5", "x", 4), None);
        assert_eq!(indexed("x0", "x", 4), None);
        assert_eq!(indexed("x01", "x", 4), None);
        assert_eq!(indexed("e1", "x", 4), None);
    }
}
