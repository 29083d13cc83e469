//! Matrices of rational functions of `t`, written as `"t,1-t;1+t,-t"`.

use hypercx_core::{ExactMatrix, Rational};
use num_traits::Zero;
use std::fmt;

/// Expression tree.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    /// Literal.
    Num(Rational),
    /// The variable.
    T,
    /// Negation.
    Neg(Box<Expr>),
    /// Binary operation.
    Bin(Op, Box<Expr>, Box<Expr>),
    /// Integer power.
    Pow(Box<Expr>, i32),
}

/// Binary operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    /// `+`
    Add,
    /// `-`
    Sub,
    /// `*`
    Mul,
    /// `/`
    Div,
}

/// Parse or evaluation failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveError(pub String);

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CurveError {}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: &str) -> Result<T, CurveError> {
        Err(CurveError(format!("{msg} at offset {}", self.pos)))
    }

    fn expr(&mut self) -> Result<Expr, CurveError> {
        let mut lhs = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let op = if c == b'+' { Op::Add } else { Op::Sub };
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(self.term()?));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, CurveError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(b'*') => Op::Mul,
                Some(b'/') => Op::Div,
                // Implicit product such as `2t` or `3(1-t)`.
                Some(b't' | b'(') => {
                    lhs = Expr::Bin(Op::Mul, Box::new(lhs), Box::new(self.power()?));
                    continue;
                }
                _ => return Ok(lhs),
            };
            self.pos += 1;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> Result<Expr, CurveError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, CurveError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = self.peek() == Some(b'-');
            if neg {
                self.pos += 1;
            }
            let e = self.integer()?;
            let e = i32::try_from(e).or_else(|_| self.err("exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64, CurveError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .or_else(|_| self.err("number too large"))
    }

    fn atom(&mut self) -> Result<Expr, CurveError> {
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                Ok(Expr::T)
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Num(Rational::from(self.integer()?))),
            _ => self.err("expected a number, 't' or '('"),
        }
    }
}

impl Expr {
    /// Parses one entry.
    pub fn parse(s: &str) -> Result<Expr, CurveError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let e = p.expr()?;
        if p.peek().is_some() {
            return p.err("unexpected trailing input");
        }
        Ok(e)
    }

    /// Value at `t`, or an error on division by zero.
    pub fn eval(&self, t: &Rational) -> Result<Rational, CurveError> {
        Ok(match self {
            Expr::Num(q) => q.clone(),
            Expr::T => t.clone(),
            Expr::Neg(e) => -e.eval(t)?,
            Expr::Pow(b, e) => {
                let v = b.eval(t)?;
                if *e < 0 && v.is_zero() {
                    return Err(CurveError(format!("division by zero at t = {t}")));
                }
                v.pow(*e)
            }
            Expr::Bin(op, a, b) => {
                let (x, y) = (a.eval(t)?, b.eval(t)?);
                match op {
                    Op::Add => x + y,
                    Op::Sub => x - y,
                    Op::Mul => x * y,
                    Op::Div if y.is_zero() => return Err(CurveError(format!("division by zero at t = {t}"))),
                    Op::Div => x / y,
                }
            }
        })
    }
}

/// A square matrix of expressions.
#[derive(Clone, Debug, PartialEq)]
pub struct Curve {
    /// Entries row by row.
    pub rows: Vec<Vec<Expr>>,
}

impl Curve {
    /// Parses `"e11,e12;e21,e22"`.
    pub fn parse(s: &str) -> Result<Curve, CurveError> {
        let rows = s
            .split(';')
            .map(|r| r.split(',').map(Expr::parse).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(CurveError(format!("curve {s:?} is not a square matrix")));
        }
        Ok(Curve { rows })
    }

    /// Size of the matrix.
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `A_t`.
    pub fn at(&self, t: &Rational) -> Result<ExactMatrix, CurveError> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.eval(t)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ExactMatrix::from_rows(rows))
    }
}

/// Parses a comma-separated list of rationals, or `a:b:n` for `n` equally
/// spaced values from `a` to `b`.
pub fn parse_t_values(s: &str) -> Result<Vec<Rational>, CurveError> {
    let num = |x: &str| x.trim().parse::<Rational>().map_err(|e| CurveError(format!("{x:?}: {e}")));
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() == 3 {
        let (a, b) = (num(parts[0])?, num(parts[1])?);
        let n: i64 = parts[2]
            .trim()
            .parse()
            .map_err(|_| CurveError(format!("bad count {:?}", parts[2])))?;
        if n < 1 {
            return Err(CurveError("count must be positive".into()));
        }
        if n == 1 {
            return Ok(vec![a]);
        }
        let step = (b - a.clone()) / Rational::from(n - 1);
        return Ok((0..n).map(|i| a.clone() + step.clone() * Rational::from(i)).collect());
    }
    let out = s.split(',').map(num).collect::<Result<Vec<_>, _>>()?;
    if out.is_empty() {
        return Err(CurveError("no t values".into()));
    }
    Ok(out)
}
