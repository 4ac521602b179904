use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::jet::rational_to_f64;
use super::{Jet, Rational, SeriesError};

/// Closed-form expression in the single variable `t`.
///
/// The text syntax accepted by [`FromStr`] is
///
/// ```text
/// expr     := term (("+" | "-") term)*
/// term     := unary (("*" | "/") unary)*
/// unary    := ("-" | "+") unary | power
/// power    := atom ("^" exponent)?
/// exponent := ["-"] integer | "(" ["-"] integer ")"
/// atom     := number | "t" | "sqrt" "(" expr ")" | "(" expr ")"
/// number   := digits ["." digits]
/// ```
///
/// Decimal literals are read as exact rationals (`0.05` is `1/20`).
/// Whitespace is ignored. `^` binds tighter than unary minus, so `-t^2`
/// is `-(t^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarExpr {
    Const(Rational),
    Var,
    Neg(Box<ScalarExpr>),
    Add(Box<ScalarExpr>, Box<ScalarExpr>),
    Sub(Box<ScalarExpr>, Box<ScalarExpr>),
    Mul(Box<ScalarExpr>, Box<ScalarExpr>),
    Div(Box<ScalarExpr>, Box<ScalarExpr>),
    Pow(Box<ScalarExpr>, i32),
    Sqrt(Box<ScalarExpr>),
}

impl ScalarExpr {
    pub fn t() -> Self {
        ScalarExpr::Var
    }

    pub fn int(v: i64) -> Self {
        ScalarExpr::Const(Rational::from_integer(v.into()))
    }

    pub fn rational(v: Rational) -> Self {
        ScalarExpr::Const(v)
    }

    pub fn powi(self, exponent: i32) -> Self {
        match (exponent, self) {
            (0, _) => ScalarExpr::int(1),
            (1, e) => e,
            (k, ScalarExpr::Const(c)) if k > 0 => ScalarExpr::Const(num_traits::pow(c, k as usize)),
            (k, e) => ScalarExpr::Pow(Box::new(e), k),
        }
    }

    pub fn sqrt(self) -> Self {
        ScalarExpr::Sqrt(Box::new(self))
    }

    fn as_const(&self) -> Option<&Rational> {
        match self {
            ScalarExpr::Const(c) => Some(c),
            _ => None,
        }
    }

    fn is_const(&self, v: i64) -> bool {
        self.as_const().is_some_and(|c| *c == Rational::from_integer(v.into()))
    }

    /// Floating-point evaluation. Division by an exact zero, zero raised to
    /// a negative power, a negative radicand, or a non-finite intermediate
    /// are all domain errors.
    pub fn eval(&self, t: f64) -> Result<f64, SeriesError> {
        let domain = |reason: &str| SeriesError::Domain { t, reason: reason.to_string() };
        let v = match self {
            ScalarExpr::Const(c) => rational_to_f64(c),
            ScalarExpr::Var => t,
            ScalarExpr::Neg(a) => -a.eval(t)?,
            ScalarExpr::Add(a, b) => a.eval(t)? + b.eval(t)?,
            ScalarExpr::Sub(a, b) => a.eval(t)? - b.eval(t)?,
            ScalarExpr::Mul(a, b) => a.eval(t)? * b.eval(t)?,
            ScalarExpr::Div(a, b) => {
                let den = b.eval(t)?;
                if den == 0.0 {
                    return Err(domain("division by zero"));
                }
                a.eval(t)? / den
            }
            ScalarExpr::Pow(a, k) => {
                let base = a.eval(t)?;
                if base == 0.0 && *k < 0 {
                    return Err(domain("zero raised to a negative power"));
                }
                base.powi(*k)
            }
            ScalarExpr::Sqrt(a) => {
                let rad = a.eval(t)?;
                if rad < 0.0 {
                    return Err(domain("square root of a negative number"));
                }
                rad.sqrt()
            }
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(domain("non-finite value"))
        }
    }

    /// Exact Taylor coefficients at `t = 0` through `order`.
    pub fn to_jet(&self, order: usize) -> Result<Jet, SeriesError> {
        let not_expandable = |reason: &str| SeriesError::NotExpandable { reason: reason.to_string() };
        Ok(match self {
            ScalarExpr::Const(c) => Jet::constant(c.clone(), order),
            ScalarExpr::Var => Jet::variable(order),
            ScalarExpr::Neg(a) => -a.to_jet(order)?,
            ScalarExpr::Add(a, b) => a.to_jet(order)? + b.to_jet(order)?,
            ScalarExpr::Sub(a, b) => a.to_jet(order)? - b.to_jet(order)?,
            ScalarExpr::Mul(a, b) => a.to_jet(order)? * b.to_jet(order)?,
            ScalarExpr::Div(a, b) => a
                .to_jet(order)?
                .checked_div(&b.to_jet(order)?)
                .map_err(|_| not_expandable("denominator vanishes at t = 0"))?,
            ScalarExpr::Pow(a, k) => a
                .to_jet(order)?
                .powi(*k)
                .map_err(|_| not_expandable("negative power of an expression vanishing at t = 0"))?,
            ScalarExpr::Sqrt(a) => a.to_jet(order)?.sqrt().map_err(|e| match e {
                SeriesError::IrrationalConstantTerm => not_expandable("radicand at t = 0 is not a rational square"),
                _ => not_expandable("radicand is not positive at t = 0"),
            })?,
        })
    }

    /// Symbolic derivative in `t`, with constant folding of trivial terms.
    pub fn derivative(&self) -> ScalarExpr {
        match self {
            ScalarExpr::Const(_) => ScalarExpr::int(0),
            ScalarExpr::Var => ScalarExpr::int(1),
            ScalarExpr::Neg(a) => -a.derivative(),
            ScalarExpr::Add(a, b) => a.derivative() + b.derivative(),
            ScalarExpr::Sub(a, b) => a.derivative() - b.derivative(),
            ScalarExpr::Mul(a, b) => a.derivative() * (**b).clone() + (**a).clone() * b.derivative(),
            ScalarExpr::Div(a, b) => {
                let num = a.derivative() * (**b).clone() - (**a).clone() * b.derivative();
                num / (**b).clone().powi(2)
            }
            ScalarExpr::Pow(a, k) => ScalarExpr::int(*k as i64) * (**a).clone().powi(k - 1) * a.derivative(),
            ScalarExpr::Sqrt(a) => a.derivative() / (ScalarExpr::int(2) * self.clone()),
        }
    }
}

impl Add for ScalarExpr {
    type Output = ScalarExpr;
    fn add(self, rhs: ScalarExpr) -> ScalarExpr {
        match (self.as_const(), rhs.as_const()) {
            (Some(a), Some(b)) => ScalarExpr::Const(a + b),
            (Some(a), None) if a.is_zero() => rhs,
            (None, Some(b)) if b.is_zero() => self,
            _ => ScalarExpr::Add(Box::new(self), Box::new(rhs)),
        }
    }
}

impl Sub for ScalarExpr {
    type Output = ScalarExpr;
    fn sub(self, rhs: ScalarExpr) -> ScalarExpr {
        match (self.as_const(), rhs.as_const()) {
            (Some(a), Some(b)) => ScalarExpr::Const(a - b),
            (Some(a), None) if a.is_zero() => -rhs,
            (None, Some(b)) if b.is_zero() => self,
            _ => ScalarExpr::Sub(Box::new(self), Box::new(rhs)),
        }
    }
}

impl Mul for ScalarExpr {
    type Output = ScalarExpr;
    fn mul(self, rhs: ScalarExpr) -> ScalarExpr {
        if self.is_const(0) || rhs.is_const(0) {
            return ScalarExpr::int(0);
        }
        match (self.as_const(), rhs.as_const()) {
            (Some(a), Some(b)) => ScalarExpr::Const(a * b),
            (Some(a), None) if a.is_one() => rhs,
            (None, Some(b)) if b.is_one() => self,
            _ => ScalarExpr::Mul(Box::new(self), Box::new(rhs)),
        }
    }
}

impl Div for ScalarExpr {
    type Output = ScalarExpr;
    fn div(self, rhs: ScalarExpr) -> ScalarExpr {
        match (self.as_const(), rhs.as_const()) {
            (Some(a), Some(b)) if !b.is_zero() => ScalarExpr::Const(a / b),
            (Some(a), _) if a.is_zero() => ScalarExpr::int(0),
            (None, Some(b)) if b.is_one() => self,
            _ => ScalarExpr::Div(Box::new(self), Box::new(rhs)),
        }
    }
}

impl Neg for ScalarExpr {
    type Output = ScalarExpr;
    fn neg(self) -> ScalarExpr {
        match self {
            ScalarExpr::Const(c) => ScalarExpr::Const(-c),
            ScalarExpr::Neg(inner) => *inner,
            e => ScalarExpr::Neg(Box::new(e)),
        }
    }
}

impl fmt::Display for ScalarExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarExpr::Const(c) => {
                if c.is_integer() && !c.is_negative() {
                    write!(f, "{c}")
                } else {
                    write!(f, "({c})")
                }
            }
            ScalarExpr::Var => write!(f, "t"),
            ScalarExpr::Neg(a) => write!(f, "(-{a})"),
            ScalarExpr::Add(a, b) => write!(f, "({a} + {b})"),
            ScalarExpr::Sub(a, b) => write!(f, "({a} - {b})"),
            ScalarExpr::Mul(a, b) => write!(f, "({a}*{b})"),
            ScalarExpr::Div(a, b) => write!(f, "({a}/{b})"),
            ScalarExpr::Pow(a, k) => write!(f, "{a}^{k}"),
            ScalarExpr::Sqrt(a) => write!(f, "sqrt({a})"),
        }
    }
}

impl FromStr for ScalarExpr {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser { src: s.as_bytes(), pos: 0 };
        let e = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(e)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> SeriesError {
        SeriesError::Parse { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
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

    fn expect(&mut self, c: u8) -> Result<(), SeriesError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<ScalarExpr, SeriesError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = ScalarExpr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = ScalarExpr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<ScalarExpr, SeriesError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(b'*') {
                lhs = ScalarExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                lhs = ScalarExpr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<ScalarExpr, SeriesError> {
        if self.eat(b'-') {
            Ok(ScalarExpr::Neg(Box::new(self.unary()?)))
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<ScalarExpr, SeriesError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let paren = self.eat(b'(');
        let negative = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer exponent"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let mut k: i32 = digits.parse().map_err(|_| self.error("exponent out of range"))?;
        if negative {
            k = -k;
        }
        if paren {
            self.expect(b')')?;
        }
        Ok(ScalarExpr::Pow(Box::new(base), k))
    }

    fn atom(&mut self) -> Result<ScalarExpr, SeriesError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
                    self.pos += 1;
                }
                match &self.src[start..self.pos] {
                    b"t" => Ok(ScalarExpr::Var),
                    b"sqrt" => {
                        self.expect(b'(')?;
                        let e = self.expr()?;
                        self.expect(b')')?;
                        Ok(ScalarExpr::Sqrt(Box::new(e)))
                    }
                    _ => {
                        self.pos = start;
                        Err(self.error("unknown identifier"))
                    }
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<ScalarExpr, SeriesError> {
        let start = self.pos;
        let mut int_part = String::new();
        let mut frac_part = String::new();
        while let Some(&c) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
            int_part.push(c as char);
            self.pos += 1;
        }
        if self.src.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            while let Some(&c) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
                frac_part.push(c as char);
                self.pos += 1;
            }
        }
        if int_part.is_empty() && frac_part.is_empty() {
            self.pos = start;
            return Err(self.error("malformed number"));
        }
        let digits = format!("{int_part}{frac_part}");
        let numer: BigInt = digits.parse().map_err(|_| self.error("malformed number"))?;
        let denom = num_traits::pow(BigInt::from(10), frac_part.len());
        Ok(ScalarExpr::Const(Rational::new(numer, denom)))
    }
}
