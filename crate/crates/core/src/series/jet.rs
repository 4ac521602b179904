use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Rational, SeriesError};

/// Truncation order used when callers do not ask for a specific one.
pub const DEFAULT_ORDER: usize = 16;

/// Truncated power series `a₀ + a₁t + … + a_K t^K` with exact rational
/// coefficients.
///
/// Binary operations between jets of different orders truncate to the
/// smaller one, so a result never claims more precision than its inputs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Jet {
    coeffs: Vec<Rational>,
}

/// Result of [`Jet::vanishing_order`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Vanishing {
    /// Every coefficient through the truncation order is zero.
    Saturated,
    /// First nonzero coefficient `leading` sits at `index`.
    At { index: usize, leading: Rational },
}

impl Vanishing {
    pub fn index(&self) -> Option<usize> {
        match self {
            Vanishing::Saturated => None,
            Vanishing::At { index, .. } => Some(*index),
        }
    }

    pub fn leading(&self) -> Option<&Rational> {
        match self {
            Vanishing::Saturated => None,
            Vanishing::At { leading, .. } => Some(leading),
        }
    }
}

impl fmt::Display for Vanishing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vanishing::Saturated => write!(f, "zero-through-K"),
            Vanishing::At { index, leading } => write!(f, "order {index}, leading {leading}"),
        }
    }
}

impl Jet {
    /// Builds a jet from its coefficient list; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty list.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least a constant term");
        Jet { coeffs }
    }

    /// Integer coefficients, padded with zeros (or truncated) to `order`.
    pub fn from_ints(values: &[i64], order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|i| values.get(i).map_or_else(Rational::zero, |&v| Rational::from_integer(v.into())))
            .collect();
        Jet { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Jet { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(value: Rational, order: usize) -> Self {
        let mut jet = Self::zero(order);
        jet.coeffs[0] = value;
        jet
    }

    /// The jet of the variable `t` itself.
    pub fn variable(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    /// `coeff · t^power`, which is the zero jet when `power > order`.
    pub fn monomial(coeff: Rational, power: usize, order: usize) -> Self {
        let mut jet = Self::zero(order);
        if power <= order {
            jet.coeffs[power] = coeff;
        }
        jet
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^index`, `None` beyond the truncation order.
    pub fn coeff(&self, index: usize) -> Option<&Rational> {
        self.coeffs.get(index)
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Jet {
        let keep = order.min(self.order()) + 1;
        Jet { coeffs: self.coeffs[..keep].to_vec() }
    }

    pub fn scale(&self, factor: &Rational) -> Jet {
        Jet { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    /// Adds a rational constant to the zeroth coefficient.
    pub fn add_constant(&self, value: &Rational) -> Jet {
        let mut out = self.clone();
        out.coeffs[0] += value;
        out
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn recip(&self) -> Result<Jet, SeriesError> {
        Jet::one(self.order()).checked_div(self)
    }

    /// Long division `self / divisor`, exact through the common order.
    pub fn checked_div(&self, divisor: &Jet) -> Result<Jet, SeriesError> {
        let b0 = divisor.constant_term();
        if b0.is_zero() {
            return Err(SeriesError::DivisionByZeroConstantTerm);
        }
        let order = self.order().min(divisor.order());
        let inv_b0 = b0.recip();
        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for j in 0..k {
                let b = &divisor.coeffs[k - j];
                if !b.is_zero() && !q[j].is_zero() {
                    acc -= &q[j] * b;
                }
            }
            q.push(acc * &inv_b0);
        }
        Ok(Jet { coeffs: q })
    }

    /// Square root by the coefficient recursion of `s·s = a`.
    ///
    /// The constant term must be a positive rational square, otherwise the
    /// result would not have rational coefficients.
    pub fn sqrt(&self) -> Result<Jet, SeriesError> {
        let a0 = self.constant_term();
        if !a0.is_positive() {
            return Err(SeriesError::NonPositiveConstantTerm);
        }
        let s0 = rational_sqrt(a0).ok_or(SeriesError::IrrationalConstantTerm)?;
        let two_s0_inv = (&s0 * Rational::from_integer(2.into())).recip();
        let order = self.order();
        let mut s: Vec<Rational> = Vec::with_capacity(order + 1);
        s.push(s0);
        for k in 1..=order {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                if !s[j].is_zero() && !s[k - j].is_zero() {
                    acc -= &s[j] * &s[k - j];
                }
            }
            s.push(acc * &two_s0_inv);
        }
        Ok(Jet { coeffs: s })
    }

    /// Integer power; negative exponents go through [`Jet::recip`].
    pub fn powi(&self, exponent: i32) -> Result<Jet, SeriesError> {
        let base = if exponent < 0 { self.recip()? } else { self.clone() };
        let mut e = exponent.unsigned_abs();
        let mut acc = Jet::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Termwise derivative. The order drops by one; an order-0 jet has no
    /// information about its derivative and maps to the order-0 zero jet.
    pub fn derivative(&self) -> Jet {
        if self.order() == 0 {
            return Jet::zero(0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect();
        Jet { coeffs }
    }

    pub fn vanishing_order(&self) -> Vanishing {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map_or(Vanishing::Saturated, |index| Vanishing::At {
                index,
                leading: self.coeffs[index].clone(),
            })
    }

    /// Evaluates the truncated polynomial at `t` in floating point.
    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * t + rational_to_f64(c))
    }

    /// Largest `|a_i| |t|^i` over the top `count` coefficients; a cheap
    /// estimate of how much the truncation matters at `t`.
    pub fn tail_magnitude(&self, t: f64, count: usize) -> f64 {
        let start = self.coeffs.len().saturating_sub(count);
        self.coeffs[start..]
            .iter()
            .enumerate()
            .map(|(j, c)| rational_to_f64(c).abs() * t.abs().powi((start + j) as i32))
            .fold(0.0, f64::max)
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    (&sn * &sn == *num && &sd * &sd == *den).then(|| Rational::new(sn, sd))
}

impl<'a> Add<&'a Jet> for &'a Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        let order = self.order().min(rhs.order());
        Jet { coeffs: (0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect() }
    }
}

impl<'a> Sub<&'a Jet> for &'a Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        let order = self.order().min(rhs.order());
        Jet { coeffs: (0..=order).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect() }
    }
}

impl<'a> Mul<&'a Jet> for &'a Jet {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Jet { coeffs }
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Jet> for Jet {
            type Output = Jet;
            fn $method(self, rhs: Jet) -> Jet {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Jet> for Jet {
            type Output = Jet;
            fn $method(self, rhs: &Jet) -> Jet {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        -&self
    }
}

impl fmt::Display for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "t")?,
                1 => write!(f, "{mag}*t")?,
                _ if mag.is_one() => write!(f, "t^{i}")?,
                _ => write!(f, "{mag}*t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}
