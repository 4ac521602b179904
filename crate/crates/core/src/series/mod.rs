//! Exact truncated power series and a small expression language in `t`.
//!
//! Every curvature claim checked downstream is reduced to an identity or a
//! vanishing order of a [`Jet`], so coefficients stay exact rationals.

mod expr;
mod jet;

use num_bigint::BigInt;
use num_rational::Ratio;
use thiserror::Error;

pub use expr::ScalarExpr;
pub use jet::{rational_to_f64, Jet, Vanishing, DEFAULT_ORDER};

/// Arbitrary-precision rational number.
pub type Rational = Ratio<BigInt>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    #[error("division by a jet with zero constant term")]
    DivisionByZeroConstantTerm,
    #[error("square root of a jet whose constant term is not positive")]
    NonPositiveConstantTerm,
    #[error("square root of a jet whose constant term is not a rational square")]
    IrrationalConstantTerm,
    #[error("domain error at t = {t}: {reason}")]
    Domain { t: f64, reason: String },
    #[error("expression cannot be expanded at t = 0: {reason}")]
    NotExpandable { reason: String },
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

/// Parses `"3"`, `"-2/5"` or `"0.25"` into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        return (d != BigInt::from(0)).then(|| Rational::new(n, d));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let value = match body.parse::<ScalarExpr>().ok()? {
        ScalarExpr::Const(c) => c,
        _ => return None,
    };
    Some(if negative { -value } else { value })
}

/// Serde helper writing a rational as its `p/q` text.
pub fn serialize_rational<S: serde::Serializer>(value: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("-2/4"), Some(Rational::new((-1).into(), 2.into())));
        assert_eq!(parse_rational("3"), Some(Rational::from_integer(3.into())));
        assert_eq!(parse_rational("-0.25"), Some(Rational::new((-1).into(), 4.into())));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("t"), None);
    }
}
