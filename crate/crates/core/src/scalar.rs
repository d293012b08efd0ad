//! Scalar traits shared by the polynomial, operator and linear algebra layers.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, ToPrimitive};

/// Coefficient ring for polynomials, operators and matrices.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + PartialEq + Debug + Display + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;

    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_int(n) / Self::from_int(d)
    }

    /// Lossy conversion used by the floating-point flow checks.
    fn to_f64(&self) -> f64;
}

/// A scalar with exact division that round-trips through big rationals.
///
/// Elimination runs fraction-free over `BigInt`; results come back through
/// `from_big`, which fails instead of silently wrapping.
pub trait Exact: Scalar + Ord {
    fn to_big(&self) -> BigRational;
    fn from_big(b: &BigRational) -> Option<Self>;
}

impl Scalar for Ratio<i64> {
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(n)
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        Ratio::new(n, d)
    }
    fn to_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

impl Exact for Ratio<i64> {
    fn to_big(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
    fn from_big(b: &BigRational) -> Option<Self> {
        Some(Ratio::new(b.numer().to_i64()?, b.denom().to_i64()?))
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Exact for BigRational {
    fn to_big(&self) -> BigRational {
        self.clone()
    }
    fn from_big(b: &BigRational) -> Option<Self> {
        Some(b.clone())
    }
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_int(n: i64) -> Self {
        n as f32
    }
    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

/// Parses `p`, `-p` or `p/q` into an exact scalar.
pub fn parse_rational<S: Exact>(text: &str) -> Option<S> {
    let t = text.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim().parse::<i64>().ok()?, d.trim().parse::<i64>().ok()?),
        None => (t.parse::<i64>().ok()?, 1),
    };
    if d == 0 {
        return None;
    }
    Some(S::from_ratio(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational::<Rational64>("1/3"), Some(Rational64::new(1, 3)));
        assert_eq!(parse_rational::<Rational64>("-6"), Some(Rational64::from_integer(-6)));
        assert_eq!(parse_rational::<Rational64>("2/0"), None);
        assert_eq!(parse_rational::<Rational64>("x"), None);
    }

    #[test]
    fn big_round_trip() {
        let q = Rational64::new(-7, 12);
        assert_eq!(Rational64::from_big(&q.to_big()), Some(q));
        let huge = BigRational::from_integer(BigInt::from(i64::MAX) * 4);
        assert_eq!(Rational64::from_big(&huge), None);
    }
}
