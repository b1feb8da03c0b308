//! Exact coefficient layer: arbitrary-precision rationals, sparse
//! multivariate polynomials over them, and dense univariate polynomials.
//!
//! Every value is immutable after construction and every operation is a
//! pure function, so all of this is safe to use from any thread.

mod mono;
mod multipoly;
mod parse;
mod unipoly;

pub use mono::{monomials_of_degree, Mono};
pub use multipoly::MultiPoly;
pub use parse::{parse_poly, parse_rat};
pub use unipoly::{interpolate_univariate, UniPoly};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator (maintained by `num-rational`).
pub type Rat = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ArithError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("variable sets differ: {0} vs {1}")]
    VariableMismatch(String, String),
    #[error("repeated abscissa {0} in interpolation data")]
    RepeatedAbscissa(String),
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// n/d as a rational; panics on d = 0.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// x^k for a (possibly negative) integer exponent; panics on 0^negative.
pub fn rat_pow(x: &Rat, k: i64) -> Rat {
    if k >= 0 {
        x.pow(k as i32)
    } else {
        assert!(!x.is_zero(), "zero to a negative power");
        x.pow(-k as i32).recip()
    }
}

/// Exact n-choose-k as a BigInt.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// k! as a BigInt.
pub fn factorial(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    acc
}

/// If `value` is an exact integer power of `base`, return the exponent.
/// Used to read a scaling degree off the ratio Tor(mu f)/Tor(f).
pub fn exact_power_of(value: &Rat, base: &Rat) -> Option<i64> {
    if value.is_zero() || base.is_zero() || base.abs().is_one() {
        return None;
    }
    // normalize so |b| > 1, then walk |value| toward 1
    let (b, flip) = if base.abs() > Rat::one() {
        (base.clone(), 1i64)
    } else {
        (base.recip(), -1i64)
    };
    let mut v = value.clone();
    let mut k = 0i64;
    if v.abs() > Rat::one() {
        while v.abs() > Rat::one() && k <= 4096 {
            v = &v / &b;
            k += 1;
        }
    } else {
        while v.abs() < Rat::one() && k >= -4096 {
            v = &v * &b;
            k -= 1;
        }
    }
    if v.is_one() {
        Some(k * flip)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_helpers() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat_pow(&rat(2, 3), -2), rat(9, 4));
        assert_eq!(rat_pow(&rat_int(5), 0), rat_int(1));
    }

    #[test]
    fn binomial_factorial() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 7), BigInt::zero());
        assert_eq!(factorial(6), BigInt::from(720));
    }

    #[test]
    fn power_detection() {
        assert_eq!(exact_power_of(&rat_int(4096), &rat_int(2)), Some(12));
        assert_eq!(exact_power_of(&rat(1, 8), &rat_int(2)), Some(-3));
        assert_eq!(exact_power_of(&rat_int(12), &rat_int(2)), None);
        assert_eq!(exact_power_of(&rat_int(1), &rat_int(3)), Some(0));
        assert_eq!(exact_power_of(&rat(9, 4), &rat(3, 2)), Some(2));
    }
}
