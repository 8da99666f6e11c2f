//! Exact numeric substrate: big rationals and quadratic surds `(p + q*sqrt(D))/r`
//! in a single real quadratic field.
//!
//! Nothing in this module touches floating point. Ordering, floors and square
//! roots are all decided with integer arithmetic.

mod decimal;
mod parse;
mod surd;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use decimal::decimal_string;
pub use parse::{parse_number, parse_rational};
pub use surd::QuadraticSurd;

/// A canonical fraction of arbitrary-size integers.
///
/// `num_rational::BigRational` already keeps `den > 0` and `gcd(|num|, den) = 1`
/// after every operation, so it is used as-is.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("negative radicand {0} with nonzero surd coefficient")]
    NegativeRadicand(BigInt),
    #[error("operands lie in different quadratic fields (sqrt({0}) vs sqrt({1}))")]
    FieldMismatch(BigInt, BigInt),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Builds the canonical rational `num/den`.
pub fn rational_make(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational, ExactError> {
    let den = den.into();
    if den.is_zero() {
        return Err(ExactError::ZeroDenominator);
    }
    Ok(Rational::new(num.into(), den))
}

/// `floor(sqrt(n))` for `n >= 0`.
pub(crate) fn isqrt(n: &BigInt) -> BigInt {
    debug_assert!(!n.is_negative());
    n.sqrt()
}

/// Returns `Some(s)` with `s*s == n` when `n` is a perfect square.
pub(crate) fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = isqrt(n);
    (&s * &s == *n).then_some(s)
}

/// Splits `n > 0` as `factor^2 * core` with `core` squarefree.
///
/// Trial division runs only up to the cube root of the unfactored part; what is
/// left then has at most two prime factors, so it is either a square or
/// squarefree.
pub(crate) fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.is_positive());
    let mut rest = n.clone();
    let mut factor = BigInt::one();
    let mut core = BigInt::one();
    let mut k = BigInt::from(2u32);
    while &k * &k * &k <= rest {
        let mut mult = 0u32;
        loop {
            let (quo, rem) = rest.div_rem(&k);
            if !rem.is_zero() {
                break;
            }
            rest = quo;
            mult += 1;
        }
        if mult > 0 {
            factor *= k.pow(mult / 2);
            if mult % 2 == 1 {
                core *= &k;
            }
        }
        k += if k == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    match exact_sqrt(&rest) {
        Some(s) => factor *= s,
        None => core *= rest,
    }
    (factor, core)
}
