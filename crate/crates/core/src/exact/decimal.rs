use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{QuadraticSurd, Rational};

/// Decimal rendering of `x` rounded to `digits` places (ties round up).
///
/// For display only; computed as `floor(x * 10^digits + 1/2)` in exact arithmetic.
pub fn decimal_string(x: &QuadraticSurd, digits: usize) -> String {
    let scale = Rational::from_integer(BigInt::from(10u32).pow(digits as u32));
    let half = QuadraticSurd::from_rational(&Rational::new(1.into(), 2.into()));
    let n = (x.scale(&scale) + half).floor();
    let negative = n.is_negative();
    let mut body = n.abs().to_string();
    if digits > 0 {
        if body.len() <= digits {
            body = format!("{}{}", "0".repeat(digits + 1 - body.len()), body);
        }
        body.insert(body.len() - digits, '.');
    }
    if negative && !n.is_zero() {
        body.insert(0, '-');
    }
    body
}
