use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{isqrt, square_part, ExactError, Rational};

/// An exact real number `(p + q*sqrt(D)) / r`.
///
/// Canonical form: `r > 0`, `gcd(p, q, r) = 1`, and either `q = 0` and `D = 0`
/// (a rational) or `q != 0` and `D > 1` squarefree. Two surds are therefore
/// equal in value exactly when they are structurally equal, and `q != 0`
/// always means the value is irrational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    p: BigInt,
    q: BigInt,
    d: BigInt,
    r: BigInt,
}

impl QuadraticSurd {
    /// Canonicalizes `(p + q*sqrt(d)) / r`, extracting square factors from `d`.
    pub fn new(
        p: impl Into<BigInt>,
        q: impl Into<BigInt>,
        d: impl Into<BigInt>,
        r: impl Into<BigInt>,
    ) -> Result<Self, ExactError> {
        let (p, mut q, d, r) = (p.into(), q.into(), d.into(), r.into());
        if r.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if q.is_zero() || d.is_zero() {
            return Ok(Self::reduced(p, BigInt::zero(), BigInt::zero(), r));
        }
        if d.is_negative() {
            return Err(ExactError::NegativeRadicand(d));
        }
        let (factor, core) = square_part(&d);
        q *= factor;
        if core.is_one() {
            return Ok(Self::reduced(p + q, BigInt::zero(), BigInt::zero(), r));
        }
        Ok(Self::reduced(p, q, core, r))
    }

    /// Sign and gcd normalization; `d` must already be squarefree (or zero with `q = 0`).
    fn reduced(mut p: BigInt, mut q: BigInt, mut d: BigInt, mut r: BigInt) -> Self {
        if q.is_zero() {
            d = BigInt::zero();
        }
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        let g = p.gcd(&q).gcd(&r);
        if !g.is_one() {
            p /= &g;
            q /= &g;
            r /= &g;
        }
        Self { p, q, d, r }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self { p: n.into(), q: BigInt::zero(), d: BigInt::zero(), r: BigInt::one() }
    }

    pub fn from_rational(x: &Rational) -> Self {
        Self::reduced(x.numer().clone(), BigInt::zero(), BigInt::zero(), x.denom().clone())
    }

    /// `sqrt(d)` for an integer `d >= 0`.
    pub fn sqrt_of(d: impl Into<BigInt>) -> Result<Self, ExactError> {
        let d = d.into();
        if d.is_negative() {
            return Err(ExactError::NegativeRadicand(d));
        }
        Self::new(0, 1, d, 1)
    }

    /// `sqrt(x)` for a rational `x >= 0`, as `sqrt(num*den)/den`.
    pub fn sqrt_rational(x: &Rational) -> Result<Self, ExactError> {
        if x.is_negative() {
            return Err(ExactError::NegativeRadicand(x.numer().clone()));
        }
        Self::new(0, 1, x.numer() * x.denom(), x.denom().clone())
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// The squarefree radicand, or zero for rationals.
    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| Rational::new(self.p.clone(), self.r.clone()))
    }

    /// The radicand shared by `self` and `other`, zero when both are rational.
    fn common_radicand(&self, other: &Self) -> Result<BigInt, ExactError> {
        match (self.is_rational(), other.is_rational()) {
            (true, true) => Ok(BigInt::zero()),
            (false, true) => Ok(self.d.clone()),
            (true, false) => Ok(other.d.clone()),
            (false, false) if self.d == other.d => Ok(self.d.clone()),
            (false, false) => Err(ExactError::FieldMismatch(self.d.clone(), other.d.clone())),
        }
    }

    /// Whether `self` and `other` can be combined without leaving one quadratic field.
    pub fn same_field(&self, other: &Self) -> bool {
        self.common_radicand(other).is_ok()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        let d = self.common_radicand(other)?;
        Ok(Self::reduced(
            &self.p * &other.r + &other.p * &self.r,
            &self.q * &other.r + &other.q * &self.r,
            d,
            &self.r * &other.r,
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactError> {
        let d = self.common_radicand(other)?;
        Ok(Self::reduced(
            &self.p * &other.p + &self.q * &other.q * &d,
            &self.p * &other.q + &self.q * &other.p,
            d,
            &self.r * &other.r,
        ))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ExactError> {
        self.common_radicand(other)?;
        self.checked_mul(&other.recip()?)
    }

    /// `1/x`, rationalizing the denominator with the conjugate.
    pub fn recip(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        // (p + q√D)/r inverts to r(p − q√D)/(p² − q²D); the norm is nonzero
        // because D is not a perfect square.
        let n = &self.p * &self.p - &self.q * &self.q * &self.d;
        Ok(Self::reduced(&self.r * &self.p, -(&self.r * &self.q), self.d.clone(), n))
    }

    /// Galois conjugate `(p − q√D)/r`.
    pub fn conj(&self) -> Self {
        Self { p: self.p.clone(), q: -&self.q, d: self.d.clone(), r: self.r.clone() }
    }

    /// Field norm `x * conj(x)`, always rational.
    pub fn norm(&self) -> Rational {
        Rational::new(&self.p * &self.p - &self.q * &self.q * &self.d, &self.r * &self.r)
    }

    pub fn square(&self) -> Self {
        self.checked_mul(self).expect("a surd shares its own field")
    }

    pub fn scale(&self, t: &Rational) -> Self {
        Self::reduced(&self.p * t.numer(), &self.q * t.numer(), self.d.clone(), &self.r * t.denom())
    }

    /// Sign of the real value.
    pub fn signum(&self) -> Ordering {
        // r > 0, so the sign is that of p + q√D.
        let sp = self.p.sign_ordering();
        let sq = self.q.sign_ordering();
        match (sp, sq) {
            (s, Ordering::Equal) | (Ordering::Equal, s) => s,
            (a, b) if a == b => a,
            // Opposite signs: the term with the larger square wins.
            (a, _) => {
                let pp = &self.p * &self.p;
                let qqd = &self.q * &self.q * &self.d;
                match pp.cmp(&qqd) {
                    Ordering::Greater => a,
                    Ordering::Less => a.reverse(),
                    Ordering::Equal => unreachable!("D is not a perfect square"),
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    /// Exact comparison by real value.
    pub fn compare(&self, other: &Self) -> Result<Ordering, ExactError> {
        if self.is_rational() && other.is_rational() {
            return Ok((&self.p * &other.r).cmp(&(&other.p * &self.r)));
        }
        Ok(self.checked_sub(other)?.signum())
    }

    /// Greatest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.p.div_floor(&self.r);
        }
        // s = floor(q√D) from the integer square root of q²D (never a perfect square).
        let root = isqrt(&(&self.q * &self.q * &self.d));
        let s = if self.q.is_positive() { root } else { -root - 1 };
        // p + q√D lies strictly between the integers p + s and p + s + 1, so
        // dividing by r > 0 floors the same as (p + s)/r.
        (&self.p + s).div_floor(&self.r)
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl PartialOrd for QuadraticSurd {
    /// `None` when the operands lie in different quadratic fields.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.compare(other).ok()
    }
}

impl From<Rational> for QuadraticSurd {
    fn from(x: Rational) -> Self {
        Self::from_rational(&x)
    }
}

impl From<i64> for QuadraticSurd {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigInt> for QuadraticSurd {
    fn from(n: BigInt) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return if self.r.is_one() { write!(f, "{}", self.p) } else { write!(f, "{}/{}", self.p, self.r) };
        }
        let sign = if self.q.is_negative() { '-' } else { '+' };
        write!(f, "({}{}{}*sqrt({}))/{}", self.p, sign, self.q.abs(), self.d, self.r)
    }
}

impl Neg for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn neg(self) -> QuadraticSurd {
        QuadraticSurd { p: -&self.p, q: -&self.q, d: self.d.clone(), r: self.r.clone() }
    }
}

impl Neg for QuadraticSurd {
    type Output = QuadraticSurd;
    fn neg(self) -> QuadraticSurd {
        -&self
    }
}

// Operator forms panic on field mismatch or division by zero; use the
// `checked_*` methods where operands may come from different fields.
macro_rules! surd_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&QuadraticSurd> for &QuadraticSurd {
            type Output = QuadraticSurd;
            fn $method(self, rhs: &QuadraticSurd) -> QuadraticSurd {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{}: {e}", stringify!($method)))
            }
        }
        impl $tr<QuadraticSurd> for QuadraticSurd {
            type Output = QuadraticSurd;
            fn $method(self, rhs: QuadraticSurd) -> QuadraticSurd {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QuadraticSurd> for QuadraticSurd {
            type Output = QuadraticSurd;
            fn $method(self, rhs: &QuadraticSurd) -> QuadraticSurd {
                (&self).$method(rhs)
            }
        }
        impl $tr<QuadraticSurd> for &QuadraticSurd {
            type Output = QuadraticSurd;
            fn $method(self, rhs: QuadraticSurd) -> QuadraticSurd {
                self.$method(&rhs)
            }
        }
    };
}

surd_binop!(Add, add, checked_add);
surd_binop!(Sub, sub, checked_sub);
surd_binop!(Mul, mul, checked_mul);
surd_binop!(Div, div, checked_div);
