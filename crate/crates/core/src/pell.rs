//! Side and diameter numbers, the Pell property, and the two descents.
//!
//! `p1 = q1 = 1`, `p_{n+1} = p_n + q_n`, `q_{n+1} = 2p_n + q_n`, and
//! `q_n^2 - 2p_n^2 = (-1)^n`.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed};
use serde_json::{json, Value};
use thiserror::Error;

use crate::anth::{euclid_anth, AnthError, Steps};
use crate::exact::{decimal_string, ExactError, QuadraticSurd, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PellError {
    #[error("index must be at least 1, got {0}")]
    BadIndex(u64),
    #[error("range violation: {0}")]
    RangeViolation(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Anth(#[from] AnthError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideDiameterPair {
    pub n: u64,
    /// side number
    pub p: BigInt,
    /// diameter number
    pub q: BigInt,
    /// `q^2 - 2p^2`
    pub defect: BigInt,
}

impl SideDiameterPair {
    fn first() -> Self {
        Self { n: 1, p: BigInt::one(), q: BigInt::one(), defect: BigInt::from(-1) }
    }

    fn succ(&self) -> Self {
        let p = &self.p + &self.q;
        let q = &self.p * 2 + &self.q;
        let defect = &q * &q - &p * &p * 2;
        Self { n: self.n + 1, p, q, defect }
    }

    /// `q/p` as an exact rational.
    pub fn ratio(&self) -> Rational {
        Rational::new(self.q.clone(), self.p.clone())
    }

    /// `q^2 = 2p^2 + (-1)^n`, recomputed from scratch.
    pub fn pell_holds(&self) -> bool {
        let sign = if self.n.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
        &self.q * &self.q == &self.p * &self.p * 2 + sign
    }

    pub fn to_json(&self, digits: usize) -> Value {
        json!({
            "n": self.n,
            "p": self.p.to_string(),
            "q": self.q.to_string(),
            "defect": self.defect.to_string(),
            "ratio": decimal_string(&QuadraticSurd::from_rational(&self.ratio()), digits),
            "display_only": true,
        })
    }
}

/// Endless stream of side/diameter pairs starting at `n = 1`.
#[derive(Debug, Clone)]
pub struct SideDiameters {
    next: SideDiameterPair,
}

impl Default for SideDiameters {
    fn default() -> Self {
        Self { next: SideDiameterPair::first() }
    }
}

impl Iterator for SideDiameters {
    type Item = SideDiameterPair;

    fn next(&mut self) -> Option<SideDiameterPair> {
        let succ = self.next.succ();
        Some(std::mem::replace(&mut self.next, succ))
    }
}

pub fn side_diameters() -> SideDiameters {
    SideDiameters::default()
}

pub fn side_diameter(n: u64) -> Result<SideDiameterPair, PellError> {
    if n < 1 {
        return Err(PellError::BadIndex(n));
    }
    Ok(side_diameters().nth((n - 1) as usize).expect("stream is endless"))
}

/// Checks made at one index of the induction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexCheck {
    pub n: u64,
    /// `q_n^2 = 2p_n^2 + (-1)^n`
    pub pell: bool,
    /// `q_{n+1}^2 + q_n^2 = 2p_{n+1}^2 + 2p_n^2`
    pub ii10: bool,
    /// `defect(n+1) = -defect(n)`
    pub flip: bool,
}

impl IndexCheck {
    pub fn holds(&self) -> bool {
        self.pell && self.ii10 && self.flip
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionReport {
    pub base: bool,
    pub checks: Vec<IndexCheck>,
    pub first_failure: Option<u64>,
}

impl InductionReport {
    pub fn all_hold(&self) -> bool {
        self.base && self.first_failure.is_none()
    }
}

/// Verifies the Pell property for `n = 1..=N` by induction: the base case
/// `q1^2 = 2p1^2 - 1`, then at each `n` the sum identity between `n` and
/// `n + 1` and the sign flip of the defect.
pub fn pell_induction_verify(big_n: u64) -> InductionReport {
    let mut pairs = side_diameters();
    let mut cur = pairs.next().expect("stream is endless");
    let base = &cur.q * &cur.q == &cur.p * &cur.p * 2 - 1;
    let mut checks = Vec::with_capacity(big_n as usize);
    for _ in 0..big_n {
        let next = pairs.next().expect("stream is endless");
        let lhs = &next.q * &next.q + &cur.q * &cur.q;
        let rhs = (&next.p * &next.p + &cur.p * &cur.p) * 2;
        checks.push(IndexCheck {
            n: cur.n,
            pell: cur.pell_holds(),
            ii10: lhs == rhs,
            flip: next.defect == -&cur.defect,
        });
        cur = next;
    }
    let first_failure = checks.iter().find(|c| !c.holds()).map(|c| c.n);
    InductionReport { base, checks, first_failure }
}

fn ensure_positive(x: &QuadraticSurd, name: &str) -> Result<(), PellError> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(PellError::RangeViolation(format!("{name} = {x} is not positive")))
    }
}

/// `(a, b) -> (a + 2b, a + b)`.
pub fn elegant_step(a: &QuadraticSurd, b: &QuadraticSurd) -> Result<(QuadraticSurd, QuadraticSurd), PellError> {
    ensure_positive(a, "a")?;
    ensure_positive(b, "b")?;
    let two_b = b.checked_add(b)?;
    Ok((a.checked_add(&two_b)?, a.checked_add(b)?))
}

/// `(a, b) -> (2b - a, a - b)`, defined for `b < a < 2b`.
pub fn subtractive_step(a: &QuadraticSurd, b: &QuadraticSurd) -> Result<(QuadraticSurd, QuadraticSurd), PellError> {
    ensure_positive(b, "b")?;
    let two_b = b.checked_add(b)?;
    if a.compare(b)? != Ordering::Greater || a.compare(&two_b)? != Ordering::Less {
        return Err(PellError::RangeViolation(format!("need b < a < 2b, got a = {a}, b = {b}")));
    }
    Ok((two_b.checked_sub(a)?, a.checked_sub(b)?))
}

/// `a^2 - 2b^2`.
pub fn defect_of(a: &QuadraticSurd, b: &QuadraticSurd) -> Result<QuadraticSurd, ExactError> {
    let b2 = b.square();
    a.square().checked_sub(&b2.checked_add(&b2)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentStep {
    pub d: QuadraticSurd,
    pub s: QuadraticSurd,
    /// `d^2 = 2s^2`
    pub relation: bool,
    /// `0 < s < previous s`
    pub decreasing: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentTrace {
    pub steps: Vec<DescentStep>,
    /// `floor(d0/s0)` followed by `floor(s_{n-1}/s_n)` for each step.
    pub quotients: Vec<BigUint>,
    /// The side lengths are exactly the remainders of `Anth(sqrt(2), 1)`.
    pub matches_anth: bool,
}

impl DescentTrace {
    pub fn all_hold(&self) -> bool {
        self.matches_anth && self.steps.iter().all(|s| s.relation && s.decreasing)
    }
}

/// Iterates the subtractive step from `(d, s) = (sqrt(2), 1)`.
///
/// A pair with `d^2 = 2s^2` always has `s < d < 2s`, so the step never leaves
/// its range; every new pair satisfies the same relation with a strictly
/// smaller side, and no such sequence can exist among whole numbers.
pub fn surd_descent(max_steps: usize) -> Result<DescentTrace, PellError> {
    let mut d = QuadraticSurd::sqrt_of(2)?;
    let mut s = QuadraticSurd::one();
    let mut steps = Vec::with_capacity(max_steps);
    let mut quotients = vec![to_natural(d.checked_div(&s)?.floor())];
    let mut anth = Steps::new(&d, &s)?;
    let mut matches_anth = true;
    for _ in 0..max_steps {
        let (d2, s2) = subtractive_step(&d, &s)?;
        let relation = defect_of(&d2, &s2)?.is_zero();
        let decreasing = s2.is_positive() && s2.compare(&s)? == Ordering::Less;
        quotients.push(to_natural(s.checked_div(&s2)?.floor()));
        matches_anth &= anth.next().is_some_and(|step| step.remainder == s2);
        steps.push(DescentStep { d: d2.clone(), s: s2.clone(), relation, decreasing });
        d = d2;
        s = s2;
    }
    Ok(DescentTrace { steps, quotients, matches_anth })
}

fn to_natural(k: BigInt) -> BigUint {
    k.to_biguint().expect("ratio of positive magnitudes")
}

/// `(m, n) -> (n - m, 2m - n)` for `0 < m < n < 2m`.
///
/// `n'^2 - 2m'^2 = -(n^2 - 2m^2)`, so an exact solution of `n^2 = 2m^2` would
/// map to a strictly smaller one.
pub fn integer_descent(m: &BigInt, n: &BigInt) -> Result<(BigInt, BigInt), PellError> {
    let two_m = m * 2;
    if !(m.is_positive() && m < n && *n < two_m) {
        return Err(PellError::RangeViolation(format!("need 0 < m < n < 2m, got m = {m}, n = {n}")));
    }
    Ok((n - m, two_m - n))
}

/// Exhaustive search for `n^2 = 2m^2` with `1 <= m, n <= bound`; `true` when
/// there is none.
pub fn no_integer_solution(bound: u64) -> bool {
    let bound = bound as u128;
    let mut n: u128 = 1;
    for m in 1..=bound {
        let target = 2 * m * m;
        while n <= bound && n * n < target {
            n += 1;
        }
        if n > bound {
            break;
        }
        if n * n == target {
            return false;
        }
    }
    true
}

/// `Anth(q_n, p_n) = [1, 2, ..., 2]` with `n - 1` twos, and `gcd(p_n, q_n) = 1`.
pub fn convergent_anth_check(n: u64) -> Result<bool, PellError> {
    let pair = side_diameter(n)?;
    let e = euclid_anth(&Rational::from_integer(pair.q.clone()), &Rational::from_integer(pair.p.clone()))?;
    let expected = std::iter::once(1u32).chain(std::iter::repeat_n(2, (n - 1) as usize)).map(BigUint::from);
    let quotients_ok = e.prefix().iter().cloned().eq(expected) && e.period().is_none();
    Ok(quotients_ok && pair.p.gcd(&pair.q).is_one())
}

/// `c_k = |p_k*sqrt(2) - q_k|` for the remainders `c_k` of `Anth(sqrt(2), 1)`,
/// `k = 1..=k_max`.
pub fn remainder_identity_check(k_max: usize) -> Result<bool, PellError> {
    let root2 = QuadraticSurd::sqrt_of(2)?;
    let steps = Steps::new(&root2, &QuadraticSurd::one())?;
    let mut ok = true;
    for (step, pair) in steps.take(k_max).zip(side_diameters()) {
        let diff = root2.checked_mul(&pair.p.clone().into())?.checked_sub(&pair.q.clone().into())?;
        let abs = if diff.is_positive() { diff } else { -diff };
        ok &= step.remainder == abs;
    }
    Ok(ok)
}
