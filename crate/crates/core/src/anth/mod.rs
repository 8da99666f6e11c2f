//! Reciprocal subtraction of two magnitudes.
//!
//! For a pair `(a, b)` the engine produces quotients `k0, k1, ...` and
//! remainders `c1, c2, ...` with
//!
//! ```text
//! a = k0*b + c1,   b = k1*c1 + c2,   c1 = k2*c2 + c3, ...   (each remainder smaller than the last)
//! ```
//!
//! Rational pairs always terminate. Irrational quadratic ratios never do, but
//! their complete quotients repeat; the first exact repetition closes the
//! period and proves the expansion infinite.

mod certificate;
mod theaetetus;

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::exact::{ExactError, QuadraticSurd, Rational};

pub use certificate::{incomm_certificate, Certificate, Reason, Verdict, Witness};
pub use theaetetus::{theaetetus_trace, TheaetetusTrace};

/// Default cap on the number of quotients produced for an irrational ratio.
pub const DEFAULT_MAX_STEPS: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnthError {
    #[error("magnitudes must be positive")]
    NonPositiveInput,
    #[error("input is rational; use the finite (Euclidean) expansion")]
    RationalInput,
    #[error("no repetition within {} steps", .0.prefix().len())]
    StepCapExceeded(Box<AnthExpansion>),
    #[error("truncated expansion proves nothing")]
    Inconclusive,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Terminated,
    Periodic,
    Truncated,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Terminated => "Terminated",
            Status::Periodic => "Periodic",
            Status::Truncated => "Truncated",
        }
    }
}

/// Result of running reciprocal subtraction on a pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnthExpansion {
    prefix: Vec<BigUint>,
    period: Option<Vec<BigUint>>,
    status: Status,
    remainders: Vec<QuadraticSurd>,
    common_measure: Option<QuadraticSurd>,
    iterations: usize,
}

impl AnthExpansion {
    /// Quotients before the period (all of them for a finite expansion).
    pub fn prefix(&self) -> &[BigUint] {
        &self.prefix
    }

    pub fn period(&self) -> Option<&[BigUint]> {
        self.period.as_deref()
    }

    pub fn status(&self) -> Status {
        self.status
    }

    /// Nonzero remainders `c1, c2, ...` in the units of the second magnitude.
    pub fn remainders(&self) -> &[QuadraticSurd] {
        &self.remainders
    }

    pub fn common_measure(&self) -> Option<&QuadraticSurd> {
        self.common_measure.as_ref()
    }

    /// Number of complete quotients examined, including the one that closed the period.
    pub fn iterations(&self) -> usize {
        self.iterations
    }

    /// Quotients actually produced: the prefix followed by one copy of the period.
    pub fn quotients(&self) -> impl Iterator<Item = &BigUint> {
        self.prefix.iter().chain(self.period.iter().flatten())
    }

    /// The `i`-th quotient of the (possibly infinite) expansion.
    pub fn quotient_at(&self, i: usize) -> Option<&BigUint> {
        if i < self.prefix.len() {
            return self.prefix.get(i);
        }
        let period = self.period.as_ref()?;
        period.get((i - self.prefix.len()) % period.len())
    }

    /// Equality as `(prefix, period)` data; remainders and measures are ignored.
    pub fn same_quotients(&self, other: &Self) -> bool {
        self.prefix == other.prefix && self.period == other.period && self.status == other.status
    }

    /// Small quotients as `u64`, for display and tests.
    pub fn prefix_u64(&self) -> Option<Vec<u64>> {
        self.prefix.iter().map(ToPrimitive::to_u64).collect()
    }

    pub fn period_u64(&self) -> Option<Vec<u64>> {
        self.period.as_ref()?.iter().map(ToPrimitive::to_u64).collect()
    }

    /// Rescales remainders and common measure by a positive unit.
    fn in_units_of(mut self, unit: &QuadraticSurd) -> Result<Self, ExactError> {
        for c in &mut self.remainders {
            *c = c.checked_mul(unit)?;
        }
        if let Some(m) = &mut self.common_measure {
            *m = m.checked_mul(unit)?;
        }
        Ok(self)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "prefix": self.prefix.iter().map(biguint_json).collect::<Vec<_>>(),
            "period": self.period.as_ref().map(|p| p.iter().map(biguint_json).collect::<Vec<_>>()),
            "status": self.status.as_str(),
            "remainders": self.remainders.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "common_measure": self.common_measure.as_ref().map(ToString::to_string),
        })
    }
}

/// JSON number when the value fits in `u64`, decimal string otherwise.
pub(crate) fn biguint_json(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn to_quotient(k: BigInt) -> BigUint {
    k.to_biguint().expect("quotients of positive magnitudes are positive")
}

/// Finite reciprocal subtraction of two positive rationals.
pub fn euclid_anth(a: &Rational, b: &Rational) -> Result<AnthExpansion, AnthError> {
    if !a.is_positive() || !b.is_positive() {
        return Err(AnthError::NonPositiveInput);
    }
    let mut prefix = Vec::new();
    let mut remainders = Vec::new();
    let (mut prev, mut cur) = (a.clone(), b.clone());
    loop {
        let k = (&prev / &cur).floor();
        let next = &prev - &cur * &k;
        prefix.push(to_quotient(k.to_integer()));
        if next.is_zero() {
            let iterations = prefix.len();
            return Ok(AnthExpansion {
                prefix,
                period: None,
                status: Status::Terminated,
                remainders,
                common_measure: Some(QuadraticSurd::from_rational(&cur)),
                iterations,
            });
        }
        remainders.push(QuadraticSurd::from_rational(&next));
        prev = cur;
        cur = next;
    }
}

/// Expansion of the pair `(x, 1)` for a positive quadratic irrational `x`.
///
/// Iterates complete quotients `x_{k+1} = 1/(x_k - floor(x_k))` and stops at
/// the first one equal to an earlier one, which yields the minimal preperiod
/// and period. Hitting `max_steps` quotients first returns
/// [`AnthError::StepCapExceeded`] carrying the truncated data.
pub fn surd_anth(x: &QuadraticSurd, max_steps: usize) -> Result<AnthExpansion, AnthError> {
    if x.is_rational() {
        return Err(AnthError::RationalInput);
    }
    if !x.is_positive() {
        return Err(AnthError::NonPositiveInput);
    }
    let mut seen: HashMap<QuadraticSurd, usize> = HashMap::new();
    let mut quotients = Vec::new();
    let mut remainders = Vec::new();
    // c_{-1} = x and c_0 = 1; c_{k+1} = c_{k-1} - k_k c_k
    let (mut prev, mut cur) = (x.clone(), QuadraticSurd::one());
    let mut complete = x.clone();
    let mut iterations = 0;
    loop {
        iterations += 1;
        if let Some(&start) = seen.get(&complete) {
            let period = quotients.split_off(start);
            return Ok(AnthExpansion {
                prefix: quotients,
                period: Some(period),
                status: Status::Periodic,
                remainders,
                common_measure: None,
                iterations,
            });
        }
        if quotients.len() >= max_steps {
            let partial = AnthExpansion {
                prefix: quotients,
                period: None,
                status: Status::Truncated,
                remainders,
                common_measure: None,
                iterations,
            };
            return Err(AnthError::StepCapExceeded(Box::new(partial)));
        }
        seen.insert(complete.clone(), quotients.len());
        let k = complete.floor();
        let k_surd = QuadraticSurd::from_int(k.clone());
        let next = prev.checked_sub(&cur.checked_mul(&k_surd)?)?;
        complete = complete.checked_sub(&k_surd)?.recip()?;
        quotients.push(to_quotient(k));
        remainders.push(next.clone());
        prev = cur;
        cur = next;
    }
}

/// Expansion of an arbitrary positive pair in one quadratic field.
///
/// The ratio `a/b` is formed exactly; a rational ratio gives a finite
/// expansion, an irrational one a periodic expansion. Remainders come back in
/// the units of `b`.
pub fn anth_pair(a: &QuadraticSurd, b: &QuadraticSurd, max_steps: usize) -> Result<AnthExpansion, AnthError> {
    if !a.is_positive() || !b.is_positive() {
        return Err(AnthError::NonPositiveInput);
    }
    let ratio = a.checked_div(b)?;
    match (a.to_rational(), b.to_rational(), ratio.to_rational()) {
        (Some(a), Some(b), _) => euclid_anth(&a, &b),
        (_, _, Some(t)) => Ok(euclid_anth(&t, &Rational::from_integer(1.into()))?.in_units_of(b)?),
        (_, _, None) => match surd_anth(&ratio, max_steps) {
            Ok(e) => Ok(e.in_units_of(b)?),
            Err(AnthError::StepCapExceeded(e)) => Err(AnthError::StepCapExceeded(Box::new(e.in_units_of(b)?))),
            Err(e) => Err(e),
        },
    }
}

/// Checks `a*d = b*c`, then compares the independently computed expansions
/// of `(a, b)` and `(c, d)`.
pub fn cross_product_equal_anth(
    a: &QuadraticSurd,
    b: &QuadraticSurd,
    c: &QuadraticSurd,
    d: &QuadraticSurd,
    max_steps: usize,
) -> Result<bool, AnthError> {
    let ad = a.checked_mul(d)?;
    let bc = b.checked_mul(c)?;
    if ad != bc {
        return Err(AnthError::HypothesisViolated(format!("a*d = {ad} but b*c = {bc}")));
    }
    let left = anth_pair(a, b, max_steps)?;
    let right = anth_pair(c, d, max_steps)?;
    Ok(left.same_quotients(&right))
}

/// One step of reciprocal subtraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub quotient: BigUint,
    /// `prev - quotient * cur`; zero on the final step of a finite expansion.
    pub remainder: QuadraticSurd,
}

/// Unbounded stream of steps for a positive pair; ends only when a remainder
/// vanishes.
#[derive(Debug, Clone)]
pub struct Steps {
    prev: QuadraticSurd,
    cur: QuadraticSurd,
}

impl Steps {
    pub fn new(a: &QuadraticSurd, b: &QuadraticSurd) -> Result<Self, AnthError> {
        if !a.is_positive() || !b.is_positive() {
            return Err(AnthError::NonPositiveInput);
        }
        a.checked_sub(b)?;
        Ok(Self { prev: a.clone(), cur: b.clone() })
    }
}

impl Iterator for Steps {
    type Item = Step;

    fn next(&mut self) -> Option<Step> {
        if self.cur.is_zero() {
            return None;
        }
        let k = (&self.prev / &self.cur).floor();
        let rem = &self.prev - &self.cur * QuadraticSurd::from_int(k.clone());
        debug_assert!(rem.signum() != Ordering::Less && rem < self.cur);
        self.prev = std::mem::replace(&mut self.cur, rem.clone());
        Some(Step { quotient: to_quotient(k), remainder: rem })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_number, rational_make};
    use num_integer::Integer;
    use proptest::prelude::*;

    fn s(p: i64, q: i64, d: i64, r: i64) -> QuadraticSurd {
        QuadraticSurd::new(p, q, d, r).unwrap()
    }

    fn int(n: i64) -> QuadraticSurd {
        QuadraticSurd::from_int(n)
    }

    fn rat(n: i64, d: i64) -> Rational {
        rational_make(n, d).unwrap()
    }

    #[test]
    fn euclid_seven_five() {
        let e = euclid_anth(&rat(7, 1), &rat(5, 1)).unwrap();
        assert_eq!(e.prefix_u64().unwrap(), [1, 2, 2]);
        assert_eq!(e.period(), None);
        assert_eq!(e.status(), Status::Terminated);
        assert_eq!(e.common_measure(), Some(&int(1)));
        assert_eq!(e.remainders(), [int(2), int(1)]);
    }

    #[test]
    fn euclid_equal_magnitudes() {
        let a = rat(7, 3);
        let e = euclid_anth(&a, &a).unwrap();
        assert_eq!(e.prefix_u64().unwrap(), [1]);
        assert_eq!(e.common_measure(), Some(&QuadraticSurd::from_rational(&a)));
        assert!(e.remainders().is_empty());
    }

    #[test]
    fn euclid_fibonacci() {
        let e = euclid_anth(&rat(21, 1), &rat(13, 1)).unwrap();
        assert_eq!(e.prefix_u64().unwrap(), [1, 1, 1, 1, 1, 2]);
        assert_eq!(e.common_measure(), Some(&int(1)));
    }

    #[test]
    fn euclid_rejects_non_positive() {
        assert_eq!(euclid_anth(&rat(0, 1), &rat(1, 1)), Err(AnthError::NonPositiveInput));
        assert_eq!(euclid_anth(&rat(1, 1), &rat(-1, 2)), Err(AnthError::NonPositiveInput));
    }

    #[test]
    fn surd_root_two() {
        let e = surd_anth(&s(0, 1, 2, 1), DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(e.prefix_u64().unwrap(), [1]);
        assert_eq!(e.period_u64().unwrap(), [2]);
        assert_eq!(e.status(), Status::Periodic);
        assert_eq!(e.iterations(), 3);
        assert_eq!(e.remainders(), [s(-1, 1, 2, 1), s(3, -2, 2, 1)]);
    }

    #[test]
    fn surd_golden_section_purely_periodic() {
        let e = surd_anth(&s(1, 1, 5, 2), DEFAULT_MAX_STEPS).unwrap();
        assert!(e.prefix().is_empty());
        assert_eq!(e.period_u64().unwrap(), [1]);
    }

    #[test]
    fn surd_root_three() {
        let e = surd_anth(&s(0, 1, 3, 1), DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(e.prefix_u64().unwrap(), [1]);
        assert_eq!(e.period_u64().unwrap(), [1, 2]);
    }

    #[test]
    fn surd_longer_periods() {
        // classical expansions: √7 = [2; 1,1,1,4], √13 = [3; 1,1,1,1,6], √19 = [4; 2,1,3,1,2,8]
        let cases: [(i64, &[u64], &[u64]); 3] =
            [(7, &[2], &[1, 1, 1, 4]), (13, &[3], &[1, 1, 1, 1, 6]), (19, &[4], &[2, 1, 3, 1, 2, 8])];
        for (d, pre, per) in cases {
            let e = surd_anth(&s(0, 1, d, 1), DEFAULT_MAX_STEPS).unwrap();
            assert_eq!(e.prefix_u64().unwrap(), pre, "sqrt({d})");
            assert_eq!(e.period_u64().unwrap(), per, "sqrt({d})");
        }
    }

    #[test]
    fn surd_rejects_rational_and_negative() {
        assert_eq!(surd_anth(&int(3), 10), Err(AnthError::RationalInput));
        assert_eq!(surd_anth(&s(0, -1, 2, 1), 10), Err(AnthError::NonPositiveInput));
    }

    #[test]
    fn surd_step_cap() {
        // √19 needs 7 quotients before repeating
        match surd_anth(&s(0, 1, 19, 1), 3) {
            Err(AnthError::StepCapExceeded(partial)) => {
                assert_eq!(partial.status(), Status::Truncated);
                assert_eq!(partial.prefix_u64().unwrap(), [4, 2, 1]);
                assert_eq!(partial.remainders().len(), 3);
            }
            other => panic!("expected cap, got {other:?}"),
        }
        assert!(surd_anth(&s(0, 1, 2, 1), 2).is_ok());
        assert!(matches!(surd_anth(&s(0, 1, 2, 1), 1), Err(AnthError::StepCapExceeded(_))));
    }

    #[test]
    fn pair_examples() {
        let e = anth_pair(&s(0, 1, 2, 1), &int(1), DEFAULT_MAX_STEPS).unwrap();
        assert_eq!((e.prefix_u64().unwrap(), e.period_u64().unwrap()), (vec![1], vec![2]));

        let e = anth_pair(&int(4), &int(2), DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(e.prefix_u64().unwrap(), [2]);
        assert_eq!(e.common_measure(), Some(&int(2)));

        let e = anth_pair(&s(0, 3, 2, 1), &int(3), DEFAULT_MAX_STEPS).unwrap();
        assert_eq!((e.prefix_u64().unwrap(), e.period_u64().unwrap()), (vec![1], vec![2]));
        assert_eq!(e.remainders()[0], s(-3, 3, 2, 1));
    }

    #[test]
    fn pair_rational_ratio_of_irrationals() {
        // (3√2, √2): ratio 3, common measure √2
        let e = anth_pair(&s(0, 3, 2, 1), &s(0, 1, 2, 1), DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(e.prefix_u64().unwrap(), [3]);
        assert_eq!(e.common_measure(), Some(&s(0, 1, 2, 1)));
    }

    #[test]
    fn pair_errors() {
        assert_eq!(anth_pair(&int(0), &int(1), 10), Err(AnthError::NonPositiveInput));
        assert!(matches!(
            anth_pair(&s(0, 1, 2, 1), &s(0, 1, 3, 1), 10),
            Err(AnthError::Exact(ExactError::FieldMismatch(..)))
        ));
    }

    #[test]
    fn cross_product_examples() {
        assert!(cross_product_equal_anth(&int(3), &int(2), &int(9), &int(6), 256).unwrap());
        let r2 = s(0, 1, 2, 1);
        assert!(cross_product_equal_anth(&r2, &int(1), &int(2), &r2, 256).unwrap());
        assert!(cross_product_equal_anth(&s(1, 1, 2, 1), &int(1), &s(3, 2, 2, 1), &s(1, 1, 2, 1), 256).unwrap());
    }

    #[test]
    fn cross_product_requires_hypothesis() {
        assert!(matches!(
            cross_product_equal_anth(&int(3), &int(2), &int(9), &int(5), 256),
            Err(AnthError::HypothesisViolated(_))
        ));
    }

    #[test]
    fn steps_stream_matches_expansion() {
        let r2 = s(0, 1, 2, 1);
        let steps: Vec<_> = Steps::new(&r2, &int(1)).unwrap().take(6).collect();
        let qs: Vec<u64> = steps.iter().map(|s| s.quotient.to_u64().unwrap()).collect();
        assert_eq!(qs, [1, 2, 2, 2, 2, 2]);
        assert_eq!(steps[2].remainder, s(-7, 5, 2, 1));
        let finite: Vec<_> = Steps::new(&int(7), &int(5)).unwrap().collect();
        assert_eq!(finite.len(), 3);
        assert!(finite[2].remainder.is_zero());
    }

    #[test]
    fn json_shape() {
        let e = anth_pair(&int(7), &int(5), 256).unwrap();
        assert_eq!(
            e.to_json().to_string(),
            r#"{"prefix":[1,2,2],"period":null,"status":"Terminated","remainders":["2","1"],"common_measure":"1"}"#
        );
        let e = anth_pair(&parse_number("sqrt(2)").unwrap(), &int(1), 256).unwrap();
        assert_eq!(
            e.to_json().to_string(),
            r#"{"prefix":[1],"period":[2],"status":"Periodic","remainders":["(-1+1*sqrt(2))/1","(3-2*sqrt(2))/1"],"common_measure":null}"#
        );
    }

    #[test]
    fn huge_quotient_serializes_as_string() {
        let big = Rational::from_integer(BigInt::from(10u32).pow(30));
        let e = euclid_anth(&big, &rat(1, 1)).unwrap();
        assert_eq!(e.to_json()["prefix"][0], json!("1000000000000000000000000000000"));
    }

    fn replay_recurrence(a: &QuadraticSurd, b: &QuadraticSurd, e: &AnthExpansion) -> bool {
        // c_{n-1} = k_n c_n + c_{n+1}, c_{n+1} < c_n, ending in 0 for finite expansions
        let mut chain = vec![a.clone(), b.clone()];
        chain.extend(e.remainders().iter().cloned());
        if e.status() == Status::Terminated {
            chain.push(QuadraticSurd::zero());
        }
        e.quotients().enumerate().all(|(i, k)| {
            let k = QuadraticSurd::from_int(BigInt::from(k.clone()));
            chain[i] == &k * &chain[i + 1] + &chain[i + 2] && chain[i + 2] < chain[i + 1]
        })
    }

    const BIG_CAP: usize = 100_000;

    proptest! {
        #[test]
        fn euclid_satisfies_recurrence(an in 1i64..10_000, ad in 1i64..500, bn in 1i64..10_000, bd in 1i64..500) {
            let (a, b) = (rat(an, ad), rat(bn, bd));
            let e = euclid_anth(&a, &b).unwrap();
            // only the leading quotient may vanish, and only when a < b
            prop_assert_eq!(e.prefix()[0].is_zero(), a < b);
            prop_assert!(e.quotients().skip(1).all(|k| !k.is_zero()));
            prop_assert!(replay_recurrence(&QuadraticSurd::from_rational(&a), &QuadraticSurd::from_rational(&b), &e));
        }

        #[test]
        fn euclid_measure_is_gcd(an in 1i64..10_000, ad in 1i64..500, bn in 1i64..10_000, bd in 1i64..500) {
            let (a, b) = (rat(an, ad), rat(bn, bd));
            let e = euclid_anth(&a, &b).unwrap();
            let g = (a.numer() * b.denom()).gcd(&(b.numer() * a.denom()));
            let expected = Rational::new(g, a.denom() * b.denom());
            prop_assert_eq!(e.common_measure().unwrap(), &QuadraticSurd::from_rational(&expected));
        }

        #[test]
        fn scale_invariance(p in -12i64..12, q in 1i64..6, d in 2i64..30, r in 1i64..6, tn in 1i64..50, td in 1i64..50) {
            let x = QuadraticSurd::new(p, q, d, r).unwrap();
            prop_assume!(x.is_positive());
            let b = QuadraticSurd::new(3, 0, 0, 7).unwrap();
            let a = &x * &b;
            let t = rat(tn, td);
            let base = anth_pair(&a, &b, BIG_CAP).unwrap();
            let scaled = anth_pair(&a.scale(&t), &b.scale(&t), BIG_CAP).unwrap();
            prop_assert!(base.same_quotients(&scaled));
        }

        #[test]
        fn surd_expansion_satisfies_recurrence(p in -12i64..12, q in 1i64..6, d in 2i64..30, r in 1i64..6) {
            let x = QuadraticSurd::new(p, q, d, r).unwrap();
            prop_assume!(x.is_positive() && !x.is_rational());
            let e = surd_anth(&x, BIG_CAP).unwrap();
            prop_assert_eq!(e.status(), Status::Periodic);
            prop_assert!(replay_recurrence(&x, &QuadraticSurd::one(), &e));
        }

        #[test]
        fn period_is_minimal_and_cyclic(p in -12i64..12, q in 1i64..6, d in 2i64..30, r in 1i64..6) {
            let x = QuadraticSurd::new(p, q, d, r).unwrap();
            prop_assume!(x.is_positive() && !x.is_rational());
            let e = surd_anth(&x, BIG_CAP).unwrap();
            let period = e.period().unwrap().to_vec();
            // restart from every complete quotient inside the period
            let mut complete = x.clone();
            for k in e.prefix() {
                complete = (complete - QuadraticSurd::from_int(BigInt::from(k.clone()))).recip().unwrap();
            }
            for shift in 0..period.len() {
                let inner = surd_anth(&complete, BIG_CAP).unwrap();
                prop_assert!(inner.prefix().is_empty());
                let mut rotated = period.clone();
                rotated.rotate_left(shift);
                prop_assert_eq!(inner.period().unwrap(), &rotated[..]);
                let k = QuadraticSurd::from_int(BigInt::from(period[shift].clone()));
                complete = (complete - k).recip().unwrap();
            }
            // no proper divisor of the period length is itself a period
            let n = period.len();
            for m in (1..n).filter(|m| n.is_multiple_of(*m)) {
                prop_assert!((0..n).any(|i| period[i] != period[i % m]));
            }
        }
    }
}
