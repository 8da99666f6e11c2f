//! Musical intervals `2^e2 * 3^e3` and their reciprocal subtraction.
//!
//! Intervals compose by multiplying ratios, i.e. adding exponent pairs, so
//! "subtracting" the fifth from the octave means dividing 2/1 by 3/2.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

/// Largest exponent for which a ratio string is printed.
pub const RATIO_DISPLAY_LIMIT: u64 = 10_000;

/// Largest exponent for which comparison expands the powers outright.
const EXACT_POWER_LIMIT: u64 = 4096;

/// Safety bound on a single quotient found by repeated subtraction.
pub const QUOTIENT_BOUND: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarmonicsError {
    #[error("interval {0} is not ascending")]
    NotAscending(Box<Interval>),
    #[error("need a > b, got a = {0}, b = {1}")]
    NotOrdered(Box<Interval>, Box<Interval>),
    #[error("quotient exceeded {QUOTIENT_BOUND} at step {0}")]
    QuotientBound(usize),
}

/// The interval `2^e2 * 3^e3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Interval {
    pub e2: BigInt,
    pub e3: BigInt,
}

impl Interval {
    pub fn new(e2: impl Into<BigInt>, e3: impl Into<BigInt>) -> Self {
        Self { e2: e2.into(), e3: e3.into() }
    }

    pub fn unison() -> Self {
        Self::new(0, 0)
    }

    pub fn octave() -> Self {
        Self::new(1, 0)
    }

    pub fn fifth() -> Self {
        Self::new(-1, 1)
    }

    pub fn fourth() -> Self {
        Self::new(2, -1)
    }

    pub fn tone() -> Self {
        Self::new(-3, 2)
    }

    pub fn diesis() -> Self {
        Self::new(8, -5)
    }

    pub fn comma() -> Self {
        Self::new(-19, 12)
    }

    pub fn is_unison(&self) -> bool {
        self.e2.is_zero() && self.e3.is_zero()
    }

    /// Nonzero exponents of opposite signs.
    pub fn opposite_signs(&self) -> bool {
        (self.e2.is_positive() && self.e3.is_negative()) || (self.e2.is_negative() && self.e3.is_positive())
    }

    /// Exact ordering of the two ratios.
    pub fn compare(&self, other: &Self) -> Ordering {
        sign_of(&(&self.e2 - &other.e2), &(&self.e3 - &other.e3))
    }

    /// `num/den` in lowest terms, when both exponents are within
    /// [`RATIO_DISPLAY_LIMIT`].
    pub fn ratio_string(&self) -> Option<String> {
        let limit = BigInt::from(RATIO_DISPLAY_LIMIT);
        if self.e2.abs() > limit || self.e3.abs() > limit {
            return None;
        }
        let (mut num, mut den) = (BigUint::one(), BigUint::one());
        for (base, e) in [(2u32, &self.e2), (3, &self.e3)] {
            let p = BigUint::from(base).pow(e.magnitude().to_u32().expect("bounded above"));
            if e.is_negative() {
                den *= p;
            } else {
                num *= p;
            }
        }
        Some(format!("{num}/{den}"))
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "e2": int_json(&self.e2), "e3": int_json(&self.e3) });
        if let Some(r) = self.ratio_string() {
            v["ratio"] = Value::String(r);
        }
        v
    }
}

fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(k) => json!(k),
        None => json!(n.to_string()),
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.e2, self.e3)
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval { e2: &self.e2 + &rhs.e2, e3: &self.e3 + &rhs.e3 }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval { e2: &self.e2 - &rhs.e2, e3: &self.e3 - &rhs.e3 }
    }
}

impl Mul<&Interval> for u64 {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        Interval { e2: &rhs.e2 * self, e3: &rhs.e3 * self }
    }
}

/// Sign of `u*ln 2 + v*ln 3`, i.e. of `2^u * 3^v` against 1.
fn sign_of(u: &BigInt, v: &BigInt) -> Ordering {
    let (su, sv) = (u.sign_cmp(), v.sign_cmp());
    if su != Ordering::Less && sv != Ordering::Less {
        return su.max(sv);
    }
    if su != Ordering::Greater && sv != Ordering::Greater {
        return su.min(sv);
    }
    // opposite signs: compare 2^|u| with 3^|v|
    let (mu, mv) = (u.magnitude(), v.magnitude());
    let two_side = match (mu.to_u64(), mv.to_u64()) {
        (Some(a), Some(b)) if a.max(b) <= EXACT_POWER_LIMIT => {
            BigUint::from(2u32).pow(a as u32).cmp(&BigUint::from(3u32).pow(b as u32))
        }
        _ => compare_logs(mu, mv),
    };
    // two_side orders 2^|u| against 3^|v|; the positive exponent sits on top
    if su == Ordering::Greater {
        two_side
    } else {
        two_side.reverse()
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// Orders `a*ln 2` against `b*ln 3` for positive `a`, `b` with certified
/// fixed-point enclosures of the logarithms, doubling the precision until the
/// enclosures separate. They always do: `2^a = 3^b` has no positive solution.
fn compare_logs(a: &BigUint, b: &BigUint) -> Ordering {
    let mut bits = 64 + 2 * a.bits().max(b.bits());
    loop {
        let (ln2, ln3) = (ln2_enclosure(bits), ln3_enclosure(bits));
        let (lo_a, hi_a) = (&ln2.0 * a, &ln2.1 * a);
        let (lo_b, hi_b) = (&ln3.0 * b, &ln3.1 * b);
        if hi_a < lo_b {
            return Ordering::Less;
        }
        if hi_b < lo_a {
            return Ordering::Greater;
        }
        bits *= 2;
    }
}

/// `[lo, hi]` with `lo <= 2^bits * atanh(1/k) <= hi`, for `k >= 3`.
///
/// Each series term is floored (error below 1 per term) and the series is cut
/// at the first term that floors to zero; the remaining tail is below
/// `1/(1 - 1/k^2) < 2`.
fn atanh_inv(k: u32, bits: u64) -> (BigUint, BigUint) {
    let scale = BigUint::one() << bits;
    let k2 = BigUint::from(k * k);
    let mut power = BigUint::from(k);
    let mut sum = BigUint::zero();
    let mut terms = 0u64;
    for j in 0u64.. {
        let t = scale.div_floor(&(&power * (2 * j + 1)));
        if t.is_zero() {
            break;
        }
        sum += t;
        terms += 1;
        power *= &k2;
    }
    let hi = &sum + terms + 2u32;
    (sum, hi)
}

fn ln2_enclosure(bits: u64) -> (BigUint, BigUint) {
    let (lo, hi) = atanh_inv(3, bits);
    (lo * 2u32, hi * 2u32)
}

fn ln3_enclosure(bits: u64) -> (BigUint, BigUint) {
    // ln 3 = ln 2 + 2 atanh(1/5)
    let (l2lo, l2hi) = ln2_enclosure(bits);
    let (lo, hi) = atanh_inv(5, bits);
    (l2lo + lo * 2u32, l2hi + hi * 2u32)
}

/// Quotients and remainders of the reciprocal subtraction of two intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MusicalTrace {
    pub quotients: Vec<u64>,
    pub remainders: Vec<Interval>,
    /// A remainder reached the unison.
    pub terminated: bool,
}

impl MusicalTrace {
    pub fn to_json(&self) -> Value {
        json!({
            "quotients": self.quotients,
            "remainders": self.remainders.iter().map(Interval::to_json).collect::<Vec<_>>(),
            "terminated": self.terminated,
        })
    }
}

/// Repeatedly removes `b` from `a` while what is left still contains `b`,
/// then continues with `(b, remainder)`; at most `max_steps` quotients.
pub fn musical_anth(a: &Interval, b: &Interval, max_steps: usize) -> Result<MusicalTrace, HarmonicsError> {
    let unison = Interval::unison();
    for x in [a, b] {
        if x.compare(&unison) != Ordering::Greater {
            return Err(HarmonicsError::NotAscending(Box::new(x.clone())));
        }
    }
    if a.compare(b) != Ordering::Greater {
        return Err(HarmonicsError::NotOrdered(Box::new(a.clone()), Box::new(b.clone())));
    }
    let mut trace = MusicalTrace { quotients: Vec::new(), remainders: Vec::new(), terminated: false };
    let (mut prev, mut cur) = (a.clone(), b.clone());
    while trace.quotients.len() < max_steps {
        let mut k = 0u64;
        let mut rem = prev.clone();
        while rem.compare(&cur) != Ordering::Less {
            rem = &rem - &cur;
            k += 1;
            if k > QUOTIENT_BOUND {
                return Err(HarmonicsError::QuotientBound(trace.quotients.len() + 1));
            }
        }
        debug_assert_eq!(rem, &prev - &(k * &cur));
        trace.quotients.push(k);
        trace.remainders.push(rem.clone());
        if rem.is_unison() {
            trace.terminated = true;
            break;
        }
        prev = std::mem::replace(&mut cur, rem);
    }
    Ok(trace)
}

/// `whole = parts[0] + parts[1] + ...` as a composition of intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub whole: &'static str,
    pub parts: Vec<&'static str>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhilolausTable {
    pub intervals: Vec<(&'static str, Interval)>,
    pub relations: Vec<Relation>,
}

impl PhilolausTable {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "intervals": self.intervals.iter().map(|(name, i)| {
                let mut v = i.to_json();
                v.as_object_mut().expect("object").insert("name".into(), json!(name));
                v
            }).collect::<Vec<_>>(),
            "relations": self.relations.iter().map(|r| json!({
                "whole": r.whole, "parts": r.parts, "holds": r.holds,
            })).collect::<Vec<_>>(),
        })
    }
}

/// The named four-step division of the octave, each step recomputed.
pub fn philolaus_table() -> PhilolausTable {
    let intervals = vec![
        ("octave", Interval::octave()),
        ("fifth", Interval::fifth()),
        ("fourth", Interval::fourth()),
        ("tone", Interval::tone()),
        ("diesis", Interval::diesis()),
        ("comma", Interval::comma()),
    ];
    let get = |name: &str| intervals.iter().find(|(n, _)| *n == name).map(|(_, i)| i.clone()).expect("named above");
    let steps: [(&str, &[&str]); 4] = [
        ("octave", &["fifth", "fourth"]),
        ("fifth", &["fourth", "tone"]),
        ("fourth", &["tone", "tone", "diesis"]),
        ("tone", &["diesis", "diesis", "comma"]),
    ];
    let relations = steps
        .into_iter()
        .map(|(whole, parts)| {
            let sum = parts.iter().fold(Interval::unison(), |acc, p| &acc + &get(p));
            // the last part is the remainder and must be smaller than the one repeated before it
            let smaller = get(parts[parts.len() - 1]).compare(&get(parts[0])) == Ordering::Less;
            Relation { whole, parts: parts.to_vec(), holds: sum == get(whole) && smaller }
        })
        .collect();
    PhilolausTable { intervals, relations }
}

/// Runs the octave against the fifth for `steps` quotients and checks that
/// every remainder is below its divisor, is not the unison, and has exponents
/// of opposite signs.
pub fn never_unison_check(steps: usize) -> Result<bool, HarmonicsError> {
    let trace = musical_anth(&Interval::octave(), &Interval::fifth(), steps)?;
    let mut divisors = vec![Interval::fifth()];
    divisors.extend(trace.remainders.iter().cloned());
    let shrinking = trace.remainders.iter().zip(&divisors).all(|(r, d)| r.compare(d) == Ordering::Less);
    let structural = trace.remainders.iter().all(|r| !r.is_unison() && r.opposite_signs());
    Ok(trace.quotients.len() == steps && !trace.terminated && shrinking && structural)
}
