//! Apex angles of isosceles triangles `(a, a, c)`, classified by comparing
//! `c^2` with `2a^2`.
//!
//! Angles are never measured. The apex angle is ordered through its cosine
//! `(2a^2 - c^2) / (2a^2)`, which is exact for surd sides; a larger angle has
//! a smaller cosine.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};
use thiserror::Error;

use crate::anth::{anth_pair, AnthError};
use crate::exact::{ExactError, QuadraticSurd, Rational};
use crate::pell::{side_diameter, side_diameters, PellError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnglesError {
    #[error("({a}, {a}, {c}) is not a triangle")]
    DegenerateTriangle { a: Box<QuadraticSurd>, c: Box<QuadraticSurd> },
    #[error("the apex angle is right; no witness exists")]
    RightAngle,
    #[error("index must be at least {min}, got {got}")]
    BadIndex { min: u64, got: u64 },
    #[error("pair {index} violates a^2 = 2b^2: {detail}")]
    HypothesisViolated { index: usize, detail: String },
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Anth(#[from] AnthError),
    #[error(transparent)]
    Pell(#[from] PellError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AngleKind {
    Acute,
    Right,
    Obtuse,
}

impl AngleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AngleKind::Acute => "Acute",
            AngleKind::Right => "Right",
            AngleKind::Obtuse => "Obtuse",
        }
    }
}

impl fmt::Display for AngleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn two_squared(a: &QuadraticSurd) -> QuadraticSurd {
    let a2 = a.square();
    &a2 + &a2
}

fn check_triangle(a: &QuadraticSurd, c: &QuadraticSurd) -> Result<(), AnglesError> {
    let degenerate = || AnglesError::DegenerateTriangle { a: Box::new(a.clone()), c: Box::new(c.clone()) };
    if !a.is_positive() || !c.is_positive() || c.compare(&(a + a))? != Ordering::Less {
        return Err(degenerate());
    }
    Ok(())
}

/// Acute, right or obtuse apex angle of `(a, a, c)`.
pub fn classify_isosceles(a: &QuadraticSurd, c: &QuadraticSurd) -> Result<AngleKind, AnglesError> {
    check_triangle(a, c)?;
    Ok(match c.square().compare(&two_squared(a))? {
        Ordering::Less => AngleKind::Acute,
        Ordering::Equal => AngleKind::Right,
        Ordering::Greater => AngleKind::Obtuse,
    })
}

/// `cos` of the apex angle of `(a, a, c)`: `(2a^2 - c^2) / (2a^2)`.
pub fn apex_cosine(a: &QuadraticSurd, c: &QuadraticSurd) -> Result<QuadraticSurd, AnglesError> {
    check_triangle(a, c)?;
    let t = two_squared(a);
    Ok(t.checked_sub(&c.square())?.checked_div(&t)?)
}

/// Kind of the apex angle of `(p_n, p_n, q_n)`.
pub fn omega_kind(n: u64) -> Result<AngleKind, AnglesError> {
    let pair = side_diameter(n)?;
    classify_isosceles(&pair.p.into(), &pair.q.into())
}

/// `cos` of the apex angle of `(p_n, p_n, q_n)`, which is `-defect / (2p_n^2)`.
fn omega_cosine(p: &BigInt, defect: &BigInt) -> Rational {
    Rational::new(-defect, p * p * 2)
}

/// For `n = 1..=N`: `|2p_n^2 - q_n^2| = 1`, `|q_n^2/p_n^2 - 2| = 1/p_n^2`, and
/// `|cos w_n| = 1/(2p_n^2)` strictly decreasing.
pub fn omega_convergence_check(big_n: u64) -> Result<bool, AnglesError> {
    if big_n < 2 {
        return Err(AnglesError::BadIndex { min: 2, got: big_n });
    }
    let mut ok = true;
    let mut last: Option<Rational> = None;
    for pair in side_diameters().take(big_n as usize) {
        let (p2, q2) = (&pair.p * &pair.p, &pair.q * &pair.q);
        let gap = &p2 * 2 - &q2;
        ok &= gap == BigInt::from(1) || gap == BigInt::from(-1);
        let excess = Rational::new(q2, p2.clone()) - Rational::from_integer(2.into());
        ok &= excess.abs() == Rational::new(1.into(), p2.clone());
        let cos = omega_cosine(&pair.p, &pair.defect).abs();
        ok &= cos == Rational::new(1.into(), p2 * 2);
        if let Some(prev) = &last {
            ok &= cos < *prev;
        }
        last = Some(cos);
    }
    Ok(ok)
}

/// Whether an angle equal to a reference angle counts as passing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Boundary {
    /// `w < w_k` (acute) or `w > w_k` (obtuse)
    #[default]
    Strict,
    /// `w <= w_k` or `w >= w_k`
    Inclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AngleDefinition {
    pub kind: AngleKind,
    pub witness_index: u64,
}

impl AngleDefinition {
    pub fn to_json(&self) -> Value {
        json!({ "kind": self.kind.as_str(), "witness_index": self.witness_index })
    }
}

/// An acute apex angle is one below some `w_k` with `k` odd, an obtuse one
/// above some `w_k` with `k` even; returns the least such `k`.
pub fn pythagorean_angle_definition(
    a: &QuadraticSurd,
    c: &QuadraticSurd,
    boundary: Boundary,
) -> Result<AngleDefinition, AnglesError> {
    let kind = classify_isosceles(a, c)?;
    if kind == AngleKind::Right {
        return Err(AnglesError::RightAngle);
    }
    let cos = apex_cosine(a, c)?;
    // w < w_k  <=>  cos w > cos w_k, and w > w_k  <=>  cos w < cos w_k
    let wanted = match (kind, boundary) {
        (AngleKind::Acute, Boundary::Strict) => &[Ordering::Greater][..],
        (AngleKind::Acute, Boundary::Inclusive) => &[Ordering::Greater, Ordering::Equal][..],
        (_, Boundary::Strict) => &[Ordering::Less][..],
        (_, Boundary::Inclusive) => &[Ordering::Less, Ordering::Equal][..],
    };
    let parity = if kind == AngleKind::Acute { 1 } else { 0 };
    for pair in side_diameters().filter(|p| p.n % 2 == parity) {
        let reference = QuadraticSurd::from_rational(&omega_cosine(&pair.p, &pair.defect));
        if wanted.contains(&cos.compare(&reference)?) {
            return Ok(AngleDefinition { kind, witness_index: pair.n });
        }
    }
    unreachable!("side/diameter stream is endless and |cos w_k| tends to 0")
}

/// Every pair must satisfy `a^2 = 2b^2` and have the expansion `[1, period(2)]`.
pub fn postulate4_check(pairs: &[(QuadraticSurd, QuadraticSurd)], max_steps: usize) -> Result<bool, AnglesError> {
    let one = [1u64];
    let two = [2u64];
    let mut ok = true;
    for (index, (a, b)) in pairs.iter().enumerate() {
        if a.square() != two_squared(b) {
            return Err(AnglesError::HypothesisViolated {
                index,
                detail: format!("a^2 = {} but 2b^2 = {}", a.square(), two_squared(b)),
            });
        }
        let e = anth_pair(a, b, max_steps)?;
        ok &= e.prefix_u64().as_deref() == Some(&one[..]) && e.period_u64().as_deref() == Some(&two[..]);
    }
    Ok(ok)
}
