//! Constructive propositions: applications of areas, the mean and extreme
//! ratio, the mean proportional, and the preserved excess form.

use num_bigint::BigInt;
use num_traits::Signed;

use super::Book2Error;
use crate::anth::Steps;
use crate::exact::{QuadraticSurd, Rational};

fn half(a: &Rational) -> Rational {
    a / Rational::from_integer(2.into())
}

fn surd(x: &Rational) -> QuadraticSurd {
    QuadraticSurd::from_rational(x)
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), Book2Error> {
    if ok {
        Ok(())
    } else {
        Err(Book2Error::VerificationFailed(what()))
    }
}

/// The positive `x` with `x(a + x) = M`: `x = sqrt((a/2)^2 + M) - a/2`.
pub fn apply_areas_excess(a: &Rational, area: &Rational) -> Result<QuadraticSurd, Book2Error> {
    if a.is_negative() {
        return Err(Book2Error::NonPositiveInput);
    }
    if !area.is_positive() {
        return Err(Book2Error::NonPositiveArea);
    }
    let h = half(a);
    let root = QuadraticSurd::sqrt_rational(&(&h * &h + area))?;
    let x = root.checked_sub(&surd(&h))?;
    let lhs = x.checked_mul(&surd(a).checked_add(&x)?)?;
    check(lhs == surd(area) && x.is_positive(), || format!("x = {x} gives x(a+x) = {lhs}"))?;
    Ok(x)
}

/// Both `x` with `x(a - x) = M`, smaller first; a double root when
/// `(a/2)^2 = M`.
pub fn apply_areas_defect(a: &Rational, area: &Rational) -> Result<(QuadraticSurd, QuadraticSurd), Book2Error> {
    if !a.is_positive() {
        return Err(Book2Error::NonPositiveInput);
    }
    if !area.is_positive() {
        return Err(Book2Error::NonPositiveArea);
    }
    let h = half(a);
    let disc = &h * &h - area;
    if disc.is_negative() {
        return Err(Book2Error::NoSolution);
    }
    let root = QuadraticSurd::sqrt_rational(&disc)?;
    let h = surd(&h);
    let roots = (h.checked_sub(&root)?, h.checked_add(&root)?);
    for x in [&roots.0, &roots.1] {
        let lhs = x.checked_mul(&surd(a).checked_sub(x)?)?;
        check(lhs == surd(area), || format!("x = {x} gives x(a-x) = {lhs}"))?;
    }
    Ok(roots)
}

/// `b = a(sqrt(5) - 1)/2`, the greater segment with `a^2 = ab + b^2`.
pub fn mean_extreme(a: &Rational) -> Result<QuadraticSurd, Book2Error> {
    if !a.is_positive() {
        return Err(Book2Error::NonPositiveInput);
    }
    let b = QuadraticSurd::new(-1, 1, 5, 2)?.scale(a);
    let a = surd(a);
    let rhs = a.checked_mul(&b)?.checked_add(&b.square())?;
    check(a.square() == rhs, || format!("b = {b} gives ab + b^2 = {rhs}"))?;
    Ok(b)
}

/// `m = sqrt(ab)`.
pub fn mean_proportional(a: &Rational, b: &Rational) -> Result<QuadraticSurd, Book2Error> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Book2Error::NonPositiveInput);
    }
    let ab = a * b;
    let m = QuadraticSurd::sqrt_rational(&ab)?;
    check(m.square() == surd(&ab), || format!("m = {m} gives m^2 = {}", m.square()))?;
    Ok(m)
}

/// Coefficients of the form `A x^2 = B x y + C y^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl Form {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Self, Book2Error> {
        let f = Form { a: a.into(), b: b.into(), c: c.into() };
        if f.a.is_positive() && f.b.is_positive() && f.c.is_positive() {
            Ok(f)
        } else {
            Err(Book2Error::NonPositiveInput)
        }
    }

    /// The form of a square's gnomon: `x^2 = 2xy + y^2`.
    pub fn gnomon() -> Self {
        Form { a: 1.into(), b: 2.into(), c: 1.into() }
    }

    pub fn holds(&self, x: &QuadraticSurd, y: &QuadraticSurd) -> Result<bool, Book2Error> {
        let k = |n: &BigInt| QuadraticSurd::from_int(n.clone());
        let lhs = k(&self.a).checked_mul(&x.square())?;
        let rhs = k(&self.b).checked_mul(&x.checked_mul(y)?)?.checked_add(&k(&self.c).checked_mul(&y.square())?)?;
        Ok(lhs == rhs)
    }

    /// The positive `y` with `A x^2 = B x y + C y^2` for a given `x > 0`.
    ///
    /// The roots in `y` have product `-A x^2 / C < 0`, so exactly one is
    /// positive: `y = x(-B + sqrt(B^2 + 4AC)) / (2C)`.
    pub fn partner(&self, x: &QuadraticSurd) -> Result<QuadraticSurd, Book2Error> {
        if !x.is_positive() {
            return Err(Book2Error::NonPositiveInput);
        }
        let disc = &self.b * &self.b + &self.a * &self.c * 4;
        let t = QuadraticSurd::sqrt_of(disc)?
            .checked_sub(&QuadraticSurd::from_int(self.b.clone()))?
            .scale(&Rational::new(1.into(), &self.c * 2));
        let y = x.checked_mul(&t)?;
        check(y.is_positive() && self.holds(x, &y)?, || format!("y = {y} does not satisfy the form"))?;
        Ok(y)
    }
}

/// If both `(a, b)` and `(c, d)` satisfy the same form, then `ad = bc`.
pub fn form_preservation_cross(
    form: &Form,
    a: &QuadraticSurd,
    b: &QuadraticSurd,
    c: &QuadraticSurd,
    d: &QuadraticSurd,
) -> Result<bool, Book2Error> {
    if [a, b, c, d].iter().any(|x| !x.is_positive()) {
        return Err(Book2Error::NonPositiveInput);
    }
    for (x, y, name) in [(a, b, "(a, b)"), (c, d, "(c, d)")] {
        if !form.holds(x, y)? {
            return Err(Book2Error::HypothesisViolated(format!("{name} = ({x}, {y}) does not satisfy the form")));
        }
    }
    Ok(a.checked_mul(d)? == b.checked_mul(c)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GnomonStep {
    pub n: usize,
    pub remainder: QuadraticSurd,
    /// `c_{n-1}^2 = c_n (2c_{n-1} + c_n)`
    pub holds: bool,
}

/// Remainders `c_1..c_k` of `Anth(sqrt(2), 1)` with the excess form checked
/// between consecutive ones (`c_0 = 1`). Every step carries the same form
/// `x^2 = 2xy + y^2`.
pub fn gnomon_chain(k: usize) -> Result<Vec<GnomonStep>, Book2Error> {
    let root2 = QuadraticSurd::sqrt_of(2)?;
    let mut prev = QuadraticSurd::one();
    let mut out = Vec::with_capacity(k);
    for (i, step) in Steps::new(&root2, &QuadraticSurd::one())?.take(k).enumerate() {
        let c = step.remainder;
        let holds = Form::gnomon().holds(&prev, &c)?;
        out.push(GnomonStep { n: i + 1, remainder: c.clone(), holds });
        prev = c;
    }
    Ok(out)
}

/// `(n+1)^2 = n^2 + (2n+1)`.
pub fn square_gnomon_growth(n: &BigInt) -> bool {
    let next = n + 1;
    &next * &next == n * n + (n * 2 + 1)
}
