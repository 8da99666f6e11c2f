//! Sparse integer polynomials over a fixed set of ten variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{ExactError, QuadraticSurd};

pub const NVARS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A,
    B,
    C,
    D,
    E,
    M,
    S,
    X,
    C1,
    C2,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::A, Var::B, Var::C, Var::D, Var::E, Var::M, Var::S, Var::X, Var::C1, Var::C2];

    pub fn name(self) -> &'static str {
        ["a", "b", "c", "d", "e", "m", "s", "x", "c1", "c2"][self as usize]
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }
}

type Exps = [u32; NVARS];

/// Canonical sparse polynomial: a map from exponent vectors to nonzero
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Exps, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, [0; NVARS])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v as usize] = 1;
        Self::monomial(1, e)
    }

    fn monomial(c: impl Into<BigInt>, e: Exps) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    fn add_term(&mut self, e: Exps, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the monomial with the given exponents (missing
    /// variables have exponent 0).
    pub fn coeff(&self, exps: &[(Var, u32)]) -> BigInt {
        let mut e = [0; NVARS];
        for &(v, k) in exps {
            e[v as usize] = k;
        }
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e[v as usize]).max().unwrap_or(0)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(1), |acc, _| &acc * self)
    }

    /// Rewrites every `v^2` as `rhs` until `v` appears at most linearly.
    ///
    /// `rhs` must itself be at most linear in `v`, which is what makes the
    /// substitution a reduction modulo the monic quadratic `v^2 - rhs`.
    pub fn reduce(&self, v: Var, rhs: &Poly) -> Self {
        assert!(rhs.degree_in(v) <= 1, "reduction needs a monic quadratic hypothesis");
        let i = v as usize;
        let mut out = Poly::zero();
        let mut todo: Vec<(Exps, BigInt)> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        while let Some((mut e, c)) = todo.pop() {
            if e[i] < 2 {
                out.add_term(e, c);
                continue;
            }
            e[i] -= 2;
            let rest = Poly::monomial(c, e);
            for (e2, c2) in (&rest * rhs).terms {
                todo.push((e2, c2));
            }
        }
        out
    }

    /// Evaluates at a point; `values` is indexed like [`Var::ALL`].
    pub fn eval(&self, values: &[QuadraticSurd; NVARS]) -> Result<QuadraticSurd, ExactError> {
        let mut acc = QuadraticSurd::zero();
        for (e, c) in &self.terms {
            let mut t = QuadraticSurd::from_int(c.clone());
            for (v, &k) in values.iter().zip(e) {
                for _ in 0..k {
                    t = t.checked_mul(v)?;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &-rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let mut e = *e1;
                for (x, y) in e.iter_mut().zip(e2) {
                    *x += y;
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    /// Terms by descending total degree, then lexicographically in the order
    /// of [`Var::ALL`]; e.g. `a^2 + 2*a*b + b^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(e1, _), (e2, _)| {
            let d1: u32 = e1.iter().sum();
            let d2: u32 = e2.iter().sum();
            d2.cmp(&d1).then_with(|| e2.cmp(e1))
        });
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = Var::ALL
                .iter()
                .zip(e)
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { v.name().to_string() } else { format!("{}^{k}", v.name()) })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Expression tree over the variables and integer constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Var(Var),
    Const(BigInt),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Parses `+ - * ^`, parentheses, integers and the variable names.
    /// Juxtaposition multiplies, so `2ab` and `2(a+b)^2` are accepted; a
    /// variable name is one letter optionally followed by digits (`c1`).
    pub fn parse(input: &str) -> Result<Expr, String> {
        let mut p = ExprParser { s: input.as_bytes(), pos: 0 };
        let e = p.sum()?;
        p.ws();
        if p.pos != p.s.len() {
            return Err(format!("unexpected input at byte {} of {input:?}", p.pos));
        }
        Ok(e)
    }
}

/// Expands an expression tree into its canonical polynomial.
pub fn poly_build(e: &Expr) -> Poly {
    match e {
        Expr::Var(v) => Poly::var(*v),
        Expr::Const(c) => Poly::constant(c.clone()),
        Expr::Neg(x) => -&poly_build(x),
        Expr::Add(x, y) => &poly_build(x) + &poly_build(y),
        Expr::Sub(x, y) => &poly_build(x) - &poly_build(y),
        Expr::Mul(x, y) => &poly_build(x) * &poly_build(y),
        Expr::Pow(x, k) => poly_build(x).pow(*k),
    }
}

/// Parses and expands in one go.
pub fn poly(input: &str) -> Result<Poly, String> {
    Expr::parse(input).map(|e| poly_build(&e))
}

struct ExprParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn ws(&mut self) {
        while self.s.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Expr, String> {
        let mut acc = self.product()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.product()?;
            acc = if op == b'+' { Expr::Add(acc.into(), rhs.into()) } else { Expr::Sub(acc.into(), rhs.into()) };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Expr, String> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => self.pos += 1,
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {}
                _ => return Ok(acc),
            }
            let rhs = self.power()?;
            acc = Expr::Mul(acc.into(), rhs.into());
        }
    }

    fn unary(&mut self) -> Result<Expr, String> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(self.unary()?.into()));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, String> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.ws();
            let k = self.digits()?.to_string().parse::<u32>().map_err(|e| e.to_string())?;
            return Ok(Expr::Pow(base.into(), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, String> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(format!("expected ')' at byte {}", self.pos));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Const(self.digits()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
                Var::from_name(name).map(Expr::Var).ok_or_else(|| format!("unknown variable {name:?}"))
            }
            Some(c) => Err(format!("unexpected {:?} at byte {}", c as char, self.pos)),
            None => Err("unexpected end of input".into()),
        }
    }

    fn digits(&mut self) -> Result<BigInt, String> {
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| format!("expected a number at byte {start}"))
    }
}
