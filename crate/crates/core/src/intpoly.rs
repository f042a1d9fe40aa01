//! Exact univariate polynomials over the rationals.
//!
//! Coefficients are stored densely in ascending order (`coeffs[i]` is the
//! coefficient of `x^i`) and trailing zeros are always trimmed, so two
//! polynomials are equal exactly when their coefficient vectors are.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// The coefficient scalar used everywhere in the crate.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("degree of the zero polynomial is undefined")]
    DegreeUndefined,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    /// Ascending integer coefficients, `a_0` first.
    pub fn from_ints<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone().into()))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coefficient(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self.scale(&Rational::from_integer(c.clone()))
    }

    /// Exact value at an integer point (Horner).
    pub fn evaluate(&self, x: &BigInt) -> Rational {
        let x = Rational::from_integer(x.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * &x + c)
    }

    pub fn evaluate_i64(&self, x: i64) -> Rational {
        self.evaluate(&BigInt::from(x))
    }

    /// `(Δ⁰f(0), Δ¹f(0), …, Δᵈf(0))` with `Δf(x) = f(x+1) − f(x)`.
    ///
    /// Empty for the zero polynomial.
    pub fn forward_differences(&self) -> Vec<Rational> {
        let Some(d) = self.degree() else {
            return Vec::new();
        };
        let values: Vec<Rational> = (0..=d as i64).map(|t| self.evaluate_i64(t)).collect();
        leading_differences(values)
    }

    /// True iff `f(Z) ⊆ Z`, decided by integrality of the forward differences at 0.
    pub fn is_integer_valued(&self) -> bool {
        self.forward_differences().iter().all(Rational::is_integer)
    }

    /// Signs of `a_0, …, a_{d-1}`; the leading coefficient is not inspected.
    pub fn sign_pattern(&self) -> Result<SignPattern, PolyError> {
        let d = self.degree().ok_or(PolyError::DegreeUndefined)?;
        Ok(SignPattern::new(
            self.coeffs[..d].iter().map(Sign::of).collect(),
        ))
    }
}

/// Repeatedly differences `values` and keeps the head of each row.
fn leading_differences(mut values: Vec<Rational>) -> Vec<Rational> {
    let mut out = Vec::with_capacity(values.len());
    while !values.is_empty() {
        out.push(values[0].clone());
        values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    out
}

/// The polynomial `C(x + shift, lower) = ∏_{j<lower} (x + shift − j) / lower!`.
///
/// Defined for every integer `shift`; for arguments below `lower` this is the
/// falling-factorial extension, not the combinatorial zero. `lower = 0` gives 1.
pub fn binomial_poly(shift: impl Into<BigInt>, lower: usize) -> Polynomial {
    let denom = factorial(lower);
    Polynomial::from_coeffs(
        falling_factorial(&shift.into(), lower)
            .into_iter()
            .map(|c| Rational::new(c, denom.clone()))
            .collect(),
    )
}

/// Ascending integer coefficients of `∏_{j<k} (x + shift − j)`.
pub(crate) fn falling_factorial(shift: &BigInt, k: usize) -> Vec<BigInt> {
    let mut num: Vec<BigInt> = vec![BigInt::one()];
    for j in 0..k {
        let root = shift - BigInt::from(j);
        let mut next = vec![BigInt::zero(); num.len() + 1];
        for (i, c) in num.iter().enumerate() {
            next[i + 1] += c;
            next[i] += c * &root;
        }
        num = next;
    }
    num
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Newton forward interpolation through `values[k]` at `x = start + k`.
///
/// Returns the unique polynomial of degree < `values.len()` through the points.
pub fn newton_interpolate(start: i64, values: &[Rational]) -> Polynomial {
    leading_differences(values.to_vec())
        .iter()
        .enumerate()
        .fold(Polynomial::zero(), |acc, (k, delta)| {
            acc + binomial_poly(-start, k).scale(delta)
        })
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

/// Canonical text form: descending powers, explicit signs, rationals as `p/q`.
///
/// Integer coefficients are juxtaposed (`13x^2`), fractional ones use `*`
/// (`1/2*x^2`). The output is accepted by the CLI parser.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "{mag}*")?;
                }
            }
            match i {
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(c: &Rational) -> Self {
        if c.is_negative() {
            Sign::Negative
        } else if c.is_zero() {
            Sign::Zero
        } else {
            Sign::Positive
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            -1 => Some(Sign::Negative),
            0 => Some(Sign::Zero),
            1 => Some(Sign::Positive),
            _ => None,
        }
    }
}

/// `(sgn(a_0), …, sgn(a_{d-1}))` for a polynomial of degree `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignPattern(Vec<Sign>);

impl SignPattern {
    pub fn new(entries: Vec<Sign>) -> Self {
        Self(entries)
    }

    pub fn entries(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `index`-th pattern of length `d` in base-3 order, `a_0` least significant.
    ///
    /// Digits 0, 1, 2 map to −1, 0, +1. Valid for `index < 3^d`.
    pub fn nth(d: usize, mut index: usize) -> Self {
        let mut entries = Vec::with_capacity(d);
        for _ in 0..d {
            entries.push(match index % 3 {
                0 => Sign::Negative,
                1 => Sign::Zero,
                _ => Sign::Positive,
            });
            index /= 3;
        }
        Self(entries)
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", s.value())?;
        }
        f.write_str(")")
    }
}

/// True mathematical floor of `n / d` for `d > 0`.
pub fn floor_div(n: &BigInt, d: &BigInt) -> BigInt {
    n.div_floor(d)
}
