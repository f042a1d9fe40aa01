//! Macaulay parameters and the Hilbert-polynomial decision procedure.
//!
//! Every integer-valued polynomial `f` of degree `d` has a unique expansion
//!
//! ```text
//! f(x) = Σ_{i=0}^{d} [ C(x+i, i+1) − C(x+i−m_i, i+1) ]
//! ```
//!
//! and `f` is a Hilbert polynomial exactly when `m_0 ≥ m_1 ≥ … ≥ m_d ≥ 0`.
//! The `i`-th summand has degree `i` and leading coefficient `m_i / i!`, so
//! the parameters can be peeled off from the top degree down.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::intpoly::{binomial_poly, factorial, falling_factorial, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacaulayError {
    #[error("polynomial is not integer-valued")]
    NotIntegerValued,
    #[error("internal error: non-integral Macaulay parameter m_{index} = {value}")]
    InternalNonIntegerParameter { index: usize, value: Rational },
    #[error("coefficient must be a positive integer, got {0}")]
    NonPositiveCoefficient(BigInt),
}

/// `M(f) = (m_0, …, m_d)`; `(0)` for the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MacaulayParams(Vec<BigInt>);

impl MacaulayParams {
    pub fn new(params: Vec<BigInt>) -> Self {
        Self(params)
    }

    pub fn params(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<BigInt> {
        self.0
    }

    /// `m_0 ≥ m_1 ≥ … ≥ m_d ≥ 0`.
    pub fn is_admissible(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1]) && self.0.last().is_some_and(|m| !m.is_negative())
    }

    /// The summands `macaulay_term(i, m_i)`, index `i` first.
    pub fn terms(&self) -> Vec<Polynomial> {
        self.0
            .iter()
            .enumerate()
            .map(|(i, m)| macaulay_term(i, m))
            .collect()
    }

    pub fn recompose(&self) -> Polynomial {
        self.terms().into_iter().sum()
    }
}

impl fmt::Display for MacaulayParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str(")")
    }
}

/// `C(x+i, i+1) − C(x+i−m, i+1)`: degree `i` with leading coefficient `m/i!`,
/// or zero when `m = 0`.
pub fn macaulay_term(i: usize, m: &BigInt) -> Polynomial {
    if m.is_zero() {
        return Polynomial::zero();
    }
    let i_big = BigInt::from(i);
    binomial_poly(i_big.clone(), i + 1) - binomial_poly(i_big - m, i + 1)
}

pub fn macaulay_params(f: &Polynomial) -> Result<MacaulayParams, MacaulayError> {
    if !f.is_integer_valued() {
        return Err(MacaulayError::NotIntegerValued);
    }
    let Some(d) = f.degree() else {
        return Ok(MacaulayParams(vec![BigInt::zero()]));
    };
    // Work on L·f with L = (d+1)!, which clears every denominator of f and of
    // the terms, so the peeling runs on integers.
    let scale = factorial(d + 1);
    let mut rest: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| {
            let v = c * Rational::from_integer(scale.clone());
            debug_assert!(v.is_integer());
            v.to_integer()
        })
        .collect();
    let mut params = vec![BigInt::zero(); d + 1];
    for i in (0..=d).rev() {
        let m = Rational::new(&rest[i] * factorial(i), scale.clone());
        if !m.is_integer() {
            return Err(MacaulayError::InternalNonIntegerParameter { index: i, value: m });
        }
        let m = m.to_integer();
        if !m.is_zero() {
            let weight = &scale / factorial(i + 1);
            let i_big = BigInt::from(i);
            let upper = falling_factorial(&i_big, i + 1);
            let lower = falling_factorial(&(&i_big - &m), i + 1);
            for (k, (u, l)) in upper.iter().zip(&lower).enumerate().take(i + 1) {
                rest[k] -= &weight * (u - l);
            }
        }
        params[i] = m;
    }
    debug_assert!(rest.iter().all(Zero::is_zero));
    Ok(MacaulayParams(params))
}

/// Decides whether `f` is a Hilbert polynomial. Non-integer-valued input is
/// simply not one; the zero polynomial is.
pub fn is_hilbert(f: &Polynomial) -> bool {
    macaulay_params(f).is_ok_and(|m| m.is_admissible())
}

/// Closed-form verdict for `t·x^d`: Hilbert iff `d = 0`, `d ≥ 3`, or
/// `d ∈ {1, 2}` with `t ≥ 3`.
pub fn classify_monomial(t: &BigInt, d: usize) -> Result<bool, MacaulayError> {
    if t < &BigInt::one() {
        return Err(MacaulayError::NonPositiveCoefficient(t.clone()));
    }
    Ok(match d {
        0 => true,
        1 | 2 => t >= &BigInt::from(3),
        _ => true,
    })
}
