//! Brute-force Hilbert functions of monomial quotients `k[x_1..x_n] / I`.
//!
//! The degree-`t` piece of the quotient has the monomials of degree `t` that
//! no generator divides as a basis, so the Hilbert function is a count. The
//! eventual polynomial is recovered by Newton interpolation on the tail of the
//! table and handed to the Macaulay decision procedure.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::exec::Execution;
use crate::intpoly::{newton_interpolate, Polynomial, Rational};
use crate::macaulay::{macaulay_params, MacaulayParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("a polynomial ring needs at least one variable")]
    NoVariables,
    #[error("generator {index} has {found} exponents, expected {expected}")]
    ArityMismatch {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("generator {0} is the unit monomial")]
    UnitGenerator(usize),
    #[error("no stabilization detected in a table of length {0}; raise t_max")]
    StabilizationNotDetected(usize),
}

/// A monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n_vars: usize,
    generators: Vec<Vec<u32>>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl MonomialIdeal {
    /// Reduces `generators` to the minimal (antichain) generating set.
    pub fn new(n_vars: usize, generators: Vec<Vec<u32>>) -> Result<Self, OracleError> {
        if n_vars == 0 {
            return Err(OracleError::NoVariables);
        }
        for (index, g) in generators.iter().enumerate() {
            if g.len() != n_vars {
                return Err(OracleError::ArityMismatch {
                    index,
                    found: g.len(),
                    expected: n_vars,
                });
            }
            if g.iter().all(|&e| e == 0) {
                return Err(OracleError::UnitGenerator(index));
            }
        }
        let mut gens = generators;
        gens.sort();
        gens.dedup();
        let minimal: Vec<Vec<u32>> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .collect();
        Ok(Self {
            n_vars,
            generators: minimal,
        })
    }

    /// The whole polynomial ring (zero ideal).
    pub fn full_ring(n_vars: usize) -> Result<Self, OracleError> {
        Self::new(n_vars, Vec::new())
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    /// Number of degree-`t` monomials outside the ideal.
    pub fn count_monomials(&self, t: u32) -> u64 {
        let alive: Vec<&[u32]> = self.generators.iter().map(Vec::as_slice).collect();
        count_from(&alive, 0, self.n_vars, t)
    }
}

/// Counts exponent assignments to variables `var..n` summing to `remaining`
/// that no generator in `alive` divides. `alive` holds exactly the generators
/// that divide the prefix assigned so far.
fn count_from(alive: &[&[u32]], var: usize, n: usize, remaining: u32) -> u64 {
    // A surviving generator with no demands on the rest divides everything below.
    if alive.iter().any(|g| g[var..].iter().all(|&e| e == 0)) {
        return 0;
    }
    if var + 1 == n {
        return u64::from(!alive.iter().any(|g| g[var] <= remaining));
    }
    let mut total = 0;
    let mut next: Vec<&[u32]> = Vec::with_capacity(alive.len());
    for e in 0..=remaining {
        next.clear();
        next.extend(alive.iter().filter(|g| g[var] <= e));
        total += count_from(&next, var + 1, n, remaining - e);
    }
    total
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "(0) in {} variables", self.n_vars);
        }
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let mut first = true;
            for (v, &e) in g.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "x{}", v + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        write!(f, ") in {} variables", self.n_vars)
    }
}

/// `H(R; t)` for `t = 0..=t_max`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertTable(Vec<u64>);

impl HilbertTable {
    pub fn new(values: Vec<u64>) -> Self {
        Self(values)
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for HilbertTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

pub fn hilbert_table(ideal: &MonomialIdeal, t_max: u32) -> HilbertTable {
    hilbert_table_with(ideal, t_max, Execution::default())
}

/// Degrees are counted independently and merged in degree order.
pub fn hilbert_table_with(ideal: &MonomialIdeal, t_max: u32, exec: Execution) -> HilbertTable {
    HilbertTable(exec.map_indices(t_max as usize + 1, |t| ideal.count_monomials(t as u32)))
}

/// Polynomial through the tail of the table, and the first index from which
/// the table agrees with it.
///
/// Degree `d` is accepted for the smallest `d` whose last `d + 3` entries lie
/// on one degree-`d` polynomial.
pub fn interpolate_eventual(table: &HilbertTable) -> Result<(Polynomial, usize), OracleError> {
    let values: Vec<Rational> = table
        .0
        .iter()
        .map(|&v| Rational::from_integer(BigInt::from(v)))
        .collect();
    let len = values.len();
    for d in 0.. {
        let window = d + 3;
        if window > len {
            break;
        }
        let start = len - window;
        if !differences_vanish(&values[start..], d + 1) {
            continue;
        }
        let poly = newton_interpolate(start as i64, &values[start..start + d + 1]);
        let mut stable = start;
        while stable > 0 && poly.evaluate_i64(stable as i64 - 1) == values[stable - 1] {
            stable -= 1;
        }
        return Ok((poly, stable));
    }
    Err(OracleError::StabilizationNotDetected(len))
}

/// Whether every `order`-th forward difference of `values` is zero.
fn differences_vanish(values: &[Rational], order: usize) -> bool {
    let mut row = values.to_vec();
    for _ in 0..order {
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    row.iter().all(Zero::is_zero)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub table: HilbertTable,
    pub polynomial: Polynomial,
    /// `None` only if the interpolated polynomial is not integer-valued.
    pub params: Option<MacaulayParams>,
    pub stabilization: usize,
    pub hilbert: bool,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.hilbert
    }
}

/// Table → eventual polynomial → Macaulay verdict. The verdict must be
/// positive; a negative one means a bug somewhere in the pipeline.
pub fn cross_check(ideal: &MonomialIdeal, t_max: u32) -> Result<CrossCheck, OracleError> {
    cross_check_with(ideal, t_max, Execution::default())
}

pub fn cross_check_with(
    ideal: &MonomialIdeal,
    t_max: u32,
    exec: Execution,
) -> Result<CrossCheck, OracleError> {
    let table = hilbert_table_with(ideal, t_max, exec);
    let (polynomial, stabilization) = interpolate_eventual(&table)?;
    let params = macaulay_params(&polynomial).ok();
    let hilbert = params.as_ref().is_some_and(MacaulayParams::is_admissible);
    Ok(CrossCheck {
        table,
        polynomial,
        params,
        stabilization,
        hilbert,
    })
}
