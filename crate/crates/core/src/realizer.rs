//! Leading-coefficient thresholds, sign-pattern realization and closure
//! certificates.
//!
//! For integers `a_0, …, a_{d-1}` with `N = min a_i`, the polynomial
//! `n·x^d + Σ a_i x^i` is Hilbert for every `n ≥ 5d+3` when `N ≥ −2`, and for
//! every `n ≥ −10d⌊N/5⌋ + 3` otherwise. The witness is the identity
//!
//! ```text
//! (5x − 5)(d·x^{d−1} + ⋯ + 2x + 1) = 5(d·x^d − x^{d−1} − ⋯ − 1)
//! ```
//!
//! plus enough nonnegative padding on each lower coefficient. Certificates
//! record that decomposition as a sum/product tree over atoms whose Hilbert
//! property is individually checkable, so verification only relies on sums,
//! products and positive multiples of Hilbert polynomials being Hilbert.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exec::Execution;
use crate::intpoly::{floor_div, Polynomial, Rational, SignPattern};
use crate::macaulay::{classify_monomial, is_hilbert};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizerError {
    #[error("coefficient vector must be non-empty (degree d >= 1)")]
    EmptyCoefficients,
    #[error("sign pattern must be non-empty (degree d >= 1)")]
    EmptyPattern,
    #[error("leading coefficient {n} is below the bound {bound}")]
    BoundViolated { n: BigInt, bound: BigInt },
}

/// The lower coefficients `(a_0, …, a_{d-1})`, `d ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LowerCoefficients(Vec<BigInt>);

impl LowerCoefficients {
    pub fn new(a: Vec<BigInt>) -> Result<Self, RealizerError> {
        if a.is_empty() {
            return Err(RealizerError::EmptyCoefficients);
        }
        Ok(Self(a))
    }

    pub fn from_ints(a: &[i64]) -> Result<Self, RealizerError> {
        Self::new(a.iter().map(|&c| c.into()).collect())
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `N = min{a_0, …, a_{d-1}}`.
    pub fn min(&self) -> &BigInt {
        self.0.iter().min().expect("non-empty by construction")
    }

    /// `n·x^d + a_{d-1}x^{d-1} + ⋯ + a_0`.
    pub fn with_leading(&self, n: &BigInt) -> Polynomial {
        let mut coeffs: Vec<BigInt> = self.0.clone();
        coeffs.push(n.clone());
        Polynomial::from_ints(&coeffs)
    }

    /// `M = −⌊N/5⌋` when `N < −2`, `None` otherwise.
    fn shift_multiplier(&self) -> Option<BigInt> {
        let n = self.min();
        (n < &BigInt::from(-2)).then(|| -floor_div(n, &BigInt::from(5)))
    }
}

/// `5d + 3` if `N ≥ −2`, else `−10d⌊N/5⌋ + 3`.
pub fn leading_bound(lower: &LowerCoefficients) -> BigInt {
    let d = BigInt::from(lower.degree());
    match lower.shift_multiplier() {
        None => BigInt::from(5) * d + 3,
        Some(m) => BigInt::from(10) * d * m + 3,
    }
}

/// `(5d+3)·x^d + Σ s_i x^i`: a Hilbert polynomial of degree `d` with
/// sign pattern `s`.
pub fn realize_signs(s: &SignPattern) -> Result<Polynomial, RealizerError> {
    if s.is_empty() {
        return Err(RealizerError::EmptyPattern);
    }
    let lower = LowerCoefficients::new(
        s.entries()
            .iter()
            .map(|e| BigInt::from(e.value()))
            .collect(),
    )?;
    Ok(lower.with_leading(&leading_bound(&lower)))
}

/// Smallest `n ≥ 1` making `n·x^d + Σ a_i x^i` Hilbert, by linear scan.
pub fn minimal_leading(lower: &LowerCoefficients) -> BigInt {
    let bound = leading_bound(lower);
    let mut n = BigInt::one();
    while n < bound {
        if is_hilbert(&lower.with_leading(&n)) {
            return n;
        }
        n += 1;
    }
    bound
}

/// Why a leaf atom is Hilbert, independently of the decision procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Justification {
    /// `t·x^k` accepted by the monomial classification.
    MonomialProposition,
    /// The base fact for `2x + 1`.
    TwoXPlusOne,
    /// The base fact for `5x − 5`.
    FiveXMinusFive,
    /// A nonnegative integer constant.
    Constant,
}

impl Justification {
    /// Checks the tag's claim against the atom's shape.
    fn holds_for(self, p: &Polynomial) -> bool {
        match self {
            Justification::TwoXPlusOne => *p == Polynomial::from_ints(&[1, 2]),
            Justification::FiveXMinusFive => *p == Polynomial::from_ints(&[-5, 5]),
            Justification::Constant => match p.degree() {
                None => true,
                Some(0) => p.coeffs()[0].is_integer() && p.coeffs()[0].is_positive(),
                Some(_) => false,
            },
            Justification::MonomialProposition => {
                let Some(d) = p.degree() else { return false };
                let lead = &p.coeffs()[d];
                p.coeffs()[..d].iter().all(Zero::is_zero)
                    && lead.is_integer()
                    && classify_monomial(&lead.to_integer(), d).unwrap_or(false)
            }
        }
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Justification::MonomialProposition => "monomial",
            Justification::TwoXPlusOne => "base 2x+1",
            Justification::FiveXMinusFive => "base 5x-5",
            Justification::Constant => "constant",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub polynomial: Polynomial,
    pub justification: Justification,
}

/// Closure-operation tree over atom indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Combiner {
    Atom(usize),
    Sum(Vec<Combiner>),
    Product(Vec<Combiner>),
    /// Positive integer multiple.
    Scale(BigInt, Box<Combiner>),
}

impl Combiner {
    /// `None` if the tree references a missing atom or scales by `t < 1`.
    fn evaluate(&self, atoms: &[Atom]) -> Option<Polynomial> {
        match self {
            Combiner::Atom(i) => atoms.get(*i).map(|a| a.polynomial.clone()),
            Combiner::Sum(children) => children
                .iter()
                .map(|c| c.evaluate(atoms))
                .sum::<Option<Polynomial>>(),
            Combiner::Product(children) => children
                .iter()
                .try_fold(Polynomial::one(), |acc, c| Some(acc * c.evaluate(atoms)?)),
            Combiner::Scale(t, child) => {
                if t < &BigInt::one() {
                    return None;
                }
                Some(child.evaluate(atoms)?.scale_int(t))
            }
        }
    }

    fn write_tree(&self, atoms: &[Atom], depth: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pad = "  ".repeat(depth);
        match self {
            Combiner::Atom(i) => match atoms.get(*i) {
                Some(a) => writeln!(f, "{pad}{}  [{}]", a.polynomial, a.justification),
                None => writeln!(f, "{pad}<missing atom {i}>"),
            },
            Combiner::Sum(children) | Combiner::Product(children) => {
                let op = if matches!(self, Combiner::Sum(_)) {
                    "sum"
                } else {
                    "product"
                };
                writeln!(f, "{pad}{op}")?;
                children
                    .iter()
                    .try_for_each(|c| c.write_tree(atoms, depth + 1, f))
            }
            Combiner::Scale(t, child) => {
                writeln!(f, "{pad}scale {t}")?;
                child.write_tree(atoms, depth + 1, f)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub atoms: Vec<Atom>,
    pub combiner: Combiner,
}

impl Certificate {
    /// Polynomial the combiner tree evaluates to.
    pub fn evaluate(&self) -> Option<Polynomial> {
        self.combiner.evaluate(&self.atoms)
    }

    /// Evaluated top-level summands (the whole value if the root is not a sum).
    pub fn summands(&self) -> Vec<Polynomial> {
        match &self.combiner {
            Combiner::Sum(children) => children
                .iter()
                .filter_map(|c| c.evaluate(&self.atoms))
                .collect(),
            other => other.evaluate(&self.atoms).into_iter().collect(),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.combiner.write_tree(&self.atoms, 0, f)
    }
}

struct Builder {
    atoms: Vec<Atom>,
}

impl Builder {
    fn atom(&mut self, polynomial: Polynomial, justification: Justification) -> Combiner {
        self.atoms.push(Atom {
            polynomial,
            justification,
        });
        Combiner::Atom(self.atoms.len() - 1)
    }

    /// `c·x^k` with `c ≥ 3` (or any `c ≥ 0` for `k = 0`).
    fn padded_monomial(&mut self, c: &BigInt, k: usize) -> Combiner {
        let p = Polynomial::monomial(Rational::from_integer(c.clone()), k);
        let tag = if k == 0 {
            Justification::Constant
        } else {
            Justification::MonomialProposition
        };
        self.atom(p, tag)
    }

    /// `(5x − 5)·(d·x^{d−1} + ⋯ + 2x + 1) = 5(d·x^d − x^{d−1} − ⋯ − 1)`.
    ///
    /// The second factor contains the non-Hilbert `2x`, so it is regrouped as
    /// `(2x + 1) + 3x² + ⋯ + d·x^{d−1}`.
    fn base_product(&mut self, d: usize) -> Combiner {
        let linear = self.atom(
            Polynomial::from_ints(&[-5, 5]),
            Justification::FiveXMinusFive,
        );
        let factor = match d {
            1 => self.atom(Polynomial::one(), Justification::Constant),
            _ => {
                let mut parts =
                    vec![self.atom(Polynomial::from_ints(&[1, 2]), Justification::TwoXPlusOne)];
                for k in 3..=d {
                    parts.push(self.padded_monomial(&BigInt::from(k), k - 1));
                }
                if parts.len() == 1 {
                    parts.pop().unwrap()
                } else {
                    Combiner::Sum(parts)
                }
            }
        };
        Combiner::Product(vec![linear, factor])
    }
}

/// Decomposes `n·x^d + Σ a_i x^i` into certified Hilbert pieces.
///
/// With `N ≥ −2`: `5(d·x^d − Σ x^i) + Σ (a_i + 5)x^i + (n − 5d)x^d`.
/// With `N < −2` and `M = −⌊N/5⌋`: two copies of `M·5(d·x^d − Σ x^i)`, then
/// `Σ (a_i + 10M)x^i + (n − 10dM)x^d`.
pub fn build_certificate(
    lower: &LowerCoefficients,
    n: &BigInt,
) -> Result<Certificate, RealizerError> {
    let bound = leading_bound(lower);
    if n < &bound {
        return Err(RealizerError::BoundViolated {
            n: n.clone(),
            bound,
        });
    }
    let d = lower.degree();
    let mut b = Builder { atoms: Vec::new() };
    let (base, pad) = match lower.shift_multiplier() {
        None => (b.base_product(d), BigInt::from(5)),
        Some(m) => {
            let first = b.base_product(d);
            let second = b.base_product(d);
            let base = Combiner::Sum(vec![
                Combiner::Scale(m.clone(), Box::new(first)),
                Combiner::Scale(m.clone(), Box::new(second)),
            ]);
            (base, BigInt::from(10) * m)
        }
    };
    let mut summands = vec![base];
    for (i, a) in lower.coefficients().iter().enumerate() {
        let c = a + &pad;
        if !c.is_zero() {
            summands.push(b.padded_monomial(&c, i));
        }
    }
    let top = n - &pad * BigInt::from(d);
    if !top.is_zero() {
        summands.push(b.padded_monomial(&top, d));
    }
    Ok(Certificate {
        atoms: b.atoms,
        combiner: Combiner::Sum(summands),
    })
}

/// Every atom carries a valid justification and is Hilbert, and the tree
/// evaluates exactly to `target`.
pub fn verify_certificate(c: &Certificate, target: &Polynomial) -> bool {
    let leaves_ok = c
        .atoms
        .iter()
        .all(|a| a.justification.holds_for(&a.polynomial) && is_hilbert(&a.polynomial));
    leaves_ok && c.evaluate().as_ref() == Some(target)
}

/// One row of a sign-pattern sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub pattern: SignPattern,
    pub polynomial: Polynomial,
    pub hilbert: bool,
    pub pattern_matches: bool,
}

impl SweepRow {
    pub fn passed(&self, d: usize) -> bool {
        self.hilbert && self.pattern_matches && self.polynomial.degree() == Some(d)
    }
}

/// Realizes and checks all `3^d` sign patterns of length `d ≥ 1`.
pub fn sweep_sign_patterns(d: usize, exec: Execution) -> Vec<SweepRow> {
    let count = 3usize.pow(d as u32);
    exec.map_indices(count, |k| {
        let pattern = SignPattern::nth(d, k);
        let polynomial = realize_signs(&pattern).expect("d >= 1");
        SweepRow {
            hilbert: is_hilbert(&polynomial),
            pattern_matches: polynomial.sign_pattern().ok().as_ref() == Some(&pattern),
            pattern,
            polynomial,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::Sign;

    fn lower(a: &[i64]) -> LowerCoefficients {
        LowerCoefficients::from_ints(a).unwrap()
    }

    fn ints(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn bound_examples() {
        assert_eq!(leading_bound(&lower(&[1, 1, 1])), BigInt::from(18));
        assert_eq!(leading_bound(&lower(&[-7, 0])), BigInt::from(43));
        assert_eq!(leading_bound(&lower(&[-2])), BigInt::from(8));
        assert_eq!(leading_bound(&lower(&[-3])), BigInt::from(13));
        assert_eq!(leading_bound(&lower(&[-5])), BigInt::from(13));
        assert_eq!(leading_bound(&lower(&[-6])), BigInt::from(23));
    }

    #[test]
    fn empty_lower_rejected() {
        assert_eq!(
            LowerCoefficients::from_ints(&[]),
            Err(RealizerError::EmptyCoefficients)
        );
    }

    #[test]
    fn realize_examples() {
        let s = SignPattern::new(vec![Sign::Negative, Sign::Positive]);
        assert_eq!(realize_signs(&s).unwrap(), ints(&[-1, 1, 13]));
        let s = SignPattern::new(vec![Sign::Zero]);
        assert_eq!(realize_signs(&s).unwrap(), ints(&[0, 8]));
        assert!(classify_monomial(&8.into(), 1).unwrap());
        let s = SignPattern::new(vec![Sign::Zero; 3]);
        assert_eq!(realize_signs(&s).unwrap(), ints(&[0, 0, 0, 18]));
        assert_eq!(
            realize_signs(&SignPattern::new(vec![])),
            Err(RealizerError::EmptyPattern)
        );
    }

    #[test]
    fn certificate_examples() {
        let c = build_certificate(&lower(&[-1]), &8.into()).unwrap();
        assert_eq!(
            c.summands(),
            vec![ints(&[-5, 5]), ints(&[4]), ints(&[0, 3])]
        );
        assert!(verify_certificate(&c, &ints(&[-1, 8])));
        assert!(!verify_certificate(&c, &ints(&[1, 8])));

        let c = build_certificate(&lower(&[0, 0]), &13.into()).unwrap();
        assert_eq!(
            c.summands(),
            vec![
                ints(&[-5, -5, 10]),
                ints(&[5]),
                ints(&[0, 5]),
                ints(&[0, 0, 3])
            ]
        );
        assert!(verify_certificate(&c, &ints(&[0, 0, 13])));

        let c = build_certificate(&lower(&[-7]), &23.into()).unwrap();
        assert_eq!(
            c.summands(),
            vec![ints(&[-20, 20]), ints(&[13]), ints(&[0, 3])]
        );
        assert!(verify_certificate(&c, &ints(&[-7, 23])));
    }

    #[test]
    fn certificate_rejects_injected_non_hilbert_atom() {
        let mut c = build_certificate(&lower(&[-1]), &8.into()).unwrap();
        let last = c.atoms.len() - 1;
        c.atoms[last].polynomial = ints(&[0, 2]);
        assert!(!verify_certificate(&c, &ints(&[-1, 7])));
    }

    #[test]
    fn certificate_rejects_mislabelled_atom() {
        let mut c = build_certificate(&lower(&[0, 0, 0]), &18.into()).unwrap();
        let i = c
            .atoms
            .iter()
            .position(|a| a.justification == Justification::TwoXPlusOne)
            .unwrap();
        c.atoms[i].justification = Justification::MonomialProposition;
        assert!(!verify_certificate(&c, &ints(&[0, 0, 0, 18])));
    }

    #[test]
    fn certificate_below_bound() {
        assert_eq!(
            build_certificate(&lower(&[0]), &7.into()),
            Err(RealizerError::BoundViolated {
                n: 7.into(),
                bound: 8.into()
            })
        );
    }

    #[test]
    fn base_product_identity() {
        for d in 1..8 {
            let mut b = Builder { atoms: Vec::new() };
            let tree = b.base_product(d);
            let mut expected = vec![-5i64; d];
            expected.push(5 * d as i64);
            assert_eq!(tree.evaluate(&b.atoms).unwrap(), ints(&expected));
        }
    }

    #[test]
    fn minimal_examples() {
        assert_eq!(minimal_leading(&lower(&[1])), BigInt::from(1));
        assert_eq!(minimal_leading(&lower(&[0])), BigInt::from(3));
        assert_eq!(minimal_leading(&lower(&[0, 0])), BigInt::from(3));
    }

    #[test]
    fn sweep_small() {
        let rows = sweep_sign_patterns(2, Execution::Sequential);
        assert_eq!(rows.len(), 9);
        assert!(rows.iter().all(|r| r.passed(2)));
    }
}
