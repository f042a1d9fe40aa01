use hilbpoly::intpoly::Rational;
use hilbpoly::oracle::{hilbert_table, MonomialIdeal};
use hilbpoly::realizer::{build_certificate, leading_bound, minimal_leading, verify_certificate};
use hilbpoly::{
    binomial_poly, classify_monomial, is_hilbert, macaulay_params, realize_signs,
    LowerCoefficients, MacaulayParams, Polynomial, SignPattern,
};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn rational_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small_rational(), 0..6).prop_map(Polynomial::from_coeffs)
}

/// Integer combinations of `C(x+i, i)`: exactly the integer-valued polynomials.
fn integer_valued_poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-30i64..=30, 1..=max_degree + 1).prop_map(|cs| {
        cs.iter()
            .enumerate()
            .map(|(i, &c)| binomial_poly(i as i64, i).scale_int(&c.into()))
            .sum()
    })
}

fn lower_coefficients() -> impl Strategy<Value = LowerCoefficients> {
    prop::collection::vec(-25i64..=25, 1..=4)
        .prop_map(|a| LowerCoefficients::from_ints(&a).unwrap())
}

/// Hilbert polynomials from the realizer family and the accepted monomials.
fn hilbert_poly() -> impl Strategy<Value = Polynomial> {
    prop_oneof![
        (lower_coefficients(), 0u32..20).prop_map(|(l, extra)| {
            let n = leading_bound(&l) + BigInt::from(extra);
            l.with_leading(&n)
        }),
        (1i64..=30, 0usize..=5)
            .prop_filter("accepted monomial", |(t, d)| classify_monomial(
                &(*t).into(),
                *d
            )
            .unwrap())
            .prop_map(|(t, d)| Polynomial::monomial(Rational::from_integer(t.into()), d)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn arithmetic_commutes_with_evaluation(f in rational_poly(), g in rational_poly(),
                                           c in small_rational(), x in -15i64..=15) {
        let (fx, gx) = (f.evaluate_i64(x), g.evaluate_i64(x));
        prop_assert_eq!((&f + &g).evaluate_i64(x), &fx + &gx);
        prop_assert_eq!((&f * &g).evaluate_i64(x), &fx * &gx);
        prop_assert_eq!(f.scale(&c).evaluate_i64(x), &fx * &c);
    }

    #[test]
    fn pascal_identity(s in -12i64..=12, k in 2usize..=7) {
        prop_assert_eq!(binomial_poly(s, k) - binomial_poly(s - 1, k), binomial_poly(s - 1, k - 1));
    }

    #[test]
    fn integer_valued_agrees_with_probe(f in rational_poly(), extra in prop::collection::vec(-1000i64..1000, 5)) {
        let probe = (-10i64..=10).chain(extra).all(|x| f.evaluate_i64(x).is_integer());
        prop_assert_eq!(f.is_integer_valued(), probe);
    }

    #[test]
    fn sign_pattern_ignores_leading(f in rational_poly(), lead in 1i64..50) {
        prop_assume!(!f.is_zero());
        let d = f.degree().unwrap();
        let s = f.sign_pattern().unwrap();
        prop_assert_eq!(s.len(), d);
        let mut coeffs = f.coeffs().to_vec();
        coeffs[d] = Rational::from_integer(lead.into());
        prop_assert_eq!(Polynomial::from_coeffs(coeffs).sign_pattern().unwrap(), s);
    }

    #[test]
    fn decomposition_recomposes(f in integer_valued_poly(6)) {
        let m = macaulay_params(&f).unwrap();
        prop_assert_eq!(m.params().len(), f.degree().map_or(1, |d| d + 1));
        prop_assert_eq!(m.recompose(), f);
    }

    #[test]
    fn parameters_are_unique(f in integer_valued_poly(5), idx in 0usize..6, up in any::<bool>()) {
        prop_assume!(!f.is_zero());
        let m = macaulay_params(&f).unwrap();
        let i = idx % m.params().len();
        let mut changed = m.params().to_vec();
        changed[i] += if up { 1 } else { -1 };
        prop_assert_ne!(MacaulayParams::new(changed).recompose(), f);
    }

    #[test]
    fn hilbert_leading_coefficient_positive(f in integer_valued_poly(6)) {
        if is_hilbert(&f) && !f.is_zero() {
            prop_assert!(f.leading_coefficient().unwrap().is_positive());
        }
    }

    #[test]
    fn closure_under_sum_product_and_scaling(f in hilbert_poly(), g in hilbert_poly(), t in 1i64..=12) {
        prop_assert!(is_hilbert(&f) && is_hilbert(&g));
        prop_assert!(is_hilbert(&(&f + &g)));
        prop_assert!(is_hilbert(&(&f * &g)));
        prop_assert!(is_hilbert(&f.scale_int(&t.into())));
    }

    #[test]
    fn bound_suffices(lower in lower_coefficients(), extra in 0u32..40) {
        let n = leading_bound(&lower) + BigInt::from(extra);
        prop_assert!(is_hilbert(&lower.with_leading(&n)));
    }

    #[test]
    fn minimal_leading_is_minimal(lower in lower_coefficients()) {
        let min = minimal_leading(&lower);
        prop_assert!(min <= leading_bound(&lower));
        prop_assert!(is_hilbert(&lower.with_leading(&min)));
        if min > BigInt::from(1) {
            prop_assert!(!is_hilbert(&lower.with_leading(&(&min - 1))));
        }
    }

    #[test]
    fn certificates_verify_and_imply_hilbert(lower in lower_coefficients(), extra in 0u32..30) {
        let n = leading_bound(&lower) + BigInt::from(extra);
        let target = lower.with_leading(&n);
        let cert = build_certificate(&lower, &n).unwrap();
        prop_assert!(verify_certificate(&cert, &target));
        prop_assert!(is_hilbert(&target));
    }

    #[test]
    fn realized_patterns_roundtrip(d in 1usize..=8, seed in any::<usize>()) {
        let s = SignPattern::nth(d, seed % 3usize.pow(d as u32));
        let f = realize_signs(&s).unwrap();
        prop_assert_eq!(f.degree(), Some(d));
        prop_assert_eq!(f.sign_pattern().unwrap(), s);
        prop_assert!(is_hilbert(&f));
    }

    #[test]
    fn adding_a_generator_never_increases_counts(
        n in 1usize..=4,
        gens in prop::collection::vec(prop::collection::vec(0u32..3, 4), 0..4),
        extra in prop::collection::vec(0u32..3, 4),
    ) {
        let fix = |g: &Vec<u32>| -> Option<Vec<u32>> {
            let g = g[..n].to_vec();
            (!g.iter().all(|&e| e == 0)).then_some(g)
        };
        let base: Vec<Vec<u32>> = gens.iter().filter_map(fix).collect();
        prop_assume!(fix(&extra).is_some());
        let mut more = base.clone();
        more.push(fix(&extra).unwrap());
        let a = hilbert_table(&MonomialIdeal::new(n, base).unwrap(), 8);
        let b = hilbert_table(&MonomialIdeal::new(n, more).unwrap(), 8);
        prop_assert!(a.values().iter().zip(b.values()).all(|(x, y)| y <= x));
        prop_assert_eq!(a.values()[0], 1);
    }
}

#[test]
fn free_counts_match_closed_form() {
    for n in 1..=5usize {
        let ideal = MonomialIdeal::full_ring(n).unwrap();
        let closed = binomial_poly(n as i64 - 1, n - 1);
        for t in 0..=15u32 {
            let expected = closed.evaluate_i64(t as i64);
            assert_eq!(
                Rational::from_integer(ideal.count_monomials(t).into()),
                expected
            );
        }
    }
}

#[test]
fn classification_matches_decision_procedure_small() {
    for t in 1..=10i64 {
        for d in 0..=4usize {
            let f = Polynomial::monomial(Rational::from_integer(t.into()), d);
            assert_eq!(
                classify_monomial(&t.into(), d).unwrap(),
                is_hilbert(&f),
                "t={t} d={d}"
            );
        }
    }
}
