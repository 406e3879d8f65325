use knot_zeros::poly::{BivarPoly, IntPoly, QuarterLaurent};
use num_complex::Complex64;
use proptest::prelude::*;

fn bivar() -> impl Strategy<Value = BivarPoly> {
    prop::collection::vec(((0u32..5, 0u32..5), -20i64..=20), 0..6).prop_map(BivarPoly::from_terms)
}

fn laurent() -> impl Strategy<Value = QuarterLaurent> {
    prop::collection::vec((-24i64..=24, -20i64..=20), 0..6).prop_map(QuarterLaurent::from_terms)
}

fn integral_laurent() -> impl Strategy<Value = QuarterLaurent> {
    (-3i64..=3, prop::collection::vec((-6i64..=6, -20i64..=20), 1..6))
        .prop_map(|(r, terms)| QuarterLaurent::from_terms(terms.into_iter().map(|(k, c)| (4 * k + r, c))))
}

fn annulus_point() -> impl Strategy<Value = Complex64> {
    (0.5f64..2.0, -3.1f64..3.1).prop_map(|(r, th)| Complex64::from_polar(r, th))
}

proptest! {
    #[test]
    fn bivariate_ring_axioms(p in bivar(), q in bivar(), r in bivar()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn laurent_ring_axioms(p in laurent(), q in laurent(), r in laurent()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn jones_substitution_is_a_ring_homomorphism(p in bivar(), q in bivar()) {
        prop_assert_eq!((&p * &q).substitute_jones(), &p.substitute_jones() * &q.substitute_jones());
        prop_assert_eq!((&p + &q).substitute_jones(), &p.substitute_jones() + &q.substitute_jones());
    }

    #[test]
    fn strip_monomial_round_trip(v in integral_laurent()) {
        prop_assume!(!v.is_zero());
        let (lo, poly) = v.strip_monomial().unwrap();
        prop_assert_eq!(QuarterLaurent::from_shifted(lo, &poly), v.clone());
        prop_assert!(poly.coeff(0) != 0.into());
    }

    #[test]
    fn exact_division_inverts_multiplication(p in laurent(), q in laurent()) {
        prop_assume!(!q.is_zero());
        let prod = &p * &q;
        prop_assert_eq!(prod.exact_divide(&q).unwrap(), p);
    }

    #[test]
    fn evaluation_is_multiplicative(p in laurent(), q in laurent(), t in annulus_point()) {
        let lhs = (&p * &q).eval(t).unwrap();
        let rhs = p.eval(t).unwrap() * q.eval(t).unwrap();
        let scale = lhs.norm().max(rhs.norm()).max(1.0);
        prop_assert!((lhs - rhs).norm() <= 1e-10 * scale, "{lhs} vs {rhs}");
    }

    #[test]
    fn json_round_trips(p in bivar(), v in laurent()) {
        let text = serde_json::to_string(&p.to_json_value()).unwrap();
        let back = BivarPoly::from_json_value(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, p);
        let text = serde_json::to_string(&v.to_json_value()).unwrap();
        let back = QuarterLaurent::from_json_value(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn mirror_is_an_involution(v in laurent()) {
        prop_assert_eq!(v.mirror().mirror(), v);
    }
}

#[test]
fn univariate_power_matches_repeated_product() {
    let q = &IntPoly::var() - &IntPoly::one();
    let mut acc = IntPoly::one();
    for k in 0..12 {
        assert_eq!(q.pow(k), acc);
        acc = &acc * &q;
    }
}
