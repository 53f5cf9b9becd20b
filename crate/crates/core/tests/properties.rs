use a2zeta_core::algebra::{det_bareiss, det_interpolate, det_modular, reverse_transform, PolyMatrix, Polynomial};
use a2zeta_core::builders::q2_z3_complex;
use a2zeta_core::complex::{gauge_transform, Gauge};
use a2zeta_core::lfun::compute_l;
use a2zeta_core::rep::{natural_representation, regular_representation};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-9i64..=9, 0..=max_deg + 1).prop_map(|c| Polynomial::from_ints(&c))
}

fn rat_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-20i64..=20, 1i64..=6), 0..5).prop_map(|c| {
        Polynomial::from_coeffs(c.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())).collect())
    })
}

fn matrix(n: usize, max_deg: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(poly(max_deg), n * n).prop_map(move |es| PolyMatrix::from_fn(n, n, |i, j| es[i * n + j].clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in rat_poly(), b in rat_poly(), c in rat_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
    }

    #[test]
    fn division_identity(a in rat_poly(), b in rat_poly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn string_round_trip(a in rat_poly()) {
        prop_assert_eq!(Polynomial::parse_strings(&a.to_strings()).unwrap(), a);
    }

    #[test]
    fn reversal_twice_scales_by_s_to_the_d(a in poly(5), s in 1i64..5) {
        let s6 = BigRational::from_integer(BigInt::from(s.pow(6)));
        let s = BigRational::from_integer(BigInt::from(s));
        let r = reverse_transform(&a, &s, 6).unwrap();
        let back = reverse_transform(&r, &s, 6).unwrap();
        prop_assert_eq!(back, a.scale(&s6));
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(3, 2), b in matrix(3, 2)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(det_bareiss(&ab).unwrap(), &det_bareiss(&a).unwrap() * &det_bareiss(&b).unwrap());
    }

    #[test]
    fn determinant_engines_agree(a in matrix(5, 2)) {
        let expected = det_bareiss(&a).unwrap();
        prop_assert_eq!(det_interpolate(&a).unwrap(), expected.clone());
        prop_assert_eq!(det_modular(&a).unwrap(), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn gauge_invariance(seed in any::<u64>()) {
        let c = q2_z3_complex();
        let rho = natural_representation(c.group());
        let moved = gauge_transform(&c, &Gauge::random(&c, seed)).unwrap();
        prop_assert_eq!(compute_l(&moved, &rho).unwrap(), compute_l(&c, &rho).unwrap());
    }
}

#[test]
fn dual_is_an_involution() {
    let c = q2_z3_complex();
    for rho in [natural_representation(c.group()), regular_representation(c.group())] {
        let back = rho.dual().dual();
        for g in c.group().elements() {
            assert_eq!(back.matrix(g), rho.matrix(g));
        }
    }
}
