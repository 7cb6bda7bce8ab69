use mzv_core::algebra::expr::{phi_even, zeta_even};
use mzv_core::algebra::rational::ratio;
use mzv_core::identities::numeric_value;
use mzv_core::numeric::EvalConfig;
use mzv_core::{Rational, ZetaExpression, ZetaGenerator};
use proptest::prelude::*;

fn generator(i: u8) -> ZetaGenerator {
    match i % 6 {
        0 => ZetaGenerator::odd_zeta(3).unwrap(),
        1 => ZetaGenerator::odd_zeta(5).unwrap(),
        2 => ZetaGenerator::double(2, 3).unwrap(),
        3 => ZetaGenerator::double_sharp(2, 2).unwrap(),
        4 => ZetaGenerator::triple(1, 2, 3).unwrap(),
        _ => ZetaGenerator::double(1, 5).unwrap(),
    }
}

fn expression() -> impl Strategy<Value = ZetaExpression> {
    prop::collection::vec((-9i64..=9, 1i64..=6, 0u32..=3, prop::option::of(0u8..6), prop::option::of(0u8..6)), 0..4)
        .prop_map(|terms| {
            let mut e = ZetaExpression::zero();
            for (p, q, k, g1, g2) in terms {
                let mut t = ZetaExpression::pi_multiple(ratio(p, q), k);
                for g in [g1, g2].into_iter().flatten() {
                    t = &t * &ZetaExpression::generator(generator(g));
                }
                e += &t;
            }
            e
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in expression(), b in expression(), c in expression()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &ZetaExpression::one(), a.clone());
    }

    #[test]
    fn text_round_trip(a in expression()) {
        let text = a.to_string();
        let back: ZetaExpression = text.parse().unwrap();
        prop_assert_eq!(back, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn evaluation_is_a_homomorphism(a in expression(), b in expression()) {
        let cfg = EvalConfig::default();
        let va = numeric_value(&a, &cfg).unwrap();
        let vb = numeric_value(&b, &cfg).unwrap();
        let prod = numeric_value(&(&a * &b), &cfg).unwrap();
        let sum = numeric_value(&(&a + &b), &cfg).unwrap();
        prop_assert!(prod.sub(&va.mul(&vb)).is_zero_within_bound());
        prop_assert!(sum.sub(&va.add(&vb)).is_zero_within_bound());
    }
}

#[test]
fn even_zeta_values_normalize_to_pi_powers() {
    for m in (2..=40).step_by(2) {
        let (c, k) = zeta_even(m).unwrap().as_pi_multiple().expect("single pi power");
        assert_eq!(k, m);
        assert!(c > ratio(0, 1), "zeta({m})");
        assert_eq!(ZetaExpression::zeta(m).unwrap(), zeta_even(m).unwrap());
    }
    assert_eq!(zeta_even(0).unwrap(), ZetaExpression::constant(ratio(-1, 2)));
    assert_eq!(phi_even(0).unwrap(), ZetaExpression::constant(ratio(-1, 2)));
    assert_eq!(zeta_even(2).unwrap(), ZetaExpression::pi_multiple(ratio(1, 6), 2));
    assert_eq!(zeta_even(4).unwrap(), ZetaExpression::pi_multiple(ratio(1, 90), 4));
    assert!(zeta_even(3).is_err());
}

#[test]
fn generators_reject_bad_arguments() {
    assert!(ZetaGenerator::odd_zeta(4).is_err());
    assert!(ZetaGenerator::odd_zeta(1).is_err());
    assert!(ZetaGenerator::double(3, 1).is_err());
    assert!(ZetaExpression::zeta(1).is_err());
}

#[test]
fn products_of_generators() {
    let e = &ZetaExpression::zeta(3).unwrap() * &ZetaExpression::zeta(5).unwrap();
    assert_eq!(e.len(), 1);
    let (m, c) = e.terms().next().unwrap();
    assert_eq!(c, &Rational::from_integer(1.into()));
    assert_eq!(m.factors, vec![ZetaGenerator::odd_zeta(3).unwrap(), ZetaGenerator::odd_zeta(5).unwrap()]);
}

#[test]
fn serialization_format() {
    let e: ZetaExpression = "3*pi^2*zeta(3) - 11/2*zeta(5)".parse().unwrap();
    assert_eq!(e.scale(&ratio(1, 6)).to_string(), "1/2*pi^2*zeta(3) - 11/12*zeta(5)");
    let f: ZetaExpression = "ez2s(2,3) + 2*ez3(1,2,3) - ez3s(2,2,2) + ez2(1,5)^2".parse().unwrap();
    assert_eq!(f.to_string().parse::<ZetaExpression>().unwrap(), f);
    // Even zeta values are not generators; they are written as pi powers.
    assert!("zeta(4)".parse::<ZetaExpression>().is_err());
    assert!("2*foo(3)".parse::<ZetaExpression>().is_err());
}

#[test]
fn numeric_value_of_known_combination() {
    let cfg = EvalConfig::default();
    // zeta(3) zeta(5) - zeta_2(3,5) - zeta_2(5,3) - zeta(8) = 0
    let e: ZetaExpression = "zeta(3)*zeta(5) - ez2(3,5) - ez2(5,3) - 1/9450*pi^8".parse().unwrap();
    let v = numeric_value(&e, &cfg).unwrap();
    assert!(v.is_zero_within_bound() && v.error_bound() < 1e-60);
}
