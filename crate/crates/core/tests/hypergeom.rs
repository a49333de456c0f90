use lagsum_core::hypergeom::{
    bessel_0f1, binomial_1f0, gauss_2f1_at, gauss_2f1_minus_one, kummer_1f1, large_nu_2f1_estimate, ContinuationRoute,
    HypSeriesSpec,
};
use lagsum_core::{DoubleDouble, PrecisionContext, Real};
use proptest::prelude::*;

fn ctx() -> PrecisionContext {
    PrecisionContext::hardware()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

fn minus_one(a: f64, b: f64, c: f64, route: ContinuationRoute) -> f64 {
    gauss_2f1_minus_one(a, b, c, route, &ctx()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn direct_matches_both_transformed_routes(a in 0.1f64..3.0, b in 0.1f64..3.0, gap in 3.0f64..8.0) {
        let c = a + b + gap;
        let direct = minus_one(a, b, c, ContinuationRoute::Direct);
        let tol = ctx().tolerance::<f64>(6);
        prop_assert!(rel(minus_one(a, b, c, ContinuationRoute::Ltr1), direct) < tol);
        prop_assert!(rel(minus_one(a, b, c, ContinuationRoute::Ltr2), direct) < tol);
    }

    #[test]
    fn transformed_routes_agree(a in 0.1f64..6.0, b in 0.1f64..6.0, c in 0.1f64..8.0) {
        let one = minus_one(a, b, c, ContinuationRoute::Ltr1);
        let two = minus_one(a, b, c, ContinuationRoute::Ltr2);
        prop_assert!((one - two).abs() <= ctx().tolerance::<f64>(6) * one.abs().max(two.abs()).max(1.0));
    }

    #[test]
    fn ltr0_matches_ltr1_for_shifted_parameters(a in 0.1f64..3.0, b in 0.1f64..3.0, c in 0.5f64..4.0, nu in 20usize..40) {
        let shift = nu as f64;
        let (a, b, c) = (a + shift, b + shift, c + shift);
        let zero = minus_one(a, b, c, ContinuationRoute::Ltr0);
        let one = minus_one(a, b, c, ContinuationRoute::Ltr1);
        prop_assert!(rel(zero, one) < ctx().tolerance::<f64>(6), "{} vs {}", zero, one);
    }

    #[test]
    fn terms_alternate_at_minus_one(
        num in prop::collection::vec(0.05f64..5.0, 1..4),
        extra in 0.05f64..5.0,
        nu in 0usize..12,
    ) {
        let p = num.len() - 1;
        let den: Vec<f64> = num.iter().take(p).map(|x| x + extra).collect();
        let spec = HypSeriesSpec::new(num, den, -1.0, nu).unwrap();
        for (k, t) in spec.terms(40).into_iter().enumerate() {
            prop_assert!(t != 0.0);
            prop_assert_eq!(t > 0.0, k % 2 == 0);
        }
    }
}

#[test]
fn large_nu_deviation_falls_like_inverse_square() {
    let (a, b, c) = (0.75, 0.5, 1.0);
    let deviation = |nu: usize| {
        let shift = nu as f64;
        let exact = minus_one(a + shift, b + shift, c + shift, ContinuationRoute::Ltr1);
        rel(large_nu_2f1_estimate(a, b, c, nu, 2).unwrap(), exact)
    };
    let ratio = deviation(20) / deviation(40);
    assert!((ratio - 4.0).abs() < 0.8, "ratio {ratio}");
}

#[test]
fn large_nu_estimate_at_table_parameters() {
    let (a, b, c) = (1.5, 7.0 / 3.0, 5.25);
    let exact = minus_one(a + 10.0, b + 10.0, c + 10.0, ContinuationRoute::Ltr1);
    let estimate = large_nu_2f1_estimate(a, b, c, 10, 2).unwrap();
    assert!(rel(estimate, exact) < 0.5);
    let leading = large_nu_2f1_estimate(a, b, c, 10, 1).unwrap();
    assert!(rel(leading, 2f64.powf(c - a - b - 10.0)) < 1e-15);
}

#[test]
fn large_nu_first_correction_vanishes_for_equal_parameters() {
    let e1 = large_nu_2f1_estimate(0.7, 0.7, 0.7, 5, 1).unwrap();
    let e3 = large_nu_2f1_estimate(0.7, 0.7, 0.7, 5, 3).unwrap();
    assert_eq!(e1, e3);
    assert!(rel(e1, 2f64.powf(-5.7)) < 1e-15);
    assert!(large_nu_2f1_estimate(0.7, 0.7, 0.7, 5, 4).is_err());
}

#[test]
fn gauss_examples() {
    let table = gauss_2f1_at(1.5, 7.0 / 3.0, 5.25, -1.0, &ctx()).unwrap();
    assert!(rel(table, 0.597156373980973) < 1e-14);
    assert_eq!(gauss_2f1_at(1.3, 2.1, 0.4, 0.0, &ctx()).unwrap(), 1.0);
    let ln2 = gauss_2f1_at(1.0, 1.0, 2.0, -1.0, &ctx()).unwrap();
    assert!(rel(ln2, core::f64::consts::LN_2) < 1e-15);
    assert!(gauss_2f1_at(1.0, 1.0, 2.0, 0.7, &ctx()).is_err());
    assert!(gauss_2f1_at(1.0, 1.0, -2.0, 0.3, &ctx()).is_err());
}

#[test]
fn gauss_table_value_in_double_double() {
    let hp = PrecisionContext::new(32).unwrap();
    let third = DoubleDouble::from_f64(7.0) / DoubleDouble::from_f64(3.0);
    let v = gauss_2f1_at(DoubleDouble::from_f64(1.5), third, DoubleDouble::from_f64(5.25), -DoubleDouble::one(), &hp)
        .unwrap();
    assert!((v.to_f64() - 0.597156373980973).abs() < 5e-16);
}

#[test]
fn binomial_examples() {
    assert_eq!(binomial_1f0(1.0, 0.5).unwrap(), 2.0);
    assert!(rel(binomial_1f0(-0.5 + 2.0, -1.0).unwrap(), 2f64.powf(-1.5)) < 1e-15);
    assert_eq!(binomial_1f0(2.7, 0.0).unwrap(), 1.0);
    assert!(binomial_1f0(1.0, 1.0).is_err());
}

#[test]
fn confluent_examples() {
    assert_eq!(kummer_1f1(1.3, 2.2, 0.0, &ctx()).unwrap(), 1.0);
    assert_eq!(kummer_1f1(0.0, 2.2, 7.0, &ctx()).unwrap(), 1.0);
    assert!(rel(kummer_1f1(1.0, 1.0, 1.0, &ctx()).unwrap(), core::f64::consts::E) < 1e-15);
    // ₁F₁(1; 2; z) = (e^z - 1)/z
    let z: f64 = -3.5;
    assert!(rel(kummer_1f1(1.0, 2.0, z, &ctx()).unwrap(), z.exp_m1() / z) < 1e-14);
    assert!(kummer_1f1(1.0, -1.0, 0.5, &ctx()).is_err());
    assert!(kummer_1f1(1.0, 2.0, 60.0, &ctx()).is_err());
}

#[test]
fn bessel_examples() {
    assert_eq!(bessel_0f1(1.7, 0.0, &ctx()).unwrap(), 1.0);
    // ₀F₁(1; -1/4) = J₀(1), ₀F₁(2; 1) = I₁(2)
    assert!(rel(bessel_0f1(1.0, -0.25, &ctx()).unwrap(), 0.765_197_686_557_966_6) < 1e-15);
    assert!(rel(bessel_0f1(2.0, 1.0, &ctx()).unwrap(), 1.590_636_854_637_329) < 1e-15);
    assert!(bessel_0f1(-3.0, 1.0, &ctx()).is_err());
}

#[test]
fn table_partial_sums() {
    let spec = HypSeriesSpec::new(vec![1.5, 7.0 / 3.0], vec![5.25], -1.0, 0).unwrap();
    let s = spec.partial_sums(3).unwrap();
    let expected = [1.0, 1.0 / 3.0, 7.0 / 9.0];
    for (x, e) in s.elements().iter().zip(expected) {
        assert!((x - e).abs() < 1e-15);
    }
    let shifted = spec.with_shift(10).unwrap().partial_sums(2).unwrap();
    assert!((shifted.elements()[1] + 8.3005).abs() < 5e-5);
    assert_eq!(spec.partial_sums(1).unwrap().elements(), &[1.0]);
    assert!(spec.partial_sums(0).is_err());
}

#[test]
fn spec_rejects_bad_shapes() {
    assert!(HypSeriesSpec::new(vec![1.0, 2.0], vec![], 0.5, 0).is_err());
    assert!(HypSeriesSpec::new(vec![1.0, 2.0], vec![-4.0], 0.5, 3).is_err());
    assert!(HypSeriesSpec::new(vec![1.0, 2.0], vec![-4.0], 0.5, 5).is_ok());
    assert!(HypSeriesSpec::new(vec![f64::NAN], vec![], 0.5, 0).is_err());
}
