use lagsum_core::numkernel::{factorial, gamma_ratio, ln_gamma, pochhammer};
use lagsum_core::{DoubleDouble, PrecisionContext, Real};
use proptest::prelude::*;

fn ulps(a: f64, b: f64) -> f64 {
    (a - b).abs() / (f64::EPSILON * b.abs())
}

proptest! {
    #[test]
    fn pochhammer_splits(k in 1u32..=5120, m in 0usize..=50, n in 0usize..=50) {
        // A dyadic a keeps a + m exact.
        let a = f64::from(k) / 1024.0;
        let whole = pochhammer(a, m + n);
        let split = pochhammer(a, m) * pochhammer(a + m as f64, n);
        prop_assert!(ulps(split, whole) <= 8.0, "{} ulp", ulps(split, whole));
    }

    #[test]
    fn gamma_ratio_reciprocity(a in -0.9f64..4.0, b in -0.9f64..4.0, z in 1.0f64..50.0) {
        let product = gamma_ratio(a, b, z).unwrap() * gamma_ratio(b, a, z).unwrap();
        prop_assert!(ulps(product, 1.0) <= 8.0, "{} ulp", ulps(product, 1.0));
    }
}

#[test]
fn gamma_ratio_approaches_power_law() {
    for (a, b) in [(0.5, 0.0), (2.25, -0.5), (-0.3, 1.7)] {
        let dev = |z: f64| (gamma_ratio(a, b, z).unwrap() / z.powf(a - b) - 1.0).abs();
        let c = (dev(1e3) * 1e3).max(dev(1e4) * 1e4);
        for z in [1e2, 1e3, 1e4] {
            assert!(dev(z) <= 1.05 * c / z, "a={a} b={b} z={z}: {} vs {}", dev(z), c / z);
        }
        // The O(1/z) coefficient is (a-b)(a+b-1)/2.
        let expected = ((a - b) * (a + b - 1.0) / 2.0).abs();
        assert!((c - expected).abs() <= 0.01 * expected.max(0.1), "C = {c}, expected {expected}");
    }
}

#[test]
fn pochhammer_terminates_at_nonpositive_integers() {
    assert_eq!(pochhammer(-3.0_f64, 4), 0.0);
    assert_eq!(pochhammer(-3.0_f64, 3), -6.0);
    assert_eq!(pochhammer(DoubleDouble::from(-0.5), 0), DoubleDouble::ONE);
}

#[test]
fn ln_gamma_domain_and_values() {
    assert!(ln_gamma(0.0_f64).is_err());
    assert!(ln_gamma(-1.5_f64).is_err());
    assert!(ln_gamma(f64::NAN).is_err());
    let sqrt_pi_ln = 0.5 * std::f64::consts::PI.ln();
    assert!((ln_gamma(0.5_f64).unwrap() - sqrt_pi_ln).abs() < 1e-15);
    let dd = ln_gamma(DoubleDouble::from(0.5)).unwrap();
    let want = DoubleDouble::PI.ln() / DoubleDouble::from(2.0);
    assert!((dd - want).abs().to_f64() < 1e-30);
}

#[test]
fn factorial_is_exact_in_both_backends() {
    assert_eq!(factorial::<f64>(20), 2_432_902_008_176_640_000.0);
    let f25: DoubleDouble = factorial(25);
    let exact = 15_511_210_043_330_985_984_000_000_u128;
    let hi = f25.hi() as u128;
    let lo = f25.lo();
    assert_eq!((hi as i128 + lo as i128) as u128, exact);
}

#[test]
fn precision_context_rules() {
    assert!(PrecisionContext::new(14).is_err());
    let ctx = PrecisionContext::new(30).unwrap();
    assert_eq!(ctx.effective_digits::<f64>(), 16);
    assert_eq!(ctx.effective_digits::<DoubleDouble>(), 30);
    assert_eq!(PrecisionContext::hardware().tolerance::<f64>(4), 1e-12);
    assert!(PrecisionContext::hardware().overflows(1e301_f64));
    assert!(!PrecisionContext::hardware().overflows(1e299_f64));
}
