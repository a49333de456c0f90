use lagsum_core::families::{CoefficientFamily, FamilyKind, RegimeLabel};
use lagsum_core::laguerre::{FiniteLaguerreSum, LaguerreParams};
use lagsum_core::numkernel::ln_gamma;
use lagsum_core::PrecisionContext;
use proptest::prelude::*;

fn ctx() -> PrecisionContext {
    PrecisionContext::hardware()
}

fn truncated(family: &CoefficientFamily<f64>, terms: usize, z: f64) -> f64 {
    let params = LaguerreParams::new(family.alpha()).unwrap();
    FiniteLaguerreSum::new(params, family.coefficients(terms)).unwrap().eval(z)
}

fn assert_converges(family: CoefficientFamily<f64>, terms: usize, tol: f64) {
    for z in [0.5, 1.0, 2.0] {
        let exact = family.closed_form(z, &ctx()).unwrap().unwrap();
        let approx = truncated(&family, terms, z);
        assert!((approx - exact).abs() <= tol, "{:?} z={z}: {approx} vs {exact}", family.kind());
    }
}

#[test]
fn truncated_sums_reach_closed_forms() {
    assert_converges(CoefficientFamily::alt_power(0.5, 1.0).unwrap(), 401, 1e-6);
    for alpha in [0.0, 1.0] {
        assert_converges(CoefficientFamily::alt_power(1.5, alpha).unwrap(), 401, 1e-6);
        assert_converges(CoefficientFamily::geometric(0.3, alpha).unwrap(), 60, 1e-10);
        assert_converges(CoefficientFamily::factorial(1.0, alpha).unwrap(), 60, 1e-10);
        assert_converges(CoefficientFamily::factorial(-2.0, alpha).unwrap(), 60, 1e-10);
        assert_converges(CoefficientFamily::geometric_power(0.5, 0.3, alpha).unwrap(), 60, 1e-10);
        assert_converges(CoefficientFamily::hyp_ratio(1.5, 7.0 / 3.0, 5.25, alpha).unwrap(), 4001, 1e-8);
    }
}

// At rho = 0.5, alpha = 0 the series itself is still 3.4e-6 away at N = 400.
// The error oscillates with N, so compare its envelope over windows.
#[test]
fn slow_alt_power_truncations_keep_improving() {
    let family = CoefficientFamily::alt_power(0.5, 0.0).unwrap();
    for z in [0.5, 1.0, 2.0] {
        let exact = family.closed_form(z, &ctx()).unwrap().unwrap();
        let envelope = |centre: usize| {
            (centre - 10..=centre + 10).map(|n| (truncated(&family, n + 1, z) - exact).abs()).fold(0.0, f64::max)
        };
        let errors = [envelope(100), envelope(200), envelope(400)];
        assert!(errors[0] > errors[1] && errors[1] > errors[2], "z={z}: {errors:?}");
        assert!(errors[2] < 5e-6, "z={z}: {errors:?}");
    }
}

#[test]
fn power_sums_approach_z_to_rho() {
    let family = CoefficientFamily::power(0.5, 0.0).unwrap();
    for z in [0.5, 1.0, 2.0] {
        let exact = family.closed_form(z, &ctx()).unwrap().unwrap();
        assert_eq!(exact, z.sqrt());
        let coarse = (truncated(&family, 100, z) - exact).abs();
        let fine = (truncated(&family, 400, z) - exact).abs();
        assert!(fine < coarse && fine < 1e-2, "z={z}: {coarse} -> {fine}");
    }
}

#[test]
fn geometric_power_tends_to_power_as_s_approaches_minus_one() {
    let rho = 0.5;
    let deviation = |delta: f64| {
        let family = CoefficientFamily::geometric_power(rho, -1.0 + delta, 0.0).unwrap();
        (family.closed_form(1.0, &ctx()).unwrap().unwrap() - 1.0).abs()
    };
    let devs: Vec<f64> = [1e-2, 1e-3, 1e-4].into_iter().map(deviation).collect();
    assert!(devs[0] > devs[1] && devs[1] > devs[2], "{devs:?}");
    assert!(devs[2] < 1e-3, "{devs:?}");
}

proptest! {
    #[test]
    fn alt_power_is_signed_power(rho in -0.9f64..3.0, alpha in -0.9f64..3.0, n in 0usize..300) {
        prop_assume!(alpha + 2.0 * rho > -1.0 && rho.fract() != 0.0);
        let power = CoefficientFamily::power(rho, alpha).unwrap();
        let alt = CoefficientFamily::alt_power(rho, alpha).unwrap();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert_eq!(alt.coefficient(n), sign * power.coefficient(n));
    }
}

#[test]
fn power_coefficients_decay_algebraically() {
    for (rho, alpha) in [(0.5, 0.0), (0.5, 1.0), (-0.3, 0.0), (1.5, 2.5)] {
        let family = CoefficientFamily::power(rho, alpha).unwrap();
        let scaled = |n: usize| family.coefficient(n).abs() * (n as f64).powf(alpha + rho + 1.0);
        let ratio = scaled(200) / scaled(400);
        assert!((ratio - 1.0).abs() <= 0.05, "rho={rho} alpha={alpha}: {ratio}");
    }
}

#[test]
fn coefficient_examples() {
    assert_eq!(CoefficientFamily::geometric(0.5, 0.0).unwrap().coefficient(3), 0.125);
    let half_sqrt_pi = std::f64::consts::PI.sqrt() / 2.0;
    let power = CoefficientFamily::power(0.5, 0.0).unwrap();
    assert!((power.coefficient(0) - half_sqrt_pi).abs() < 1e-15);
    let alt = CoefficientFamily::alt_power(0.5, 0.0).unwrap();
    assert!((alt.coefficient(1) - half_sqrt_pi / 2.0).abs() < 1e-15);
}

#[test]
fn coefficients_agree_with_single_lookups() {
    let families = [
        CoefficientFamily::factorial(1.5, 0.5).unwrap(),
        CoefficientFamily::hyp_ratio(1.5, 7.0 / 3.0, 5.25, 0.0).unwrap(),
        CoefficientFamily::hyp_ratio_general(vec![1.5, 7.0 / 3.0, 2.2], vec![22.0 / 7.0, 32.0 / 11.0], 0.0).unwrap(),
        CoefficientFamily::exp_power(0.5, 0.25, 0.0).unwrap(),
        CoefficientFamily::geometric_power(0.5, -0.4, 1.0).unwrap(),
    ];
    for family in &families {
        let all = family.coefficients(40);
        for (n, c) in all.iter().enumerate() {
            let single = family.coefficient(n);
            assert!((c - single).abs() <= 1e-13 * c.abs().max(1e-300), "{:?} n={n}", family.kind());
        }
    }
}

#[test]
fn exp_power_without_damping_is_power() {
    let exp = CoefficientFamily::exp_power(0.5, 0.0, 1.0).unwrap();
    let power = CoefficientFamily::power(0.5, 1.0).unwrap();
    for n in [0, 1, 5, 50, 200] {
        let (a, b) = (exp.coefficient(n), power.coefficient(n));
        assert!((a - b).abs() <= 1e-12 * b.abs(), "n={n}: {a} vs {b}");
    }
}

#[test]
fn expected_regimes() {
    use RegimeLabel::*;
    let cases = [
        (CoefficientFamily::power(0.5, 0.0).unwrap(), AlgebraicMonotone),
        (CoefficientFamily::exp_power(0.5, 0.25, 0.0).unwrap(), AlgebraicMonotone),
        (CoefficientFamily::geometric(0.3, 0.0).unwrap(), Exponential),
        (CoefficientFamily::geometric_power(0.5, 0.5, 0.0).unwrap(), Exponential),
        (CoefficientFamily::alt_power(0.5, 0.0).unwrap(), AlgebraicAlternating),
        (CoefficientFamily::hyp_ratio(1.5, 7.0 / 3.0, 5.25, 0.0).unwrap(), AlgebraicAlternating),
        (CoefficientFamily::factorial(1.0, 0.0).unwrap(), Factorial),
    ];
    for (family, label) in cases {
        assert_eq!(family.expected_regime(), label, "{:?}", family.kind());
    }
}

#[test]
fn closed_form_examples() {
    let geometric = CoefficientFamily::geometric(0.3, 0.0).unwrap();
    let want = (0.3_f64 / -0.7).exp() / 0.7;
    assert!((geometric.closed_form(1.0, &ctx()).unwrap().unwrap() - want).abs() < 1e-15);
    for (rho, alpha) in [(0.5, 0.0), (-0.3, 1.0), (2.5, 0.5)] {
        let alt = CoefficientFamily::alt_power(rho, alpha).unwrap();
        let at_zero = 2f64.powf(rho) * (ln_gamma(rho + alpha + 1.0).unwrap() - ln_gamma(alpha + 1.0).unwrap()).exp();
        let got = alt.closed_form(0.0, &ctx()).unwrap().unwrap();
        assert!((got - at_zero).abs() <= 1e-14 * at_zero);
    }
    let factorial = CoefficientFamily::factorial(1.3, 0.0).unwrap();
    assert!((factorial.closed_form(0.0, &ctx()).unwrap().unwrap() - 1.3f64.exp()).abs() < 1e-14);
    let general = CoefficientFamily::hyp_ratio_general(vec![1.0, 2.0, 3.0], vec![4.0, 5.0], 0.0).unwrap();
    assert_eq!(general.closed_form(1.0, &ctx()).unwrap(), None);
    assert!(!CoefficientFamily::exp_power(0.5, 0.25, 0.0).unwrap().has_closed_form());
}

#[test]
fn hyp_ratio_general_reduces_to_hyp_ratio() {
    let general = CoefficientFamily::hyp_ratio_general(vec![1.5, 7.0 / 3.0], vec![5.25], 0.5).unwrap();
    let plain = CoefficientFamily::hyp_ratio(1.5, 7.0 / 3.0, 5.25, 0.5).unwrap();
    for z in [0.0, 0.7, 3.0] {
        let a = general.closed_form(z, &ctx()).unwrap().unwrap();
        let b = plain.closed_form(z, &ctx()).unwrap().unwrap();
        assert!((a - b).abs() <= 1e-14 * b.abs());
    }
    assert!(matches!(general.kind(), FamilyKind::HypRatioGeneral { .. }));
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(CoefficientFamily::power(0.5, -1.0).is_err());
    assert!(CoefficientFamily::power(2.0, 0.0).is_err());
    assert!(CoefficientFamily::geometric(1.0, 0.0).is_err());
    assert!(CoefficientFamily::geometric_power(0.5, -1.0, 0.0).is_err());
    assert!(CoefficientFamily::factorial(0.0, 0.0).is_err());
    assert!(CoefficientFamily::hyp_ratio(1.0, 1.0, -2.0, 0.0).is_err());
    assert!(CoefficientFamily::hyp_ratio_general(vec![1.0], vec![1.0], 0.0).is_err());
    assert!(CoefficientFamily::exp_power(0.5, 0.5, 0.0).is_err());
}
