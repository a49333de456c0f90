//! Generalized hypergeometric series: partial sums of the model problems,
//! `₁F₀` and `₂F₁` continuations, and reference evaluators for `₀F₁`, `₁F₁`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::numkernel::{gamma_ratio, real, PrecisionContext, Real};
use crate::seqtransform::InputSequence;

const MAX_TERMS: usize = 1_000_000;

/// `Σ_k Π(a_i+ν)_k / (Π(b_j+ν)_k k!) z^k`, with `p+1` numerator and `p`
/// denominator parameters all shifted by `ν`.
#[derive(Clone, Debug, PartialEq)]
pub struct HypSeriesSpec<T> {
    numerators: Vec<T>,
    denominators: Vec<T>,
    argument: T,
    shift: usize,
}

impl<T: Real> HypSeriesSpec<T> {
    pub fn new(numerators: Vec<T>, denominators: Vec<T>, argument: T, shift: usize) -> Result<Self> {
        if numerators.len() != denominators.len() + 1 {
            return Err(Error::InvalidParameter("need exactly one more numerator than denominator parameter"));
        }
        let nu: T = real(shift);
        if denominators.iter().any(|&b| is_nonpositive_integer(b + nu)) {
            return Err(Error::Pole("a shifted denominator parameter is a nonpositive integer"));
        }
        if numerators.iter().chain(&denominators).chain([&argument]).any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter("parameters must be finite"));
        }
        Ok(Self { numerators, denominators, argument, shift })
    }

    /// `p` in `ₚ₊₁Fₚ`.
    pub fn p(&self) -> usize {
        self.denominators.len()
    }

    pub fn numerators(&self) -> &[T] {
        &self.numerators
    }

    pub fn denominators(&self) -> &[T] {
        &self.denominators
    }

    pub fn argument(&self) -> T {
        self.argument
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    /// The same series with a different shift.
    pub fn with_shift(&self, shift: usize) -> Result<Self> {
        Self::new(self.numerators.clone(), self.denominators.clone(), self.argument, shift)
    }

    /// Terms `t_0 ... t_{count-1}`, by ratio updates.
    pub fn terms(&self, count: usize) -> Vec<T> {
        let nu: T = real(self.shift);
        let mut out = Vec::with_capacity(count);
        let mut term = T::one();
        for k in 0..count {
            out.push(term);
            let kf: T = real(k);
            let mut ratio = self.argument / real(k + 1);
            for &a in &self.numerators {
                ratio *= a + nu + kf;
            }
            for &b in &self.denominators {
                ratio /= b + nu + kf;
            }
            term *= ratio;
        }
        out
    }

    /// Partial sums `s_0 ... s_{count-1}`.
    pub fn partial_sums(&self, count: usize) -> Result<InputSequence<T>> {
        if count == 0 {
            return Err(Error::EmptySequence);
        }
        let mut acc = T::zero();
        let sums = self
            .terms(count)
            .into_iter()
            .map(|t| {
                acc += t;
                acc
            })
            .collect();
        InputSequence::new(sums)
    }
}

fn is_nonpositive_integer<T: Real>(x: T) -> bool {
    x <= T::zero() && x == x.floor()
}

/// Sums a convergent series until two consecutive terms fall below
/// `10^-(d+2)` relative to the running sum.
fn direct_sum<T: Real>(numerators: &[T], denominators: &[T], z: T, ctx: &PrecisionContext) -> Result<T> {
    let d = ctx.effective_digits::<T>() as i32;
    let tol = T::from_f64(10.0).powi(-(d + 2));
    let mut term = T::one();
    let mut acc = T::one();
    let mut small = 0;
    for k in 0..MAX_TERMS {
        let kf: T = real(k);
        let mut ratio = z / real(k + 1);
        for &a in numerators {
            ratio *= a + kf;
        }
        for &b in denominators {
            ratio /= b + kf;
        }
        term *= ratio;
        acc += term;
        if !acc.is_finite() {
            return Err(Error::Domain("series overflowed"));
        }
        if term.abs() <= tol * acc.abs() {
            small += 1;
            if small == 2 {
                return Ok(acc);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::OutOfScope("series did not converge within the term limit"))
}

pub(crate) fn direct_2f1<T: Real>(a: T, b: T, c: T, z: T, ctx: &PrecisionContext) -> Result<T> {
    direct_sum(&[a, b], &[c], z, ctx)
}

/// Binomial series `₁F₀(a; z) = (1-z)^{-a}`.
pub fn binomial_1f0<T: Real>(a: T, z: T) -> Result<T> {
    let base = T::one() - z;
    if base == T::zero() {
        return Err(Error::Pole("1F0 has a pole at z = 1"));
    }
    if a == a.floor() && a.abs() < T::from_f64(2_147_483_647.0) {
        return Ok(base.powi(-(a.to_f64() as i32)));
    }
    if base < T::zero() {
        return Err(Error::OutOfScope("1F0 with z > 1 and non-integer a is complex"));
    }
    Ok(base.powf(-a))
}

/// Route used to reach `₂F₁(a, b; c; -1)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ContinuationRoute {
    /// Sum the series at `-1` itself; only when it converges.
    Direct,
    /// `(1-z)^{c-a-b} ₂F₁(c-a, c-b; c; z)`, summed at `z = -1`.
    Ltr0,
    /// `2^{-a} ₂F₁(a, c-b; c; 1/2)`.
    #[default]
    Ltr1,
    /// `2^{-b} ₂F₁(c-a, b; c; 1/2)`.
    Ltr2,
}

fn check_c<T: Real>(c: T) -> Result<()> {
    if is_nonpositive_integer(c) {
        return Err(Error::Pole("c is a nonpositive integer"));
    }
    Ok(())
}

/// Gauss `₂F₁(a, b; c; z)` for `z ∈ [-1, 1/2]`.
///
/// `|z| <= 1/2` is summed directly; `z ∈ [-1, -1/2)` goes through
/// `(1-z)^{-a} ₂F₁(a, c-b; c; z/(z-1))`.
pub fn gauss_2f1_at<T: Real>(a: T, b: T, c: T, z: T, ctx: &PrecisionContext) -> Result<T> {
    check_c(c)?;
    let half = T::from_f64(0.5);
    if z.abs() <= half {
        return direct_sum(&[a, b], &[c], z, ctx);
    }
    if z >= -T::one() && z < -half {
        let w = z / (z - T::one());
        let inner = direct_sum(&[a, c - b], &[c], w, ctx)?;
        return Ok((T::one() - z).powf(-a) * inner);
    }
    Err(Error::OutOfScope("2F1 is only evaluated for -1 <= z <= 1/2"))
}

/// `₂F₁(a, b; c; -1)` through a chosen route.
pub fn gauss_2f1_minus_one<T: Real>(a: T, b: T, c: T, route: ContinuationRoute, ctx: &PrecisionContext) -> Result<T> {
    check_c(c)?;
    let one = T::one();
    let two = T::from_f64(2.0);
    let half = T::from_f64(0.5);
    match route {
        ContinuationRoute::Direct => {
            if !(c - a - b > T::zero()) {
                return Err(Error::OutOfScope("the series at -1 diverges unless c > a + b"));
            }
            direct_sum(&[a, b], &[c], -one, ctx)
        }
        ContinuationRoute::Ltr0 => {
            if !(a + b - c > T::zero()) {
                return Err(Error::OutOfScope("the transformed series at -1 diverges unless a + b > c"));
            }
            Ok(two.powf(c - a - b) * direct_sum(&[c - a, c - b], &[c], -one, ctx)?)
        }
        ContinuationRoute::Ltr1 => Ok(two.powf(-a) * direct_sum(&[a, c - b], &[c], half, ctx)?),
        ContinuationRoute::Ltr2 => Ok(two.powf(-b) * direct_sum(&[c - a, b], &[c], half, ctx)?),
    }
}

/// Large-`ν` estimate of `₂F₁(a+ν, b+ν; c+ν; -1)` with up to three terms of
/// `2^{c-a-b-ν} Σ_n (-1)^n (c-a)_n (c-b)_n / ((c+ν)_n n!)`.
pub fn large_nu_2f1_estimate<T: Real>(a: T, b: T, c: T, nu: usize, terms: usize) -> Result<T> {
    if terms == 0 || terms > 3 {
        return Err(Error::InvalidParameter("between one and three terms are supported"));
    }
    let cn = c + real(nu);
    if is_nonpositive_integer(cn) {
        return Err(Error::Pole("c + nu is a nonpositive integer"));
    }
    let prefactor = T::from_f64(2.0).powf(c - a - b - real(nu));
    let mut term = T::one();
    let mut acc = T::one();
    for n in 0..terms - 1 {
        let nf: T = real(n);
        term *= -((c - a + nf) * (c - b + nf)) / ((cn + nf) * real(n + 1));
        acc += term;
    }
    Ok(prefactor * acc)
}

/// Confluent `₁F₁(a; b; z)` for `z <= 50`.
///
/// Negative arguments use Kummer's transformation `e^z ₁F₁(b-a; b; -z)`,
/// which avoids cancellation. Below `z = -600` the transformed sum would
/// overflow and the algebraic asymptotic expansion
/// `Γ(b)/Γ(b-a) (-z)^{-a} Σ_s (a)_s (a-b+1)_s / s! (-z)^{-s}` is used; it needs
/// `b > 0` and `b - a > 0`.
pub fn kummer_1f1<T: Real>(a: T, b: T, z: T, ctx: &PrecisionContext) -> Result<T> {
    if is_nonpositive_integer(b) {
        return Err(Error::Pole("b is a nonpositive integer"));
    }
    if z > T::from_f64(50.0) {
        return Err(Error::OutOfScope("1F1 is only evaluated for z <= 50"));
    }
    if z < -T::from_f64(50.0) && is_nonpositive_integer(a) {
        return Err(Error::OutOfScope("terminating 1F1 is only evaluated for |z| <= 50"));
    }
    if z < -T::from_f64(KUMMER_LIMIT) && !is_nonpositive_integer(b - a) {
        return kummer_asymptotic(a, b, -z, ctx);
    }
    if z < T::zero() && !is_nonpositive_integer(a) {
        return Ok(z.exp() * direct_sum(&[b - a], &[b], -z, ctx)?);
    }
    direct_sum(&[a], &[b], z, ctx)
}

const KUMMER_LIMIT: f64 = 600.0;

// ₁F₁(a; b; -y) for large y > 0; the exponentially small part is dropped.
fn kummer_asymptotic<T: Real>(a: T, b: T, y: T, ctx: &PrecisionContext) -> Result<T> {
    if !(b > T::zero() && b - a > T::zero()) {
        return Err(Error::OutOfScope("asymptotic 1F1 needs b > 0 and b - a > 0"));
    }
    let tol = ctx.tolerance::<T>(0) / T::from_f64(100.0);
    let c = a - b + T::one();
    let mut term = T::one();
    let mut acc = T::one();
    for s in 0..MAX_TERMS {
        let sf: T = real(s);
        let next = term * (a + sf) * (c + sf) / (real::<T>(s + 1) * y);
        if next.abs() <= tol * acc.abs() {
            return Ok(gamma_ratio(b, b - a, T::zero())? * y.powf(-a) * acc);
        }
        if next.abs() > term.abs() {
            break;
        }
        term = next;
        acc += term;
    }
    Err(Error::OutOfScope("asymptotic 1F1 expansion does not reach working precision"))
}

/// `₀F₁(; b; z)`.
pub fn bessel_0f1<T: Real>(b: T, z: T, ctx: &PrecisionContext) -> Result<T> {
    if is_nonpositive_integer(b) {
        return Err(Error::Pole("b is a nonpositive integer"));
    }
    direct_sum(&[], &[b], z, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ctx() -> PrecisionContext {
        PrecisionContext::hardware()
    }

    fn table_spec(shift: usize) -> HypSeriesSpec<f64> {
        HypSeriesSpec::new(vec![1.5, 7.0 / 3.0], vec![5.25], -1.0, shift).unwrap()
    }

    #[test]
    fn partial_sums_match_table_start() {
        let s = table_spec(0).partial_sums(3).unwrap();
        let s = s.elements();
        assert!((s[0] - 1.0).abs() < 1e-15);
        assert!((s[1] - 1.0 / 3.0).abs() < 1e-15);
        assert!((s[2] - 7.0 / 9.0).abs() < 1e-15);
        let s10 = table_spec(10).partial_sums(2).unwrap();
        assert!((s10.elements()[1] + 8.3005).abs() < 1e-4);
        assert_eq!(table_spec(3).partial_sums(1).unwrap().elements(), &[1.0]);
    }

    #[test]
    fn spec_validation() {
        assert!(HypSeriesSpec::new(vec![1.0_f64], vec![1.0], 0.5, 0).is_err());
        assert!(HypSeriesSpec::new(vec![1.0_f64, 1.0], vec![-3.0], 0.5, 2).is_err());
        assert!(HypSeriesSpec::new(vec![1.0_f64, 1.0], vec![-3.0], 0.5, 4).is_ok());
        assert!(table_spec(0).partial_sums(0).is_err());
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_1f0(1.0_f64, 0.5).unwrap(), 2.0);
        assert!((binomial_1f0(-0.5_f64 + 2.0, -1.0).unwrap() - 2f64.powf(-1.5)).abs() < 1e-15);
        assert_eq!(binomial_1f0(0.3_f64, 0.0).unwrap(), 1.0);
        assert!(matches!(binomial_1f0(0.3_f64, 1.0), Err(Error::Pole(_))));
        assert!(binomial_1f0(0.3_f64, 2.0).is_err());
        assert_eq!(binomial_1f0(2.0_f64, 3.0).unwrap(), 0.25);
    }

    #[test]
    fn gauss_examples() {
        let v = gauss_2f1_at(1.5_f64, 7.0 / 3.0, 5.25, -1.0, &ctx()).unwrap();
        assert!((v - 0.597_156_373_980_973).abs() < 1e-14);
        assert_eq!(gauss_2f1_at(1.5_f64, 2.0, 3.0, 0.0, &ctx()).unwrap(), 1.0);
        let ln2 = gauss_2f1_at(1.0_f64, 1.0, 2.0, -1.0, &ctx()).unwrap();
        assert!((ln2 - core::f64::consts::LN_2).abs() < 1e-15);
        assert!(gauss_2f1_at(1.0_f64, 1.0, 2.0, 0.9, &ctx()).is_err());
        assert!(gauss_2f1_at(1.0_f64, 1.0, -2.0, 0.1, &ctx()).is_err());
    }

    #[test]
    fn routes_agree_on_table_parameters() {
        let (a, b, c) = (1.5_f64, 7.0 / 3.0, 5.25);
        let one = gauss_2f1_minus_one(a, b, c, ContinuationRoute::Ltr1, &ctx()).unwrap();
        let two = gauss_2f1_minus_one(a, b, c, ContinuationRoute::Ltr2, &ctx()).unwrap();
        assert!((one - two).abs() < 1e-14);
        assert!(gauss_2f1_minus_one(a, b, c, ContinuationRoute::Ltr0, &ctx()).is_err());
    }

    #[test]
    fn large_nu_examples() {
        let (a, b, c) = (1.5_f64, 7.0 / 3.0, 5.25);
        assert_eq!(large_nu_2f1_estimate(a, b, c, 10, 1).unwrap(), 2f64.powf(c - a - b - 10.0));
        let same = large_nu_2f1_estimate(0.7_f64, 0.7, 0.7, 5, 2).unwrap();
        assert!((same - 2f64.powf(-0.7 - 5.0)).abs() < 1e-18);
        let est = large_nu_2f1_estimate(a, b, c, 10, 2).unwrap();
        let exact = gauss_2f1_at(a + 10.0, b + 10.0, c + 10.0, -1.0, &ctx()).unwrap();
        // The neglected term is still large at ν = 10 for these parameters.
        assert!(((est - exact) / exact).abs() < 0.5);
        let est40 = large_nu_2f1_estimate(a, b, c, 40, 2).unwrap();
        let exact40 = gauss_2f1_at(a + 40.0, b + 40.0, c + 40.0, -1.0, &ctx()).unwrap();
        assert!(((est40 - exact40) / exact40).abs() < 0.06);
        assert!(large_nu_2f1_estimate(a, b, c, 10, 4).is_err());
    }

    #[test]
    fn confluent_examples() {
        assert_eq!(kummer_1f1(0.3_f64, 1.7, 0.0, &ctx()).unwrap(), 1.0);
        assert_eq!(kummer_1f1(0.0_f64, 1.7, 3.0, &ctx()).unwrap(), 1.0);
        assert!((kummer_1f1(1.0_f64, 1.0, 1.0, &ctx()).unwrap() - core::f64::consts::E).abs() < 1e-15);
        let neg = kummer_1f1(1.0_f64, 1.0, -20.0, &ctx()).unwrap();
        assert!((neg / (-20f64).exp() - 1.0).abs() < 1e-14);
        assert!(kummer_1f1(1.0_f64, 1.0, 60.0, &ctx()).is_err());
    }

    #[test]
    fn confluent_asymptotic_meets_kummer_sum() {
        let (a, b, y) = (-0.5_f64, 1.0, 700.0);
        let summed = (-y).exp() * direct_sum(&[b - a], &[b], y, &ctx()).unwrap();
        let asymptotic = kummer_asymptotic(a, b, y, &ctx()).unwrap();
        assert!((summed / asymptotic - 1.0).abs() < 1e-12);
        // ₁F₁(-1/2; 1; -y) ~ Γ(1)/Γ(3/2) y^{1/2} for large y.
        let far = kummer_1f1(a, b, -1e6, &ctx()).unwrap();
        let lead = 1e3 / (core::f64::consts::PI.sqrt() / 2.0);
        assert!((far / lead - 1.0).abs() < 1e-6);
    }

    #[test]
    fn bessel_examples() {
        assert_eq!(bessel_0f1(2.0_f64, 0.0, &ctx()).unwrap(), 1.0);
        // ₀F₁(; 1/2; -x²/4) = cos x
        let v = bessel_0f1(0.5_f64, -0.25, &ctx()).unwrap();
        assert!((v - 1f64.cos()).abs() < 1e-15);
    }
}
