use alloc::vec::Vec;

use super::{classify, AnalyticityVerdict, CoefficientSource, LaguerreSeries, Method};
use crate::error::{Error, Result};
use crate::laguerre::eval_polynomial;
use crate::numkernel::{factorial, real, PrecisionContext, Real};
use crate::seqtransform::{summate, InputSequence, SummationStatus};

/// How a power coefficient was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefficientStatus {
    /// The inner series converged (or was finite).
    ConvergedDirect,
    /// The inner series diverged and was summed stably.
    SummedDivergent,
    /// Neither: the value is not trustworthy.
    Failed,
}

/// One power-series coefficient `γ_ν`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaEntry<T> {
    pub nu: usize,
    pub value: T,
    pub status: CoefficientStatus,
    pub stability: T,
}

/// Power coefficients `γ_0 ... γ_max` with an optional classification.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeriesResult<T> {
    pub gammas: Vec<GammaEntry<T>>,
    pub verdict: Option<AnalyticityVerdict>,
    /// False as soon as one coefficient failed.
    pub exists: bool,
}

impl<T: Real> PowerSeriesResult<T> {
    /// `Σ γ_ν z^ν` over the computed coefficients.
    pub fn eval(&self, z: T) -> T {
        let c: Vec<T> = self.gammas.iter().map(|g| g.value).collect();
        eval_polynomial(&c, z)
    }
}

/// Terms `((α+ν+1)_μ/μ!) λ_{μ+ν}` of the inner series, `μ < budget`.
pub fn inner_terms<T: Real>(series: &LaguerreSeries<T>, nu: usize, budget: usize) -> Result<Vec<T>> {
    let lambda = series.coefficients(nu + budget)?;
    Ok(terms_from(&lambda, series.alpha(), nu, budget))
}

fn terms_from<T: Real>(lambda: &[T], alpha: T, nu: usize, budget: usize) -> Vec<T> {
    let base = alpha + real(nu + 1);
    let mut w = T::one();
    let mut out = Vec::with_capacity(budget);
    for mu in 0..budget {
        if mu > 0 {
            w *= (base + real(mu - 1)) / real(mu);
        }
        out.push(w * lambda[mu + nu]);
    }
    out
}

// (-1)^ν / ν!
fn prefactor<T: Real>(nu: usize) -> T {
    let f: T = factorial(nu);
    if nu.is_multiple_of(2) {
        T::one() / f
    } else {
        -T::one() / f
    }
}

// Slope of ln|t_μ| against ln μ over the last quarter of the terms, if all of
// them share one sign.
fn monotone_tail_slope<T: Real>(terms: &[T]) -> Option<f64> {
    let len = terms.len();
    let start = (len - (len / 4).max(4).min(len)).max(1);
    let tail = &terms[start..];
    if tail.len() < 3 || tail.iter().any(|t| *t == T::zero()) {
        return None;
    }
    let positive = tail[0] > T::zero();
    if tail.iter().any(|t| (*t > T::zero()) != positive) {
        return None;
    }
    let pts: Vec<(f64, f64)> = tail
        .iter()
        .enumerate()
        .map(|(i, t)| (libm::log((start + i) as f64), libm::log(libm::fabs(t.to_f64()))))
        .collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

fn gamma_from<T: Real>(
    lambda: &[T],
    alpha: T,
    zero_padded: bool,
    nu: usize,
    budget: usize,
    method: Method,
    ctx: &PrecisionContext,
) -> Result<GammaEntry<T>> {
    let pre = prefactor::<T>(nu);
    if zero_padded {
        // Finite sum: exact.
        let count = lambda.len().saturating_sub(nu);
        let sum = terms_from(lambda, alpha, nu, count).into_iter().fold(T::zero(), |a, t| a + t);
        return Ok(GammaEntry {
            nu,
            value: pre * sum,
            status: CoefficientStatus::ConvergedDirect,
            stability: T::zero(),
        });
    }
    let terms = terms_from(lambda, alpha, nu, budget);
    let mut acc = T::zero();
    let sums: Vec<T> = terms
        .iter()
        .map(|&t| {
            acc += t;
            acc
        })
        .collect();
    let last = sums[sums.len() - 1];
    if terms.iter().all(|t| *t == T::zero()) {
        return Ok(GammaEntry {
            nu,
            value: T::zero(),
            status: CoefficientStatus::ConvergedDirect,
            stability: T::zero(),
        });
    }
    let tol = ctx.tolerance::<T>(4);
    if sums.len() >= 3 {
        let n = sums.len();
        let cauchy = |a: T, b: T| (b - a).abs() <= tol * a.abs().max(b.abs());
        if cauchy(sums[n - 3], sums[n - 2]) && cauchy(sums[n - 2], sums[n - 1]) {
            let stability = (sums[n - 1] - sums[n - 2]).abs();
            return Ok(GammaEntry {
                nu,
                value: pre * last,
                status: CoefficientStatus::ConvergedDirect,
                stability: pre.abs() * stability,
            });
        }
    }
    let seq = InputSequence::new(sums)?;
    let summed = summate(&seq, method, T::one(), ctx)?;
    let mut status = match summed.status {
        SummationStatus::Converged => CoefficientStatus::ConvergedDirect,
        SummationStatus::SummedDivergent => CoefficientStatus::SummedDivergent,
        SummationStatus::Unstable => CoefficientStatus::Failed,
    };
    // Monotone terms decaying no faster than 1/μ: divergent and not summable.
    if let Some(slope) = monotone_tail_slope(&terms) {
        if slope >= -1.0 {
            status = CoefficientStatus::Failed;
        }
    }
    Ok(GammaEntry { nu, value: pre * summed.value, status, stability: pre.abs() * summed.stability })
}

/// `γ_ν = ((-1)^ν/ν!) Σ_μ ((α+ν+1)_μ/μ!) λ_{μ+ν}` from `budget` inner terms.
///
/// Finite (zero-padded) series are summed exactly. Otherwise the inner
/// partial sums are accepted as they stand when they have settled to
/// `10^-(d-4)`, and are handed to `method` when they have not. A same-sign
/// tail decaying no faster than `1/μ` marks the coefficient as failed whatever
/// the transformation reports.
pub fn power_coefficient<T: Real>(
    series: &LaguerreSeries<T>,
    nu: usize,
    budget: usize,
    method: Method,
    ctx: &PrecisionContext,
) -> Result<GammaEntry<T>> {
    if budget == 0 {
        return Err(Error::InvalidParameter("budget must be positive"));
    }
    let (lambda, padded) = match series.source() {
        CoefficientSource::Explicit { coeffs, zero_padded: true } => (coeffs.clone(), true),
        _ => (series.coefficients(nu + budget)?, false),
    };
    gamma_from(&lambda, series.alpha(), padded, nu, budget, method, ctx)
}

/// Computes `γ_0 ... γ_max_nu` and classifies the series.
pub fn transform_to_power_series<T: Real>(
    series: &LaguerreSeries<T>,
    max_nu: usize,
    budget: usize,
    method: Method,
    ctx: &PrecisionContext,
) -> Result<PowerSeriesResult<T>> {
    if budget == 0 {
        return Err(Error::InvalidParameter("budget must be positive"));
    }
    let (lambda, padded) = match series.source() {
        CoefficientSource::Explicit { coeffs, zero_padded: true } => (coeffs.clone(), true),
        _ => (series.coefficients(max_nu + budget)?, false),
    };
    let gammas = (0..=max_nu)
        .map(|nu| gamma_from(&lambda, series.alpha(), padded, nu, budget, method, ctx))
        .collect::<Result<Vec<_>>>()?;
    let exists = gammas.iter().all(|g| g.status != CoefficientStatus::Failed);
    let verdict = classify(series, None).ok();
    Ok(PowerSeriesResult { gammas, verdict, exists })
}

/// Comparison of a truncated power series with the family's closed form.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormReport<T> {
    /// `(z, Σ γ_ν z^ν, closed form, relative deviation)` per sample.
    pub samples: Vec<(T, T, T, T)>,
    pub max_deviation: T,
}

/// Evaluates `Σ γ_ν z^ν` against the family's closed form at each sample.
pub fn verify_against_closed_form<T: Real>(
    series: &LaguerreSeries<T>,
    result: &PowerSeriesResult<T>,
    z_samples: &[T],
    ctx: &PrecisionContext,
) -> Result<ClosedFormReport<T>> {
    let family = match series.source() {
        CoefficientSource::Family(f) if f.has_closed_form() => f,
        _ => return Err(Error::OutOfScope("no closed form is known for this series")),
    };
    let mut samples = Vec::with_capacity(z_samples.len());
    let mut max_deviation = T::zero();
    for &z in z_samples {
        let approx = result.eval(z);
        let exact = family.closed_form(z, ctx)?.ok_or(Error::OutOfScope("no closed form is known for this series"))?;
        let scale = if exact == T::zero() { T::one() } else { exact.abs() };
        let deviation = (approx - exact).abs() / scale;
        max_deviation = max_deviation.max(deviation);
        samples.push((z, approx, exact, deviation));
    }
    Ok(ClosedFormReport { samples, max_deviation })
}
