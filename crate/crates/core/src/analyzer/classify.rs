use alloc::vec::Vec;

use super::{CoefficientSource, LaguerreSeries, DEFAULT_FAMILY_WINDOW, DEFAULT_GENERATED};
use crate::error::{Error, Result};
use crate::numkernel::Real;

/// Sign behaviour of the coefficient tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignPattern {
    UltimatelyConstant,
    UltimatelyAlternating,
    Irregular,
}

/// Decay law that fits the coefficient tail best.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DecayClass {
    /// `|λ_n| ~ n^{-exponent}`.
    Algebraic {
        exponent: f64,
    },
    /// `|λ_n| ~ ratio^n`.
    Exponential {
        ratio: f64,
    },
    /// `|λ_n| ~ scale^n / n!`.
    Factorial {
        scale: f64,
    },
    Undetermined,
}

/// Behaviour of the represented function at the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Analytic,
    AnalyticViaSummation,
    NotAnalyticAtOrigin,
    Undetermined,
}

/// Result of [`classify`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalyticityVerdict {
    pub sign_pattern: SignPattern,
    pub decay_class: DecayClass,
    pub regime: Regime,
    /// RMS residual of the winning fit, in units of `ln|λ|`.
    pub fit_residual: f64,
}

const RESIDUAL_LIMIT: f64 = 0.1;
const MIN_WINDOW: usize = 4;

/// Classifies a series from the tail of its coefficients.
///
/// Three straight-line fits are tried on the tail: `ln|λ_n|` against `ln n`
/// (algebraic), against `n` (exponential), and `ln|λ_n| + ln n!` against `n`
/// (factorial). The smallest RMS residual wins; above 0.1 the decay is
/// undetermined. Any algebraic prefactor of an exponential law ends up in the
/// residual.
///
/// `tail_window` defaults to 64 of 256 generated coefficients for families and
/// to the last half of an explicit list.
pub fn classify<T: Real>(series: &LaguerreSeries<T>, tail_window: Option<usize>) -> Result<AnalyticityVerdict> {
    let (coeffs, default_window) = match series.source() {
        CoefficientSource::Family(f) => {
            let mut c = f.coefficients(DEFAULT_GENERATED);
            // Factorially decaying families underflow; keep the normal range.
            if let Some(end) = c.iter().position(|x| !x.to_f64().is_normal()) {
                c.truncate(end);
            }
            let window = DEFAULT_FAMILY_WINDOW.min(c.len() / 2);
            (c, window)
        }
        CoefficientSource::Explicit { coeffs, .. } => (coeffs.clone(), coeffs.len() / 2),
    };
    let window = tail_window.unwrap_or(default_window.max(MIN_WINDOW));
    if window < MIN_WINDOW || window > coeffs.len() {
        return Err(Error::TooFewCoefficients { needed: window.max(MIN_WINDOW), available: coeffs.len() });
    }
    let start = (coeffs.len() - window).max(1);
    let tail: Vec<(usize, f64)> = coeffs.iter().enumerate().skip(start).map(|(n, x)| (n, x.to_f64())).collect();

    let sign_pattern = sign_pattern(&tail);
    let (decay_class, fit_residual) = decay_class(&tail);
    let regime = match (decay_class, sign_pattern) {
        (DecayClass::Exponential { .. } | DecayClass::Factorial { .. }, _) => Regime::Analytic,
        (DecayClass::Algebraic { .. }, SignPattern::UltimatelyConstant) => Regime::NotAnalyticAtOrigin,
        (DecayClass::Algebraic { .. }, SignPattern::UltimatelyAlternating) => Regime::AnalyticViaSummation,
        _ => Regime::Undetermined,
    };
    Ok(AnalyticityVerdict { sign_pattern, decay_class, regime, fit_residual })
}

fn sign_pattern(tail: &[(usize, f64)]) -> SignPattern {
    if tail.iter().any(|&(_, x)| x == 0.0 || !x.is_finite()) {
        return SignPattern::Irregular;
    }
    let signs: Vec<bool> = tail.iter().map(|&(_, x)| x > 0.0).collect();
    if signs.windows(2).all(|w| w[0] == w[1]) {
        SignPattern::UltimatelyConstant
    } else if signs.windows(2).all(|w| w[0] != w[1]) {
        SignPattern::UltimatelyAlternating
    } else {
        SignPattern::Irregular
    }
}

// Least-squares line y = c0 + c1 x; returns (c1, rms residual).
fn line_fit(points: &[(f64, f64)]) -> (f64, f64) {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let ss: f64 = points
        .iter()
        .map(|p| {
            let r = p.1 - (my + slope * (p.0 - mx));
            r * r
        })
        .sum();
    (slope, libm::sqrt(ss / n))
}

fn decay_class(tail: &[(usize, f64)]) -> (DecayClass, f64) {
    if tail.iter().any(|&(_, x)| x == 0.0 || !x.is_finite()) {
        return (DecayClass::Undetermined, f64::INFINITY);
    }
    let logs: Vec<(f64, f64)> = tail.iter().map(|&(n, x)| (n as f64, libm::log(libm::fabs(x)))).collect();
    let algebraic: Vec<(f64, f64)> = logs.iter().map(|&(n, y)| (libm::log(n), y)).collect();
    let factorial: Vec<(f64, f64)> = logs.iter().map(|&(n, y)| (n, y + libm::lgamma(n + 1.0))).collect();
    let (slope_a, res_a) = line_fit(&algebraic);
    let (slope_b, res_b) = line_fit(&logs);
    let (slope_c, res_c) = line_fit(&factorial);
    let candidates = [
        (res_a, DecayClass::Algebraic { exponent: -slope_a }),
        (res_b, DecayClass::Exponential { ratio: libm::exp(slope_b) }),
        (res_c, DecayClass::Factorial { scale: libm::exp(slope_c) }),
    ];
    let (residual, class) =
        candidates
            .iter()
            .copied()
            .fold((f64::INFINITY, DecayClass::Undetermined), |best, c| if c.0 < best.0 { c } else { best });
    if residual > RESIDUAL_LIMIT {
        (DecayClass::Undetermined, residual)
    } else {
        (class, residual)
    }
}
