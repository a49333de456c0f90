//! Analyticity classification of Laguerre coefficients and the rearrangement
//! of a Laguerre series into a power series about the origin.

mod classify;
mod transform;

use alloc::vec::Vec;

pub use classify::{classify, AnalyticityVerdict, DecayClass, Regime, SignPattern};
pub use transform::{
    inner_terms, power_coefficient, transform_to_power_series, verify_against_closed_form, ClosedFormReport,
    CoefficientStatus, GammaEntry, PowerSeriesResult,
};

pub use crate::seqtransform::Method;

use crate::error::{Error, Result};
use crate::families::{CoefficientFamily, RegimeLabel};
use crate::laguerre::{FiniteLaguerreSum, LaguerreParams};
use crate::numkernel::Real;

/// Number of coefficients generated from a family for classification.
pub const DEFAULT_GENERATED: usize = 256;
/// Tail window used on generated coefficients.
pub const DEFAULT_FAMILY_WINDOW: usize = 64;
/// Inner-series terms summed per power coefficient.
pub const DEFAULT_BUDGET: usize = 60;
/// Minimum length of an explicit coefficient list.
pub const MIN_EXPLICIT: usize = 8;

/// Where the Laguerre coefficients come from.
#[derive(Clone, Debug, PartialEq)]
pub enum CoefficientSource<T> {
    /// A measured or computed list. When `zero_padded` the list is the whole
    /// (finite) series; otherwise it is a truncation and indices past its end
    /// are unknown.
    Explicit {
        coeffs: Vec<T>,
        zero_padded: bool,
    },
    Family(CoefficientFamily<T>),
}

/// `f(z) = Σ λ_n L_n^(α)(z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaguerreSeries<T> {
    params: LaguerreParams<T>,
    source: CoefficientSource<T>,
}

impl<T: Real> LaguerreSeries<T> {
    /// A truncated series known through `coeffs`; at least eight entries.
    pub fn explicit(params: LaguerreParams<T>, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() < MIN_EXPLICIT {
            return Err(Error::TooFewCoefficients { needed: MIN_EXPLICIT, available: coeffs.len() });
        }
        Ok(Self { params, source: CoefficientSource::Explicit { coeffs, zero_padded: false } })
    }

    /// A finite sum, read as a series whose later coefficients vanish.
    pub fn finite(sum: &FiniteLaguerreSum<T>) -> Self {
        Self {
            params: sum.params(),
            source: CoefficientSource::Explicit { coeffs: sum.coeffs().to_vec(), zero_padded: true },
        }
    }

    pub fn family(family: CoefficientFamily<T>) -> Self {
        let params = LaguerreParams::new(family.alpha()).expect("family alpha is validated");
        Self { params, source: CoefficientSource::Family(family) }
    }

    pub fn params(&self) -> LaguerreParams<T> {
        self.params
    }

    pub fn alpha(&self) -> T {
        self.params.alpha()
    }

    pub fn source(&self) -> &CoefficientSource<T> {
        &self.source
    }

    pub fn is_zero_padded(&self) -> bool {
        matches!(self.source, CoefficientSource::Explicit { zero_padded: true, .. })
    }

    /// Number of stored coefficients, `None` for generated families.
    pub fn known_len(&self) -> Option<usize> {
        match &self.source {
            CoefficientSource::Explicit { coeffs, .. } => Some(coeffs.len()),
            CoefficientSource::Family(_) => None,
        }
    }

    /// `λ_0 ... λ_{count-1}`.
    pub fn coefficients(&self, count: usize) -> Result<Vec<T>> {
        match &self.source {
            CoefficientSource::Family(f) => Ok(f.coefficients(count)),
            CoefficientSource::Explicit { coeffs, zero_padded } => {
                if count <= coeffs.len() {
                    Ok(coeffs[..count].to_vec())
                } else if *zero_padded {
                    let mut out = coeffs.clone();
                    out.resize(count, T::zero());
                    Ok(out)
                } else {
                    Err(Error::CoefficientUnavailable { index: count - 1, available: coeffs.len() })
                }
            }
        }
    }
}

/// The regime a family's predicted label corresponds to.
pub fn regime_of_label(label: RegimeLabel) -> Regime {
    match label {
        RegimeLabel::AlgebraicMonotone => Regime::NotAnalyticAtOrigin,
        RegimeLabel::AlgebraicAlternating => Regime::AnalyticViaSummation,
        RegimeLabel::Exponential | RegimeLabel::Factorial => Regime::Analytic,
    }
}
