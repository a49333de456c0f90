//! Nonlinear sequence transformations: Wynn's epsilon algorithm and the
//! Levin-type `d` (power weights) and `δ` (Pochhammer weights) variants with
//! the remainder estimate `ω_n = Δs_n`.

mod epsilon;
mod levin;

use alloc::vec::Vec;

pub use epsilon::{epsilon_best, epsilon_table, EpsilonTable};
pub use levin::{levin_generic, LevinState, LevinVariant};

use crate::error::{Error, Result};
use crate::numkernel::{PrecisionContext, Real};

/// A nonempty sequence `s_0, s_1, ..., s_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct InputSequence<T> {
    elements: Vec<T>,
}

impl<T: Real> InputSequence<T> {
    pub fn new(elements: Vec<T>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Self { elements })
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The first `count` elements.
    pub fn prefix(&self, count: usize) -> Result<Self> {
        Self::new(self.elements[..count.min(self.elements.len())].to_vec())
    }

    pub fn into_vec(self) -> Vec<T> {
        self.elements
    }
}

/// How a summation ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SummationStatus {
    /// The input itself had already converged.
    Converged,
    /// The input did not converge but the transformation is stable.
    SummedDivergent,
    /// Neither.
    Unstable,
}

/// Outcome of one transformation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SummationResult<T> {
    pub value: T,
    /// Transformation order `k` of the returned approximant.
    pub order_used: usize,
    /// Distance between the two highest-order approximants.
    pub stability: T,
    pub status: SummationStatus,
}

/// Which transformation to apply.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    Epsilon,
    LevinD,
    #[default]
    Delta,
}

pub(crate) fn classify_status<T: Real>(
    seq: &InputSequence<T>,
    value: T,
    stability: T,
    ctx: &PrecisionContext,
) -> SummationStatus {
    if ctx.overflows(value) || !stability.is_finite() {
        return SummationStatus::Unstable;
    }
    let s = seq.elements();
    if s.len() >= 2 {
        let (a, b) = (s[s.len() - 2], s[s.len() - 1]);
        let scale = a.abs().max(b.abs());
        if (b - a).abs() <= ctx.tolerance::<T>(4) * scale {
            return SummationStatus::Converged;
        }
    }
    if stability <= T::from_f64(1e-8) * value.abs() {
        SummationStatus::SummedDivergent
    } else {
        SummationStatus::Unstable
    }
}

/// Levin's `d` transformation `d_m^(0)(β, s_0)` for `s_0 ... s_{m+1}`.
pub fn d_transform<T: Real>(seq: &InputSequence<T>, beta: T, ctx: &PrecisionContext) -> Result<SummationResult<T>> {
    levin::levin_type(seq, beta, LevinVariant::PowerWeights, ctx)
}

/// Weniger's `δ` transformation `δ_m^(0)(β, s_0)` for `s_0 ... s_{m+1}`.
pub fn delta_transform<T: Real>(seq: &InputSequence<T>, beta: T, ctx: &PrecisionContext) -> Result<SummationResult<T>> {
    levin::levin_type(seq, beta, LevinVariant::PochhammerWeights, ctx)
}

/// Applies `method` with shift `β` (ignored by epsilon).
pub fn summate<T: Real>(
    seq: &InputSequence<T>,
    method: Method,
    beta: T,
    ctx: &PrecisionContext,
) -> Result<SummationResult<T>> {
    match method {
        Method::Epsilon => Ok(epsilon_best(seq, ctx)),
        Method::LevinD => d_transform(seq, beta, ctx),
        Method::Delta => delta_transform(seq, beta, ctx),
    }
}
