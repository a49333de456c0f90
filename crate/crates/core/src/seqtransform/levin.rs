use alloc::vec::Vec;

use super::{classify_status, InputSequence, SummationResult, SummationStatus};
use crate::error::{Error, Result};
use crate::numkernel::{real, PrecisionContext, Real};

/// Weight family of a Levin-type transformation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LevinVariant {
    /// Levin: weights `(β+n+j)^{k-1}`.
    PowerWeights,
    /// Weniger: weights `(β+n+j)_{k-1}`.
    PochhammerWeights,
}

/// Numerator and denominator tables of a Levin-type transformation.
///
/// Column `k` holds the entries `n = 0 ... len-1-k`. The approximant is the
/// ratio of the two tables.
#[derive(Clone, Debug, PartialEq)]
pub struct LevinState<T> {
    numerator: Vec<Vec<T>>,
    denominator: Vec<Vec<T>>,
    beta: T,
    variant: LevinVariant,
}

impl<T: Real> LevinState<T> {
    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn variant(&self) -> LevinVariant {
        self.variant
    }

    /// Highest order present plus one.
    pub fn orders(&self) -> usize {
        self.numerator.len()
    }

    pub fn numerator(&self, k: usize, n: usize) -> Option<T> {
        self.numerator.get(k)?.get(n).copied()
    }

    pub fn denominator(&self, k: usize, n: usize) -> Option<T> {
        self.denominator.get(k)?.get(n).copied()
    }

    /// `Ξ_k^(n)`, or `None` where the denominator vanished or overflowed.
    pub fn approximant(&self, k: usize, n: usize) -> Option<T> {
        let num = self.numerator(k, n)?;
        let den = self.denominator(k, n)?;
        if den == T::zero() {
            return None;
        }
        Some(num / den).filter(|v| v.is_finite())
    }
}

// Coefficient multiplying X_k^(n) in X_{k+1}^(n) = X_k^(n+1) - c X_k^(n).
fn factor<T: Real>(variant: LevinVariant, beta: T, k: usize, n: usize) -> T {
    let bn = beta + real(n);
    match variant {
        LevinVariant::PowerWeights => {
            let top = bn + real(k);
            let next = top + T::one();
            (bn / next) * (top / next).powi(k as i32 - 1)
        }
        LevinVariant::PochhammerWeights => {
            if k == 0 {
                return T::one();
            }
            let kf: T = real(k);
            let two_k: T = real(2 * k);
            ((bn + kf - T::one()) * (bn + kf)) / ((bn + two_k - T::one()) * (bn + two_k))
        }
    }
}

/// Builds the full triangular tables from `u_n = s_n/ω_n` and `1/ω_n`.
pub fn levin_generic<T: Real>(
    seq: &InputSequence<T>,
    omegas: &[T],
    beta: T,
    variant: LevinVariant,
) -> Result<LevinState<T>> {
    if omegas.len() != seq.len() {
        return Err(Error::InvalidParameter("one remainder estimate per sequence element is required"));
    }
    if omegas.iter().any(|w| *w == T::zero() || !w.is_finite()) {
        return Err(Error::InvalidParameter("remainder estimates must be finite and nonzero"));
    }
    if !(beta > T::zero()) {
        return Err(Error::InvalidParameter("beta must be positive"));
    }
    let s = seq.elements();
    let mut numerator = Vec::with_capacity(s.len());
    let mut denominator = Vec::with_capacity(s.len());
    numerator.push(s.iter().zip(omegas).map(|(&sn, &w)| sn / w).collect::<Vec<T>>());
    denominator.push(omegas.iter().map(|&w| T::one() / w).collect::<Vec<T>>());
    for k in 0..s.len() - 1 {
        let (num, den) = (&numerator[k], &denominator[k]);
        let mut next_num = Vec::with_capacity(num.len() - 1);
        let mut next_den = Vec::with_capacity(num.len() - 1);
        for n in 0..num.len() - 1 {
            let c = factor(variant, beta, k, n);
            next_num.push(num[n + 1] - c * num[n]);
            next_den.push(den[n + 1] - c * den[n]);
        }
        numerator.push(next_num);
        denominator.push(next_den);
    }
    Ok(LevinState { numerator, denominator, beta, variant })
}

pub(super) fn levin_type<T: Real>(
    seq: &InputSequence<T>,
    beta: T,
    variant: LevinVariant,
    ctx: &PrecisionContext,
) -> Result<SummationResult<T>> {
    let s = seq.elements();
    if s.len() == 1 {
        return Ok(SummationResult {
            value: s[0],
            order_used: 0,
            stability: s[0].abs(),
            status: SummationStatus::Unstable,
        });
    }
    // ω_n = Δs_n, up to the first vanishing difference.
    let mut omegas: Vec<T> = s.windows(2).map(|w| w[1] - w[0]).collect();
    if let Some(zero) = omegas.iter().position(|w| *w == T::zero()) {
        omegas.truncate(zero);
    }
    if omegas.is_empty() {
        let stability = T::zero();
        let status = classify_status(seq, s[0], stability, ctx);
        return Ok(SummationResult { value: s[0], order_used: 0, stability, status });
    }
    let used = InputSequence::new(s[..omegas.len()].to_vec())?;
    let state = levin_generic(&used, &omegas, beta, variant)?;
    let m = omegas.len() - 1;
    let value = state.approximant(m, 0);
    let previous = if m == 0 { Some(s[0]) } else { state.approximant(m - 1, 0) };
    match (value, previous) {
        (Some(value), Some(previous)) => {
            let stability = (value - previous).abs();
            let status = classify_status(seq, value, stability, ctx);
            Ok(SummationResult { value, order_used: m, stability, status })
        }
        _ => {
            // Fall back to the highest finite order.
            let (value, order) =
                (0..m).rev().find_map(|k| state.approximant(k, 0).map(|v| (v, k))).unwrap_or((s[0], 0));
            Ok(SummationResult { value, order_used: order, stability: value.abs(), status: SummationStatus::Unstable })
        }
    }
}
