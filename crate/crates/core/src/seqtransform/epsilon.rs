use alloc::vec::Vec;

use super::{classify_status, InputSequence, SummationResult, SummationStatus};
use crate::numkernel::{narrow, widen, DoubleDouble, PrecisionContext, Real};

/// Wynn's epsilon table `ε_k^(n)` built from `s_0 ... s_m`.
///
/// Column `k` holds `ε_k^(0) ... ε_k^(m-k)`. Entries are `None` where the
/// recursion broke down (a vanishing difference) or depends on such an entry.
#[derive(Clone, Debug, PartialEq)]
pub struct EpsilonTable<T> {
    columns: Vec<Vec<Option<T>>>,
}

impl<T: Real> EpsilonTable<T> {
    /// `ε_k^(n)`; `ε_{-1}` is not stored and reads as zero.
    pub fn entry(&self, k: usize, n: usize) -> Option<T> {
        self.columns.get(k).and_then(|col| col.get(n).copied().flatten())
    }

    /// Number of columns, `m + 1` for `m + 1` input elements.
    pub fn orders(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, k: usize) -> &[Option<T>] {
        &self.columns[k]
    }
}

/// Runs `ε_{k+1}^(n) = ε_{k-1}^(n+1) + 1/(ε_k^(n+1) - ε_k^(n))`.
///
/// Backends narrower than double-double run the recursion in double-double,
/// since the reciprocals of small differences amplify rounding errors. The
/// breakdown guard still follows the context's working digits.
pub fn epsilon_table<T: Real>(seq: &InputSequence<T>, ctx: &PrecisionContext) -> EpsilonTable<T> {
    let guard: T = ctx.tolerance(2);
    if T::DIGITS >= DoubleDouble::DIGITS {
        return EpsilonTable { columns: recursion(seq.elements(), guard) };
    }
    let wide: Vec<DoubleDouble> = seq.elements().iter().map(|&x| widen(x)).collect();
    let columns = recursion(&wide, widen(guard))
        .into_iter()
        .map(|col| col.into_iter().map(|e| e.map(narrow::<T>).filter(|v| v.is_finite())).collect())
        .collect();
    EpsilonTable { columns }
}

fn recursion<T: Real>(s: &[T], guard: T) -> Vec<Vec<Option<T>>> {
    let mut columns: Vec<Vec<Option<T>>> = Vec::with_capacity(s.len());
    columns.push(s.iter().copied().map(Some).collect());
    for k in 0..s.len() - 1 {
        let cur = &columns[k];
        let mut next = Vec::with_capacity(cur.len() - 1);
        for n in 0..cur.len() - 1 {
            let before = if k == 0 { Some(T::zero()) } else { columns[k - 1][n + 1] };
            let entry = match (before, cur[n], cur[n + 1]) {
                (Some(before), Some(lo), Some(hi)) => {
                    let diff = hi - lo;
                    if diff.abs() < guard * hi.abs().max(T::one()) {
                        None
                    } else {
                        Some(before + T::one() / diff).filter(|v| v.is_finite())
                    }
                }
                _ => None,
            };
            next.push(entry);
        }
        columns.push(next);
    }
    columns
}

// Highest even-order entry reachable from s_0..s_m, with its order.
fn best_entry<T: Real>(table: &EpsilonTable<T>, m: usize) -> Option<(T, usize, bool)> {
    let top = 2 * (m / 2);
    let mut k = top;
    loop {
        if let Some(v) = table.entry(k, m - k) {
            return Some((v, k, k == top));
        }
        if k < 2 {
            return None;
        }
        k -= 2;
    }
}

/// The approximant `ε_{2⌊m/2⌋}^(m-2⌊m/2⌋)` for `s_0 ... s_m`.
///
/// `stability` is the distance to the corresponding approximant for
/// `s_0 ... s_{m-1}`. If the top entry was pruned, the highest surviving even
/// entry on the same anti-diagonal is returned with status `Unstable`.
pub fn epsilon_best<T: Real>(seq: &InputSequence<T>, ctx: &PrecisionContext) -> SummationResult<T> {
    let table = epsilon_table(seq, ctx);
    let m = seq.len() - 1;
    let s = seq.elements();
    if m == 0 {
        return SummationResult {
            value: s[0],
            order_used: 0,
            stability: s[0].abs(),
            status: SummationStatus::Unstable,
        };
    }
    let (value, order, intact) = best_entry(&table, m).unwrap_or((s[m], 0, false));
    let previous = best_entry(&table, m - 1).map(|(v, _, _)| v).unwrap_or(s[m - 1]);
    let stability = (value - previous).abs();
    let mut status = classify_status(seq, value, stability, ctx);
    if !intact && status != SummationStatus::Converged {
        status = SummationStatus::Unstable;
    }
    SummationResult { value, order_used: order, stability, status }
}
