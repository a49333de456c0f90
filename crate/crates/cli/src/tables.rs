//! Summation tables for the hypergeometric model series at `z = -1`.

use clap::ValueEnum;
use lagsum_core::hypergeom::{gauss_2f1_minus_one, ContinuationRoute, HypSeriesSpec};
use lagsum_core::seqtransform::{d_transform, delta_transform, epsilon_best, SummationResult};
use lagsum_core::{DoubleDouble, PrecisionContext, Real, Result};

use crate::render::number;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Which {
    Table1,
    Table2,
    F32Nu0,
    F32Nu10,
    F43Nu0,
    F43Nu10,
}

/// Rendered rows under a header.
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

// (numerators, denominators) as p/q pairs.
type Params = (&'static [(i64, i64)], &'static [(i64, i64)]);

const F21: Params = (&[(3, 2), (7, 3)], &[(21, 4)]);
const F32: Params = (&[(3, 2), (7, 3), (11, 5)], &[(22, 7), (32, 11)]);
const F43: Params = (&[(3, 2), (7, 3), (11, 5), (16, 17)], &[(18, 19), (22, 7), (32, 11)]);

// Order of the delta transformation used as the reference for ₃F₂ and ₄F₃,
// always evaluated in double-double.
const REFERENCE_ORDER: usize = 40;

fn spec<T: Real>(params: Params, shift: usize) -> Result<HypSeriesSpec<T>> {
    let r = |&(p, q): &(i64, i64)| T::from_i64(p) / T::from_i64(q);
    HypSeriesSpec::new(params.0.iter().map(r).collect(), params.1.iter().map(r).collect(), -T::one(), shift)
}

/// Epsilon entry from `s_0 ... s_n`.
fn epsilon<T: Real>(s: &HypSeriesSpec<T>, n: usize, ctx: &PrecisionContext) -> Result<T> {
    Ok(epsilon_best(&s.partial_sums(n + 1)?, ctx).value)
}

/// Levin-type order `k` from `s_0 ... s_{k+1}`.
fn levin<T: Real>(
    f: fn(&lagsum_core::seqtransform::InputSequence<T>, T, &PrecisionContext) -> Result<SummationResult<T>>,
    s: &HypSeriesSpec<T>,
    k: usize,
    ctx: &PrecisionContext,
) -> Result<T> {
    Ok(f(&s.partial_sums(k + 2)?, T::one(), ctx)?.value)
}

fn gauss_exact<T: Real>(shift: usize, ctx: &PrecisionContext) -> Result<T> {
    let s = spec::<T>(F21, shift)?;
    let (a, b, c) = (s.numerators()[0], s.numerators()[1], s.denominators()[0]);
    let nu = T::from_usize(shift);
    gauss_2f1_minus_one(a + nu, b + nu, c + nu, ContinuationRoute::Ltr1, ctx)
}

fn two_f_one<T: Real>(shift: usize, rows: usize, with_d: bool, ctx: &PrecisionContext) -> Result<Table> {
    let s = spec::<T>(F21, shift)?;
    let sums = s.partial_sums(rows)?;
    let mut header = vec!["n", "s_n", "epsilon"];
    if with_d {
        header.push("d");
    }
    header.push("delta");
    let mut out = Vec::with_capacity(rows + 1);
    for n in 0..rows {
        let mut row = vec![n.to_string(), number(sums.elements()[n]), number(epsilon(&s, n, ctx)?)];
        if with_d {
            row.push(number(levin(d_transform, &s, n, ctx)?));
        }
        row.push(number(levin(delta_transform, &s, n, ctx)?));
        out.push(row);
    }
    let exact = number(gauss_exact::<T>(shift, ctx)?);
    let mut last = vec!["exact".to_string(), String::new()];
    last.extend(std::iter::repeat_n(exact, header.len() - 2));
    out.push(last);
    Ok(Table { header: header.into_iter().map(String::from).collect(), rows: out })
}

fn inline<T: Real>(params: Params, shift: usize, ctx: &PrecisionContext) -> Result<Table> {
    let s = spec::<T>(params, shift)?;
    // ε_12^(0) and d, δ of order 12 without the shift; ε_16^(1) and order 17 with it.
    let (eps_n, order) = if shift == 0 { (12, 12) } else { (17, 17) };
    let row = vec![
        number(epsilon(&s, eps_n, ctx)?),
        number(levin(d_transform, &s, order, ctx)?),
        number(levin(delta_transform, &s, order, ctx)?),
        number(reference(params, shift)?),
    ];
    let header = ["epsilon", "d", "delta", "reference"].into_iter().map(String::from).collect();
    Ok(Table { header, rows: vec![row] })
}

fn reference(params: Params, shift: usize) -> Result<DoubleDouble> {
    let s = spec::<DoubleDouble>(params, shift)?;
    levin(delta_transform, &s, REFERENCE_ORDER, &PrecisionContext::high())
}

pub fn build<T: Real>(which: Which, ctx: &PrecisionContext) -> Result<Table> {
    match which {
        Which::Table1 => two_f_one::<T>(0, 12, true, ctx),
        Which::Table2 => two_f_one::<T>(10, 18, false, ctx),
        Which::F32Nu0 => inline::<T>(F32, 0, ctx),
        Which::F32Nu10 => inline::<T>(F32, 10, ctx),
        Which::F43Nu0 => inline::<T>(F43, 0, ctx),
        Which::F43Nu10 => inline::<T>(F43, 10, ctx),
    }
}
