//! Oracles shared by the integration tests.

use nalgebra::{DMatrix, DVector};

/// `[L/M]` Padé approximant of `Σ c_j z^j` from a dense solve of the
/// denominator equations. `None` when the system is near singular or `z` sits
/// close to a pole, where the denominator loses more than three digits to
/// cancellation and the value is ill-conditioned in the input.
pub fn pade(c: &[f64], l: usize, m: usize, z: f64) -> Option<f64> {
    let coef = |i: isize| if i < 0 { 0.0 } else { c[i as usize] };
    let mut q = vec![1.0];
    if m > 0 {
        let a = DMatrix::from_fn(m, m, |i, j| coef(l as isize + i as isize - j as isize));
        let rhs = DVector::from_fn(m, |i, _| -coef(l as isize + i as isize + 1));
        let singular = a.clone().svd(false, false).singular_values;
        if singular.max() == 0.0 || singular.min() / singular.max() < 1e-8 {
            return None;
        }
        q.extend(a.lu().solve(&rhs)?.iter());
    }
    let p: Vec<f64> = (0..=l).map(|i| (0..=i.min(m)).map(|j| q[j] * coef(i as isize - j as isize)).sum()).collect();
    let num = p.iter().rev().fold(0.0, |acc, &x| acc * z + x);
    let den = q.iter().rev().fold(0.0, |acc, &x| acc * z + x);
    let scale: f64 = q.iter().enumerate().map(|(j, x)| (x * z.powi(j as i32)).abs()).sum();
    if den.abs() < 1e-3 * scale {
        return None;
    }
    Some(num / den)
}

/// Partial sums `Σ_{j<=n} c_j z^j`.
pub fn power_partial_sums(c: &[f64], z: f64) -> Vec<f64> {
    let mut acc = 0.0;
    c.iter()
        .enumerate()
        .map(|(j, cj)| {
            acc += cj * z.powi(j as i32);
            acc
        })
        .collect()
}
