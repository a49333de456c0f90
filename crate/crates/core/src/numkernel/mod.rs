//! Working precision, gamma function and Pochhammer symbols.

mod double_double;
mod real;

pub use double_double::DoubleDouble;
pub use real::{digit_string, Real};

use crate::error::{Error, Result};

/// Precision settings for one computation.
///
/// `digits` is the number of significant decimal digits the caller asks for.
/// It also sets the tolerances used in convergence tests, capped at what the
/// chosen [`Real`] backend actually carries.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrecisionContext {
    digits: u32,
    divergence_guard: f64,
}

impl PrecisionContext {
    pub const DEFAULT_GUARD: f64 = 1e300;

    pub fn new(digits: u32) -> Result<Self> {
        Self::with_guard(digits, Self::DEFAULT_GUARD)
    }

    pub fn with_guard(digits: u32, divergence_guard: f64) -> Result<Self> {
        if digits < 15 {
            return Err(Error::Precision("at least 15 digits are required"));
        }
        if !(divergence_guard > 0.0) {
            return Err(Error::Precision("divergence guard must be positive"));
        }
        Ok(Self { digits, divergence_guard })
    }

    /// Hardware precision, 16 digits.
    pub fn hardware() -> Self {
        Self { digits: 16, divergence_guard: Self::DEFAULT_GUARD }
    }

    /// Software precision, 32 digits.
    pub fn high() -> Self {
        Self { digits: 32, divergence_guard: Self::DEFAULT_GUARD }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn divergence_guard(&self) -> f64 {
        self.divergence_guard
    }

    /// Digits actually available with backend `T`.
    pub fn effective_digits<T: Real>(&self) -> u32 {
        self.digits.min(T::DIGITS)
    }

    /// `10^-(d - slack)` with `d` the effective digits.
    pub fn tolerance<T: Real>(&self, slack: u32) -> T {
        let d = self.effective_digits::<T>().saturating_sub(slack) as i32;
        T::one() / T::from_f64(10.0).powi(d)
    }

    /// True when `x` is non-finite or beyond the divergence guard.
    pub fn overflows<T: Real>(&self, x: T) -> bool {
        !x.is_finite() || x.abs().to_f64() > self.divergence_guard
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self::hardware()
    }
}

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(Error::Domain("ln_gamma needs a positive finite argument"));
    }
    Ok(x.ln_gamma_positive())
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`.
///
/// Backends narrower than double-double accumulate the product in
/// double-double and round once.
pub fn pochhammer<T: Real>(a: T, n: usize) -> T {
    if T::DIGITS < DoubleDouble::DIGITS {
        return narrow(product(widen(a), n));
    }
    product(a, n)
}

fn product<T: Real>(a: T, n: usize) -> T {
    let mut acc = T::one();
    let mut x = a;
    for _ in 0..n {
        acc *= x;
        x += T::one();
    }
    acc
}

/// `Γ(z+a) / Γ(z+b)` for `z+a > 0` and `z+b > 0`.
pub fn gamma_ratio<T: Real>(a: T, b: T, z: T) -> Result<T> {
    let top = ln_gamma(z + a)?;
    let bottom = ln_gamma(z + b)?;
    Ok((top - bottom).exp())
}

/// `n!` as a real number.
pub fn factorial<T: Real>(n: usize) -> T {
    pochhammer(T::one(), n)
}

// Exact widening to double-double; both backends fit.
pub(crate) fn widen<T: Real>(x: T) -> DoubleDouble {
    x.components().into_iter().fold(DoubleDouble::ZERO, |acc, c| acc + DoubleDouble::from(c))
}

pub(crate) fn narrow<T: Real>(x: DoubleDouble) -> T {
    T::from_f64(x.hi()) + T::from_f64(x.lo())
}

/// Converts a small integer to `T`.
pub(crate) fn real<T: Real>(n: usize) -> T {
    T::from_usize(n)
}
