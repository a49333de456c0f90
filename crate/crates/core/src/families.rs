//! Laguerre coefficient families `λ_n^(α)` with known analytic behaviour.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergeom::{bessel_0f1, direct_2f1, kummer_1f1};
use crate::numkernel::{gamma_ratio, real, PrecisionContext, Real};

/// Parameters of a coefficient family.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilyKind<T> {
    /// `Γ(ρ+α+1)/Γ(α+1) · (-ρ)_n/(α+1)_n`, the expansion of `z^ρ`.
    Power { rho: T },
    /// `(-1)^n` times [`FamilyKind::Power`].
    AltPower { rho: T },
    /// `t^n`.
    Geometric { t: T },
    /// `(-s)^n` times [`FamilyKind::Power`].
    GeometricPower { rho: T, s: T },
    /// `s^n/(α+1)_n`.
    Factorial { s: T },
    /// `(-1)^n (a)_n (b)_n / ((c)_n (α+1)_n)`.
    HypRatio { a: T, b: T, c: T },
    /// `(-1)^n Π(a_i)_n / (Π(b_j)_n (α+1)_n)` with `p+1` numerators, `p` denominators.
    HypRatioGeneral { numerators: Vec<T>, denominators: Vec<T> },
    /// Expansion of `z^ρ e^{-uz}`.
    ExpPower { rho: T, u: T },
}

/// Asymptotic regime predicted for a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegimeLabel {
    AlgebraicMonotone,
    AlgebraicAlternating,
    Exponential,
    Factorial,
}

/// A validated family together with its superscript `α`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientFamily<T> {
    kind: FamilyKind<T>,
    alpha: T,
}

fn is_nonnegative_integer<T: Real>(x: T) -> bool {
    x >= T::zero() && x == x.floor()
}

fn check_power<T: Real>(rho: T, alpha: T) -> Result<()> {
    if is_nonnegative_integer(rho) {
        return Err(Error::InvalidParameter("rho must not be a nonnegative integer"));
    }
    if !(alpha + T::from_f64(2.0) * rho > -T::one()) {
        return Err(Error::InvalidParameter("alpha + 2 rho must exceed -1"));
    }
    Ok(())
}

impl<T: Real> CoefficientFamily<T> {
    pub fn new(kind: FamilyKind<T>, alpha: T) -> Result<Self> {
        let one = T::one();
        if !alpha.is_finite() || !(alpha > -one) {
            return Err(Error::InvalidParameter("alpha must be greater than -1"));
        }
        match &kind {
            FamilyKind::Power { rho } | FamilyKind::AltPower { rho } => check_power(*rho, alpha)?,
            FamilyKind::GeometricPower { rho, s } => {
                check_power(*rho, alpha)?;
                if !(s.abs() < one) {
                    return Err(Error::InvalidParameter("|s| must be below 1"));
                }
            }
            FamilyKind::Geometric { t } => {
                if !(t.abs() < one) {
                    return Err(Error::InvalidParameter("|t| must be below 1"));
                }
            }
            FamilyKind::Factorial { s } => {
                if !s.is_finite() || *s == T::zero() {
                    return Err(Error::InvalidParameter("s must be finite and nonzero"));
                }
            }
            FamilyKind::HypRatio { a, b, c } => {
                check_hyp(&[*a, *b], &[*c], alpha)?;
            }
            FamilyKind::HypRatioGeneral { numerators, denominators } => {
                if numerators.len() != denominators.len() + 1 {
                    return Err(Error::InvalidParameter("need exactly one more numerator than denominator parameter"));
                }
                check_hyp(numerators, denominators, alpha)?;
            }
            FamilyKind::ExpPower { rho, u } => {
                if is_nonnegative_integer(*rho) {
                    return Err(Error::InvalidParameter("rho must not be a nonnegative integer"));
                }
                if !(alpha + *rho > -one) {
                    return Err(Error::InvalidParameter("alpha + rho must exceed -1"));
                }
                if !(*u < T::from_f64(0.5)) {
                    return Err(Error::InvalidParameter("u must be below 1/2"));
                }
            }
        }
        Ok(Self { kind, alpha })
    }

    pub fn power(rho: T, alpha: T) -> Result<Self> {
        Self::new(FamilyKind::Power { rho }, alpha)
    }

    pub fn alt_power(rho: T, alpha: T) -> Result<Self> {
        Self::new(FamilyKind::AltPower { rho }, alpha)
    }

    pub fn geometric(t: T, alpha: T) -> Result<Self> {
        Self::new(FamilyKind::Geometric { t }, alpha)
    }

    pub fn geometric_power(rho: T, s: T, alpha: T) -> Result<Self> {
        Self::new(FamilyKind::GeometricPower { rho, s }, alpha)
    }

    pub fn factorial(s: T, alpha: T) -> Result<Self> {
        Self::new(FamilyKind::Factorial { s }, alpha)
    }

    pub fn hyp_ratio(a: T, b: T, c: T, alpha: T) -> Result<Self> {
        Self::new(FamilyKind::HypRatio { a, b, c }, alpha)
    }

    pub fn hyp_ratio_general(numerators: Vec<T>, denominators: Vec<T>, alpha: T) -> Result<Self> {
        Self::new(FamilyKind::HypRatioGeneral { numerators, denominators }, alpha)
    }

    pub fn exp_power(rho: T, u: T, alpha: T) -> Result<Self> {
        Self::new(FamilyKind::ExpPower { rho, u }, alpha)
    }

    pub fn kind(&self) -> &FamilyKind<T> {
        &self.kind
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    /// `λ_n^(α)`.
    pub fn coefficient(&self, n: usize) -> T {
        self.coefficients(n + 1)[n]
    }

    /// `λ_0 ... λ_{count-1}`, built by running products.
    pub fn coefficients(&self, count: usize) -> Vec<T> {
        let alpha = self.alpha;
        let a1 = alpha + T::one();
        match &self.kind {
            FamilyKind::Power { rho } => power_like(*rho, alpha, T::one(), count),
            FamilyKind::AltPower { rho } => power_like(*rho, alpha, -T::one(), count),
            FamilyKind::GeometricPower { rho, s } => power_like(*rho, alpha, -*s, count),
            FamilyKind::Geometric { t } => running(count, |_| *t),
            FamilyKind::Factorial { s } => running(count, |n| *s / (a1 + real(n))),
            FamilyKind::HypRatio { a, b, c } => running(count, |n| {
                let nf: T = real(n);
                -((*a + nf) * (*b + nf)) / ((*c + nf) * (a1 + nf))
            }),
            FamilyKind::HypRatioGeneral { numerators, denominators } => running(count, |n| {
                let nf: T = real(n);
                let mut r = -T::one() / (a1 + nf);
                for &a in numerators {
                    r *= a + nf;
                }
                for &b in denominators {
                    r /= b + nf;
                }
                r
            }),
            FamilyKind::ExpPower { rho, u } => exp_power(*rho, *u, alpha, count),
        }
    }

    pub fn expected_regime(&self) -> RegimeLabel {
        match self.kind {
            FamilyKind::Power { .. } | FamilyKind::ExpPower { .. } => RegimeLabel::AlgebraicMonotone,
            FamilyKind::AltPower { .. } | FamilyKind::HypRatio { .. } | FamilyKind::HypRatioGeneral { .. } => {
                RegimeLabel::AlgebraicAlternating
            }
            FamilyKind::Geometric { .. } | FamilyKind::GeometricPower { .. } => RegimeLabel::Exponential,
            FamilyKind::Factorial { .. } => RegimeLabel::Factorial,
        }
    }

    /// Whether [`closed_form`](Self::closed_form) returns a value.
    pub fn has_closed_form(&self) -> bool {
        match &self.kind {
            FamilyKind::ExpPower { .. } => false,
            FamilyKind::HypRatioGeneral { denominators, .. } => denominators.len() <= 1,
            _ => true,
        }
    }

    /// The function represented by the Laguerre series, where known.
    ///
    /// For `Power` this is `z^ρ` itself, which has no power series at the
    /// origin; it is useful only to compare truncated Laguerre sums.
    pub fn closed_form(&self, z: T, ctx: &PrecisionContext) -> Result<Option<T>> {
        let alpha = self.alpha;
        let one = T::one();
        let two = T::from_f64(2.0);
        let a1 = alpha + one;
        let value = match &self.kind {
            FamilyKind::Power { rho } => {
                if z < T::zero() {
                    return Err(Error::Domain("z^rho needs z >= 0"));
                }
                if z == T::zero() {
                    if *rho > T::zero() {
                        T::zero()
                    } else {
                        return Err(Error::Pole("z^rho is singular at 0"));
                    }
                } else {
                    z.powf(*rho)
                }
            }
            FamilyKind::AltPower { rho } => {
                two.powf(*rho) * gamma_ratio(*rho + one, one, alpha)? * kummer_1f1(-*rho, a1, z / two, ctx)?
            }
            FamilyKind::GeometricPower { rho, s } => {
                let sp = one + *s;
                sp.powf(*rho) * gamma_ratio(*rho + one, one, alpha)? * kummer_1f1(-*rho, a1, *s * z / sp, ctx)?
            }
            FamilyKind::Geometric { t } => (one - *t).powf(-a1) * (z * *t / (*t - one)).exp(),
            FamilyKind::Factorial { s } => s.exp() * bessel_0f1(a1, -*s * z, ctx)?,
            FamilyKind::HypRatio { a, b, c } => hyp_ratio_closed(*a, *b, *c, alpha, z, ctx)?,
            FamilyKind::HypRatioGeneral { numerators, denominators } => match denominators.len() {
                0 => two.powf(-numerators[0]) * kummer_1f1(numerators[0], a1, z / two, ctx)?,
                1 => hyp_ratio_closed(numerators[0], numerators[1], denominators[0], alpha, z, ctx)?,
                _ => return Ok(None),
            },
            FamilyKind::ExpPower { .. } => return Ok(None),
        };
        Ok(Some(value))
    }
}

fn check_hyp<T: Real>(numerators: &[T], denominators: &[T], alpha: T) -> Result<()> {
    let bad = |x: &T| x.is_finite() && -*x >= T::zero() && *x == x.floor();
    if numerators.iter().chain(denominators).any(|x| bad(x) || !x.is_finite()) {
        return Err(Error::InvalidParameter("parameters must be finite and not nonpositive integers"));
    }
    let sum_a = numerators.iter().fold(T::zero(), |acc, &x| acc + x);
    let sum_b = denominators.iter().fold(T::zero(), |acc, &x| acc + x);
    if !(sum_b - sum_a + (alpha + T::one()) / T::from_f64(2.0) > T::zero()) {
        return Err(Error::InvalidParameter("coefficients decay too slowly for mean convergence"));
    }
    Ok(())
}

fn running<T: Real>(count: usize, mut ratio: impl FnMut(usize) -> T) -> Vec<T> {
    let mut out = Vec::with_capacity(count);
    let mut x = T::one();
    for n in 0..count {
        out.push(x);
        x *= ratio(n);
    }
    out
}

// Γ(ρ+α+1)/Γ(α+1) (-ρ)_n/(α+1)_n σ^n
fn power_like<T: Real>(rho: T, alpha: T, sigma: T, count: usize) -> Vec<T> {
    let one = T::one();
    let prefactor = gamma_ratio(rho + one, one, alpha).unwrap_or(T::zero());
    let mut out = running(count, |n| {
        let nf: T = real(n);
        sigma * (nf - rho) / (alpha + one + nf)
    });
    for x in &mut out {
        *x *= prefactor;
    }
    out
}

// (1-u)^{-α-ρ-1} Γ(α+ρ+1)/Γ(α+1) ₂F₁(-n, α+ρ+1; α+1; 1/(1-u)).
//
// The terminating ₂F₁ cancels catastrophically when summed as written, so it
// is expanded through the generating function
// Σ_n (c)_n/n! ₂F₁(-n, b; c; x) t^n = (1-t)^{b-c} (1-(1-x)t)^{-b},
// whose coefficients are a convolution of two well-behaved sequences.
fn exp_power<T: Real>(rho: T, u: T, alpha: T, count: usize) -> Vec<T> {
    let one = T::one();
    let b = alpha + rho + one;
    let c = alpha + one;
    let y = one - one / (one - u);
    let prefactor = (one - u).powf(-b) * gamma_ratio(rho + one, one, alpha).unwrap_or(T::zero());
    let left = running(count, |j| (real::<T>(j) - rho) / real(j + 1));
    let right = running(count, |k| (b + real(k)) * y / real(k + 1));
    let mut out = Vec::with_capacity(count);
    let mut scale = one; // n!/(c)_n
    for n in 0..count {
        if n > 0 {
            scale *= real::<T>(n) / (c + real(n - 1));
        }
        let mut acc = T::zero();
        for k in 0..=n {
            acc += left[n - k] * right[k];
        }
        out.push(prefactor * scale * acc);
    }
    out
}

// 2^{-a} Σ_ν ₂F₁(a+ν, c-b; c+ν; 1/2) (a)_ν (b)_ν / ((c)_ν ν!) (z/2)^ν / (α+1)_ν
fn hyp_ratio_closed<T: Real>(a: T, b: T, c: T, alpha: T, z: T, ctx: &PrecisionContext) -> Result<T> {
    let one = T::one();
    let half = T::from_f64(0.5);
    let d = ctx.effective_digits::<T>() as i32;
    let tol = T::from_f64(10.0).powi(-(d + 2));
    let mut weight = one;
    let mut acc = T::zero();
    let mut small = 0;
    for nu in 0..10_000usize {
        let nf: T = real(nu);
        let term = weight * direct_2f1(a + nf, c - b, c + nf, half, ctx)?;
        acc += term;
        if term.abs() <= tol * acc.abs() {
            small += 1;
            if small == 2 {
                return Ok(T::from_f64(2.0).powf(-a) * acc);
            }
        } else {
            small = 0;
        }
        weight *= (a + nf) * (b + nf) * z * half / ((c + nf) * (nf + one) * (alpha + one + nf));
    }
    Err(Error::OutOfScope("closed-form series did not converge"))
}

/// Power-series coefficients of `2^ρ Γ(ρ+α+1)/Γ(α+1) ₁F₁(-ρ; α+1; z/2)`.
pub fn alt_power_gammas<T: Real>(rho: T, alpha: T, count: usize) -> Result<Vec<T>> {
    let one = T::one();
    let half = T::from_f64(0.5);
    let first = T::from_f64(2.0).powf(rho) * gamma_ratio(rho + one, one, alpha)?;
    let mut out = vec![first];
    for nu in 1..count {
        let nf: T = real(nu - 1);
        let prev = out[nu - 1];
        out.push(prev * (nf - rho) * half / ((alpha + one + nf) * (nf + one)));
    }
    out.truncate(count);
    Ok(out)
}
