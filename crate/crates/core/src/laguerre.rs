//! Generalized Laguerre polynomials `L_n^(α)` and finite Laguerre sums.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numkernel::{ln_gamma, narrow, pochhammer, real, widen, DoubleDouble, Real};

/// The superscript `α` of a Laguerre family; always `α > -1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LaguerreParams<T> {
    alpha: T,
}

impl<T: Real> LaguerreParams<T> {
    pub fn new(alpha: T) -> Result<Self> {
        if !alpha.is_finite() || !(alpha > -T::one()) {
            return Err(Error::InvalidParameter("alpha must be greater than -1"));
        }
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }
}

/// A truncated Laguerre series `Σ_{n=0}^{N} λ_n L_n^(α)(z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteLaguerreSum<T> {
    params: LaguerreParams<T>,
    coeffs: Vec<T>,
}

impl<T: Real> FiniteLaguerreSum<T> {
    pub fn new(params: LaguerreParams<T>, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::TooFewCoefficients { needed: 1, available: 0 });
        }
        Ok(Self { params, coeffs })
    }

    pub fn params(&self) -> LaguerreParams<T> {
        self.params
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Highest index `N`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Evaluates the sum at `z`, running the recurrence once.
    pub fn eval(&self, z: T) -> T {
        let alpha = self.params.alpha;
        let mut prev = T::zero();
        let mut cur = T::one();
        let mut acc = self.coeffs[0];
        for (k, &lambda) in self.coeffs.iter().enumerate().skip(1) {
            let next = step(alpha, k - 1, z, prev, cur);
            prev = cur;
            cur = next;
            acc += lambda * cur;
        }
        acc
    }
}

// L_{k+1} from L_k and L_{k-1}.
#[inline]
fn step<T: Real>(alpha: T, k: usize, z: T, prev: T, cur: T) -> T {
    let kf: T = real(k);
    ((real::<T>(2 * k + 1) + alpha - z) * cur - (kf + alpha) * prev) / real(k + 1)
}

/// `L_n^(α)(z)` by the three-term recurrence
/// `(k+1) L_{k+1} = (2k+1+α-z) L_k - (k+α) L_{k-1}`.
pub fn laguerre_eval<T: Real>(params: &LaguerreParams<T>, n: usize, z: T) -> T {
    let alpha = params.alpha;
    let mut prev = T::zero();
    let mut cur = T::one();
    for k in 0..n {
        let next = step(alpha, k, z, prev, cur);
        prev = cur;
        cur = next;
    }
    cur
}

/// `L_n^(α)(z)` from its terminating hypergeometric sum.
///
/// Cancels badly for large `n` and `z`; kept as a reference.
pub fn laguerre_explicit<T: Real>(params: &LaguerreParams<T>, n: usize, z: T) -> T {
    let a1 = params.alpha + T::one();
    let mut term = T::one();
    let mut acc = T::one();
    for nu in 0..n {
        let nuf: T = real(nu);
        term *= (nuf - real(n)) * z / ((a1 + nuf) * (nuf + T::one()));
        acc += term;
    }
    acc * pochhammer(a1, n) / pochhammer(T::one(), n)
}

/// `𝒞_n = [Γ(α+n+1)/n!]^(1/2) λ_n`.
pub fn normalized_coefficient<T: Real>(params: &LaguerreParams<T>, n: usize, lambda_n: T) -> T {
    norm_weight(params.alpha, n).sqrt() * lambda_n
}

// Γ(α+n+1)/n!, via a running product to stay exact for integer α.
fn norm_weight<T: Real>(alpha: T, n: usize) -> T {
    let gamma = ln_gamma(alpha + T::one()).map(T::exp).unwrap_or_else(|_| T::one());
    let mut w = gamma;
    for k in 1..=n {
        let kf: T = real(k);
        w *= (alpha + kf) / kf;
    }
    w
}

/// `{Σ Γ(α+n+1)/n! |λ_n|²}^(1/2)` over the available coefficients.
pub fn norm_estimate<T: Real>(sum: &FiniteLaguerreSum<T>) -> T {
    let alpha = sum.params.alpha;
    let mut w = ln_gamma(alpha + T::one()).map(T::exp).unwrap_or_else(|_| T::one());
    let mut acc = T::zero();
    for (n, &lambda) in sum.coeffs.iter().enumerate() {
        if n > 0 {
            let nf: T = real(n);
            w *= (alpha + nf) / nf;
        }
        acc += w * lambda * lambda;
    }
    acc.sqrt()
}

/// Power-series coefficients `c_0 ... c_N` of a finite Laguerre sum.
///
/// `c_ν = ((-1)^ν/ν!) Σ_{μ=0}^{N-ν} ((α+ν+1)_μ/μ!) λ_{μ+ν}`. The inner sums
/// are accumulated in double-double and rounded once.
pub fn finite_rearrange<T: Real>(sum: &FiniteLaguerreSum<T>) -> Vec<T> {
    if T::DIGITS > DoubleDouble::DIGITS {
        return rearrange(sum.params.alpha, &sum.coeffs);
    }
    let lambda: Vec<DoubleDouble> = sum.coeffs.iter().map(|&x| widen(x)).collect();
    rearrange(widen(sum.params.alpha), &lambda).into_iter().map(narrow).collect()
}

fn rearrange<T: Real>(alpha: T, lambda: &[T]) -> Vec<T> {
    let n_max = lambda.len() - 1;
    let mut out = Vec::with_capacity(lambda.len());
    let mut prefactor = T::one();
    for nu in 0..=n_max {
        if nu > 0 {
            prefactor = -prefactor / real(nu);
        }
        let base = alpha + real(nu + 1);
        let mut weight = T::one();
        let mut acc = T::zero();
        for mu in 0..=(n_max - nu) {
            if mu > 0 {
                weight *= (base + real(mu - 1)) / real(mu);
            }
            acc += weight * lambda[mu + nu];
        }
        out.push(prefactor * acc);
    }
    out
}

/// Horner evaluation of `Σ c_k z^k`, carried in double-double.
pub fn eval_polynomial<T: Real>(coeffs: &[T], z: T) -> T {
    if T::DIGITS > DoubleDouble::DIGITS {
        return horner(coeffs.iter().copied(), z);
    }
    narrow(horner(coeffs.iter().map(|&c| widen(c)), widen(z)))
}

fn horner<T: Real, I: DoubleEndedIterator<Item = T>>(coeffs: I, z: T) -> T {
    coeffs.rev().fold(T::zero(), |acc, c| acc * z + c)
}

/// `∫_0^∞ z^α e^{-z} L_m^(α)(z) L_n^(α)(z) dz`, for `m, n ≤ 30`.
///
/// Both polynomials are expanded and every moment is reduced to
/// `Γ(α+1) (α+1)_k`. The remaining rational factor is summed exactly in
/// big-integer arithmetic, so only `Γ(α+1)` and one final division are rounded.
pub fn orthogonality_check<T: Real>(params: &LaguerreParams<T>, m: usize, n: usize) -> Result<T> {
    if m > 30 || n > 30 {
        return Err(Error::OutOfScope("orthogonality check is limited to degrees up to 30"));
    }
    let alpha = exact(params.alpha);
    let a = exact_poly(&alpha, m);
    let b = exact_poly(&alpha, n);
    let a1 = &alpha + BigRational::one();
    // (α+1)_k for k = 0..=m+n
    let mut moments = vec![BigRational::one()];
    for k in 0..(m + n) {
        let next = &moments[k] * (&a1 + BigRational::from_integer(BigInt::from(k)));
        moments.push(next);
    }
    let mut total = BigRational::zero();
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            total += ai * bj * &moments[i + j];
        }
    }
    let gamma = ln_gamma(params.alpha + T::one())?.exp();
    Ok(gamma * rational_to_real(&total))
}

// Coefficients of L_n^(α) in powers of z: (-1)^i C(n,i) (α+i+1)_{n-i} / n!.
fn exact_poly(alpha: &BigRational, n: usize) -> Vec<BigRational> {
    let one = BigRational::one();
    let mut n_fact = BigInt::one();
    for k in 2..=n {
        n_fact *= BigInt::from(k);
    }
    let mut out = Vec::with_capacity(n + 1);
    let mut binom = BigInt::one();
    for i in 0..=n {
        if i > 0 {
            binom = binom * BigInt::from(n - i + 1) / BigInt::from(i);
        }
        let mut rising = one.clone();
        let base = alpha + BigRational::from_integer(BigInt::from(i + 1));
        for k in 0..(n - i) {
            rising *= &base + BigRational::from_integer(BigInt::from(k));
        }
        let mut c = rising * BigRational::from_integer(binom.clone()) / BigRational::from_integer(n_fact.clone());
        if i % 2 == 1 {
            c = -c;
        }
        out.push(c);
    }
    out
}

fn exact<T: Real>(x: T) -> BigRational {
    x.components().into_iter().filter_map(BigRational::from_float).fold(BigRational::zero(), |acc, c| acc + c)
}

fn bigint_to_real<T: Real>(x: &BigInt) -> T {
    let (sign, limbs) = x.to_u64_digits();
    let base = T::from_f64(18_446_744_073_709_551_616.0); // 2^64
    let mut acc = T::zero();
    for &limb in limbs.iter().rev() {
        let hi = T::from_f64((limb >> 32) as f64) * T::from_f64(4_294_967_296.0);
        acc = acc * base + hi + T::from_f64((limb & 0xffff_ffff) as f64);
    }
    if sign == Sign::Minus {
        -acc
    } else {
        acc
    }
}

fn rational_to_real<T: Real>(x: &BigRational) -> T {
    if x.is_zero() {
        return T::zero();
    }
    // Integer quotient carrying about 128 significant bits, then rescale.
    let num = x.numer().abs();
    let den = x.denom().abs();
    let shift = den.bits() as i64 - num.bits() as i64 + 128;
    let q = if shift >= 0 { (num << shift as usize) / den } else { num / (den << (-shift) as usize) };
    let mut value = bigint_to_real::<T>(&q) * T::from_f64(2.0).powi(-(shift as i32));
    if x.is_negative() {
        value = -value;
    }
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::DoubleDouble;

    fn p(alpha: f64) -> LaguerreParams<f64> {
        LaguerreParams::new(alpha).unwrap()
    }

    #[test]
    fn rejects_alpha_at_or_below_minus_one() {
        assert!(LaguerreParams::new(-1.0_f64).is_err());
        assert!(LaguerreParams::new(f64::NAN).is_err());
        assert!(LaguerreParams::new(-0.999_f64).is_ok());
    }

    #[test]
    fn low_degree_values() {
        assert_eq!(laguerre_eval(&p(0.7), 0, 3.0), 1.0);
        assert!((laguerre_eval(&p(0.7), 1, 3.0) - (0.7 + 1.0 - 3.0)).abs() < 1e-15);
        assert!((laguerre_eval(&p(0.0), 2, 2.0) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn normalized_coefficient_examples() {
        assert!((normalized_coefficient(&p(0.0), 0, 1.0) - 1.0).abs() < 1e-15);
        assert!((normalized_coefficient(&p(0.0), 3, 1.0) - 1.0).abs() < 1e-15);
        assert!((normalized_coefficient(&p(1.0), 2, 0.5) - 0.5 * 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn norm_estimate_examples() {
        let zero = FiniteLaguerreSum::new(p(0.0), vec![0.0; 3]).unwrap();
        assert_eq!(norm_estimate(&zero), 0.0);
        let one = FiniteLaguerreSum::new(p(0.0), vec![1.0]).unwrap();
        assert!((norm_estimate(&one) - 1.0).abs() < 1e-15);
        let two = FiniteLaguerreSum::new(p(0.0), vec![1.0, 1.0]).unwrap();
        assert!((norm_estimate(&two) - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn finite_rearrange_examples() {
        let f = FiniteLaguerreSum::new(p(0.0), vec![1.0]).unwrap();
        assert_eq!(finite_rearrange(&f), vec![1.0]);
        let f = FiniteLaguerreSum::new(p(0.0), vec![1.0, -1.0]).unwrap();
        assert_eq!(finite_rearrange(&f), vec![0.0, 1.0]);
        let f = FiniteLaguerreSum::new(p(0.0), vec![1.0, 1.0]).unwrap();
        assert_eq!(finite_rearrange(&f), vec![2.0, -1.0]);
        assert!(FiniteLaguerreSum::new(p(0.0), Vec::new()).is_err());
    }

    #[test]
    fn orthogonality_examples() {
        assert_eq!(orthogonality_check(&p(0.0), 0, 1).unwrap(), 0.0);
        assert!((orthogonality_check(&p(0.0), 2, 2).unwrap() - 1.0).abs() < 1e-15);
        assert!((orthogonality_check(&p(1.0), 3, 3).unwrap() - 4.0).abs() < 1e-14);
        assert!(orthogonality_check(&p(0.0), 31, 0).is_err());
    }

    #[test]
    fn exact_conversion_round_trips() {
        let x = DoubleDouble::ONE / DoubleDouble::from_f64(3.0);
        let back: DoubleDouble = rational_to_real(&exact(x));
        assert_eq!(back, x);
        let big = BigRational::from_integer(BigInt::from(10).pow(40)) / BigRational::from_integer(BigInt::from(7));
        let v: f64 = rational_to_real(&big);
        assert!((v / (1e40 / 7.0) - 1.0).abs() < 1e-15);
    }
}
