//! The scalar abstraction shared by every module.
//!
//! All algorithms in this crate are generic over [`Real`]. Two backends are
//! provided: plain `f64` (about 16 significant digits) and
//! [`DoubleDouble`](super::DoubleDouble) (about 32 significant digits, done in
//! software). The backend is picked by the caller through the type parameter;
//! there is no global precision state.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Debug;
use core::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Real number at a fixed working precision.
pub trait Real:
    Copy
    + Debug
    + Default
    + PartialEq
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
{
    /// Significant decimal digits carried by this backend.
    const DIGITS: u32;

    fn from_f64(x: f64) -> Self;
    /// Nearest `f64`.
    fn to_f64(self) -> f64;

    /// The exact value as a sum of `f64` components, most significant first.
    fn components(self) -> Vec<f64>;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    fn one() -> Self {
        Self::from_f64(1.0)
    }

    fn from_usize(n: usize) -> Self {
        Self::from_f64(n as f64)
    }

    fn from_i64(n: i64) -> Self {
        Self::from_f64(n as f64)
    }

    /// Unit roundoff of the backend.
    fn epsilon() -> Self;
    fn pi() -> Self;

    fn abs(self) -> Self;
    fn sqrt(self) -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn floor(self) -> Self;

    /// `ln Γ(x)` for `x > 0`; callers check the domain.
    fn ln_gamma_positive(self) -> Self;

    fn is_finite(self) -> bool {
        self.to_f64().is_finite()
    }

    fn powf(self, y: Self) -> Self {
        (y * self.ln()).exp()
    }

    fn powi(self, n: i32) -> Self {
        let mut base = if n < 0 { Self::one() / self } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    fn is_sign_negative(self) -> bool {
        self.to_f64().is_sign_negative()
    }

    fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Parses a plain decimal literal such as `-1.25e-3`.
    fn parse_decimal(text: &str) -> Option<Self> {
        parse_decimal_generic(text)
    }

    /// Rounds to `count` significant digits.
    ///
    /// Returns `(negative, digits, exponent)` with the value equal to
    /// `0.d1 d2 ... d_count × 10^exponent`; `None` for zero or non-finite input.
    fn significant_digits(self, count: usize) -> Option<(bool, Vec<u8>, i32)> {
        significant_digits_generic(self, count)
    }
}

impl Real for f64 {
    const DIGITS: u32 = 16;

    #[inline]
    fn from_f64(x: f64) -> Self {
        x
    }

    #[inline]
    fn to_f64(self) -> f64 {
        self
    }

    fn components(self) -> Vec<f64> {
        alloc::vec![self]
    }

    #[inline]
    fn epsilon() -> Self {
        f64::EPSILON
    }

    #[inline]
    fn pi() -> Self {
        core::f64::consts::PI
    }

    #[inline]
    fn abs(self) -> Self {
        libm::fabs(self)
    }

    #[inline]
    fn sqrt(self) -> Self {
        libm::sqrt(self)
    }

    #[inline]
    fn exp(self) -> Self {
        libm::exp(self)
    }

    #[inline]
    fn ln(self) -> Self {
        libm::log(self)
    }

    #[inline]
    fn floor(self) -> Self {
        libm::floor(self)
    }

    fn ln_gamma_positive(self) -> Self {
        libm::lgamma(self)
    }

    #[inline]
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }

    #[inline]
    fn powf(self, y: Self) -> Self {
        libm::pow(self, y)
    }

    fn parse_decimal(text: &str) -> Option<Self> {
        text.trim().parse::<f64>().ok().filter(|x| x.is_finite())
    }

    fn significant_digits(self, count: usize) -> Option<(bool, Vec<u8>, i32)> {
        if self == 0.0 || !self.is_finite() || count == 0 {
            return None;
        }
        // `{:e}` is correctly rounded: "d.ddddde<exp>".
        let text = alloc::format!("{:.*e}", count - 1, libm::fabs(self));
        let (mantissa, exponent) = text.split_once('e')?;
        let exponent: i32 = exponent.parse().ok()?;
        let digits: Vec<u8> = mantissa.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();
        Some((self < 0.0, digits, exponent + 1))
    }
}

fn parse_decimal_generic<T: Real>(text: &str) -> Option<T> {
    let text = text.trim();
    let (negative, body) = match text.as_bytes().first()? {
        b'-' => (true, &text[1..]),
        b'+' => (false, &text[1..]),
        _ => (false, text),
    };
    let (mantissa, exponent) = match body.find(['e', 'E']) {
        Some(pos) => (&body[..pos], body[pos + 1..].parse::<i32>().ok()?),
        None => (body, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let ten = T::from_f64(10.0);
    let mut value = T::zero();
    for ch in int_part.chars().chain(frac_part.chars()) {
        let d = ch.to_digit(10)?;
        value = value * ten + T::from_f64(d as f64);
    }
    let scale = exponent - frac_part.len() as i32;
    if scale != 0 {
        let p = ten.powi(scale.abs());
        value = if scale > 0 { value * p } else { value / p };
    }
    if !value.is_finite() {
        return None;
    }
    Some(if negative { -value } else { value })
}

fn significant_digits_generic<T: Real>(x: T, count: usize) -> Option<(bool, Vec<u8>, i32)> {
    if x == T::zero() || !x.is_finite() || count == 0 {
        return None;
    }
    let negative = x < T::zero();
    let x = x.abs();
    let ten = T::from_f64(10.0);
    // Scale into [1, 10).
    let mut exp10 = libm::floor(libm::log10(x.to_f64())) as i32;
    let mut y = if exp10 >= 0 { x / ten.powi(exp10) } else { x * ten.powi(-exp10) };
    while y >= ten {
        y /= ten;
        exp10 += 1;
    }
    while y < T::one() {
        y *= ten;
        exp10 -= 1;
    }
    // One guard digit, then round half up on it.
    let mut digits: Vec<u8> = Vec::with_capacity(count + 1);
    for _ in 0..=count {
        let d = y.floor().to_f64().clamp(0.0, 9.0);
        digits.push(d as u8);
        y = (y - T::from_f64(d)) * ten;
    }
    let guard = digits.pop().unwrap_or(0);
    if guard >= 5 {
        let mut i = digits.len();
        loop {
            if i == 0 {
                digits.insert(0, 1);
                digits.pop();
                exp10 += 1;
                break;
            }
            i -= 1;
            if digits[i] == 9 {
                digits[i] = 0;
            } else {
                digits[i] += 1;
                break;
            }
        }
    }
    Some((negative, digits, exp10 + 1))
}

/// Joins rounded digits into a plain string, e.g. `"597156373980973"`.
pub fn digit_string(digits: &[u8]) -> String {
    digits.iter().map(|d| char::from(b'0' + d)).collect()
}
