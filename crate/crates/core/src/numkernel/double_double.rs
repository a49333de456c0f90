//! Double-double arithmetic: an unevaluated sum `hi + lo` of two `f64` with
//! `|lo| <= ulp(hi) / 2`, giving roughly 32 significant decimal digits.
//!
//! The algorithms follow the classic error-free transformations of Dekker and
//! Knuth as used by the QD library.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use super::real::Real;

/// A double-double number.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1
const SPLIT_THRESHOLD: f64 = 6.696_928_794_914_17e299;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    if libm::fabs(a) > SPLIT_THRESHOLD {
        let a = a * 3.725_290_298_461_914e-9; // 2^-28
        let t = SPLITTER * a;
        let hi = t - (t - a);
        let lo = a - hi;
        (hi * 268_435_456.0, lo * 268_435_456.0)
    } else {
        let t = SPLITTER * a;
        let hi = t - (t - a);
        (hi, a - hi)
    }
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
}

impl DoubleDouble {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };
    pub const ONE: Self = Self { hi: 1.0, lo: 0.0 };
    pub const PI: Self = Self { hi: core::f64::consts::PI, lo: 1.224_646_799_147_353_2e-16 };
    pub const LN_2: Self = Self { hi: core::f64::consts::LN_2, lo: 2.319_046_813_846_299_6e-17 };
    pub const E: Self = Self { hi: core::f64::consts::E, lo: 1.445_646_891_729_250_2e-16 };
    pub const EPSILON: Self = Self { hi: 4.930_380_657_631_324e-32, lo: 0.0 }; // 2^-104

    /// Builds a value from two components, renormalising them.
    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = two_sum(hi, lo);
        Self { hi, lo }
    }

    #[inline]
    pub fn hi(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn lo(self) -> f64 {
        self.lo
    }

    /// Exact product of two `f64`.
    pub fn mul_f64_exact(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        Self { hi, lo }
    }

    fn mul_f64(self, b: f64) -> Self {
        let (p1, p2) = two_prod(self.hi, b);
        let p2 = p2 + self.lo * b;
        let (hi, lo) = quick_two_sum(p1, p2);
        Self { hi, lo }
    }

    fn ldexp(self, e: i32) -> Self {
        Self { hi: libm::scalbn(self.hi, e), lo: libm::scalbn(self.lo, e) }
    }

    fn square(self) -> Self {
        let (p1, p2) = two_prod(self.hi, self.hi);
        let p2 = p2 + 2.0 * self.hi * self.lo + self.lo * self.lo;
        let (hi, lo) = quick_two_sum(p1, p2);
        Self { hi, lo }
    }

    fn is_zero(self) -> bool {
        self.hi == 0.0
    }

    fn dd_exp(self) -> Self {
        const INV_K: f64 = 1.0 / 512.0;
        if self.hi <= -709.0 {
            return Self::ZERO;
        }
        if self.hi >= 709.0 {
            return Self { hi: f64::INFINITY, lo: 0.0 };
        }
        if self.is_zero() {
            return Self::ONE;
        }
        if self == Self::ONE {
            return Self::E;
        }
        let m = libm::floor(self.hi / Self::LN_2.hi + 0.5);
        let r = (self - Self::LN_2.mul_f64(m)).mul_f64(INV_K);
        // Taylor series of expm1(r), |r| <= ln2 / 1024.
        let thresh = INV_K * Self::EPSILON.hi;
        let mut p = r.square();
        let mut s = r + p.mul_f64(0.5);
        p *= r;
        let mut t = p / Self::from_f64(6.0);
        let mut i = 3usize;
        loop {
            s += t;
            p *= r;
            i += 1;
            t = p / Self::from_f64(FACTORIALS[i]);
            if libm::fabs(t.hi) <= thresh || i >= FACTORIALS.len() - 1 {
                s += t;
                break;
            }
        }
        // (1 + s)^512 through nine doublings of expm1.
        for _ in 0..9 {
            s = s.mul_f64(2.0) + s.square();
        }
        (s + Self::ONE).ldexp(m as i32)
    }

    fn dd_ln(self) -> Self {
        if self == Self::ONE {
            return Self::ZERO;
        }
        if self.hi <= 0.0 {
            return Self { hi: f64::NAN, lo: 0.0 };
        }
        // One Newton step on exp(x) = a.
        let x = Self::from_f64(libm::log(self.hi));
        x + self * (-x).dd_exp() - Self::ONE
    }

    fn dd_sqrt(self) -> Self {
        if self.is_zero() {
            return Self::ZERO;
        }
        if self.hi < 0.0 {
            return Self { hi: f64::NAN, lo: 0.0 };
        }
        let x = 1.0 / libm::sqrt(self.hi);
        let ax = self.hi * x;
        let diff = self - Self::mul_f64_exact(ax, ax);
        Self::new(ax, diff.hi * (x * 0.5))
    }
}

const FACTORIALS: [f64; 20] = [
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
];

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            Ordering::Equal => self.lo.partial_cmp(&other.lo),
            ord => Some(ord),
        }
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        if !hi.is_finite() {
            return Self { hi, lo: 0.0 };
        }
        Self { hi, lo }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let (p1, p2) = two_prod(self.hi, b.hi);
        let p2 = p2 + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p1, p2);
        if !hi.is_finite() {
            return Self { hi, lo: 0.0 };
        }
        Self { hi, lo }
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        if !q1.is_finite() {
            return Self { hi: q1, lo: 0.0 };
        }
        let mut r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        r -= b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (q1, q2) = quick_two_sum(q1, q2);
        Self { hi: q1, lo: q2 } + Self::from_f64(q3)
    }
}

impl AddAssign for DoubleDouble {
    #[inline]
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl SubAssign for DoubleDouble {
    #[inline]
    fn sub_assign(&mut self, b: Self) {
        *self = *self - b;
    }
}

impl MulAssign for DoubleDouble {
    #[inline]
    fn mul_assign(&mut self, b: Self) {
        *self = *self * b;
    }
}

impl DivAssign for DoubleDouble {
    #[inline]
    fn div_assign(&mut self, b: Self) {
        *self = *self / b;
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }
}

// Bernoulli numbers B_2, B_4, ..., B_30 as (numerator, denominator).
const BERNOULLI: [(f64, f64); 15] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
    (8615841276005.0, 14322.0),
];

impl Real for DoubleDouble {
    const DIGITS: u32 = 32;

    #[inline]
    fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    #[inline]
    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn components(self) -> Vec<f64> {
        alloc::vec![self.hi, self.lo]
    }

    fn from_usize(n: usize) -> Self {
        let hi = n as f64;
        let lo = (n as i128 - hi as i128) as f64;
        Self::new(hi, lo)
    }

    fn from_i64(n: i64) -> Self {
        let hi = n as f64;
        let lo = (n as i128 - hi as i128) as f64;
        Self::new(hi, lo)
    }

    #[inline]
    fn epsilon() -> Self {
        Self::EPSILON
    }

    #[inline]
    fn pi() -> Self {
        Self::PI
    }

    #[inline]
    fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    fn sqrt(self) -> Self {
        self.dd_sqrt()
    }

    fn exp(self) -> Self {
        self.dd_exp()
    }

    fn ln(self) -> Self {
        self.dd_ln()
    }

    fn floor(self) -> Self {
        let hi = libm::floor(self.hi);
        if hi == self.hi {
            Self::new(hi, libm::floor(self.lo))
        } else {
            Self { hi, lo: 0.0 }
        }
    }

    fn ln_gamma_positive(self) -> Self {
        // Shift up to x >= 30, then Stirling with 15 Bernoulli terms.
        let mut x = self;
        let mut shift = Self::ONE;
        let mut log_shift = Self::ZERO;
        while x.hi < 30.0 {
            shift *= x;
            x += Self::ONE;
            if shift.hi > 1e250 {
                log_shift += shift.dd_ln();
                shift = Self::ONE;
            }
        }
        log_shift += shift.dd_ln();
        let half_ln_two_pi = (Self::PI.mul_f64(2.0)).dd_ln().mul_f64(0.5);
        let mut series = (x - Self::from_f64(0.5)) * x.dd_ln() - x + half_ln_two_pi;
        let inv_x = Self::ONE / x;
        let inv_x2 = inv_x * inv_x;
        let mut power = inv_x;
        for (k, &(num, den)) in BERNOULLI.iter().enumerate() {
            let two_k = 2.0 * (k as f64 + 1.0);
            let coeff = Self::from_f64(num) / (Self::from_f64(den) * Self::from_f64(two_k * (two_k - 1.0)));
            series += coeff * power;
            power *= inv_x2;
        }
        series - log_shift
    }

    #[inline]
    fn is_finite(self) -> bool {
        self.hi.is_finite()
    }

    fn powi(self, n: i32) -> Self {
        let mut base = self;
        let mut e = n.unsigned_abs();
        let mut acc = Self::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base.square();
            e >>= 1;
        }
        if n < 0 {
            Self::ONE / acc
        } else {
            acc
        }
    }
}
