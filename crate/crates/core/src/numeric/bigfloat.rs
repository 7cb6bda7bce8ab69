//! Fixed-point binary numbers with a rigorous absolute error bound.
//!
//! A value is `mant / 2^bits` and the true quantity it stands for lies within
//! `err` of it. Every operation rounds the mantissa to nearest and adds the
//! rounding to `err`; propagated terms are multiplied by `ROUND_UP` so the
//! `f64` bookkeeping itself never undercounts. The fixed-point layout keeps
//! all arithmetic exact on big integers, which suits the bounded-magnitude
//! quantities (zeta values, residuals) this crate works with.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

use crate::algebra::rational::Rational;

const ROUND_UP: f64 = 1.0 + 8.0 * f64::EPSILON;

/// Largest supported fraction size; keeps `2^-bits` representable as `f64`.
pub const MAX_BITS: u32 = 1000;

#[derive(Clone, Debug)]
pub struct BigFloat {
    mant: BigInt,
    bits: u32,
    err: f64,
}

/// `2^e` as an `f64`, rounded away from zero when it would underflow.
pub fn pow2_f64(e: i64) -> f64 {
    if e < -1074 {
        f64::from_bits(1)
    } else if e > 1023 {
        f64::INFINITY
    } else {
        (e as f64).exp2()
    }
}

fn ulp(bits: u32) -> f64 {
    pow2_f64(-(bits as i64))
}

/// Round `x / 2^shift` to nearest.
fn round_shift(x: &BigInt, shift: u32) -> BigInt {
    if shift == 0 {
        return x.clone();
    }
    let half = BigInt::one() << (shift - 1);
    (x + half) >> shift as usize
}

fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_mod_floor(d);
    if (r * 2u32).abs() >= d.abs() {
        if d.is_positive() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Upper bound for `|m| / 2^bits`.
fn magnitude(m: &BigInt, bits: u32) -> f64 {
    let nb = m.bits();
    if nb == 0 {
        return 0.0;
    }
    let shift = nb.saturating_sub(60);
    let carry = if shift > 0 { 1.0 } else { 0.0 };
    let top = (m.abs() >> shift as usize).to_f64().unwrap() + carry;
    top * pow2_f64(shift as i64 - bits as i64) * ROUND_UP
}

/// Lower bound for `|m| / 2^bits`.
fn magnitude_lower(m: &BigInt, bits: u32) -> f64 {
    let nb = m.bits();
    let shift = nb.saturating_sub(60);
    let top = (m.abs() >> shift as usize).to_f64().unwrap();
    top * pow2_f64(shift as i64 - bits as i64) / ROUND_UP
}

impl BigFloat {
    pub fn zero(bits: u32) -> Self {
        Self {
            mant: BigInt::zero(),
            bits,
            err: 0.0,
        }
    }

    pub fn from_int(n: i64, bits: u32) -> Self {
        Self::from_bigint(&BigInt::from(n), bits)
    }

    pub fn from_bigint(n: &BigInt, bits: u32) -> Self {
        Self {
            mant: n << bits as usize,
            bits,
            err: 0.0,
        }
    }

    pub fn from_rational(r: &Rational, bits: u32) -> Self {
        let num = r.numer() << bits as usize;
        let mant = round_div(&num, r.denom());
        let exact = (&mant * r.denom()) == num;
        Self {
            mant,
            bits,
            err: if exact { 0.0 } else { ulp(bits + 1) * ROUND_UP },
        }
    }

    /// Raw constructor: `mant / 2^bits` within `err`.
    pub fn from_parts(mant: BigInt, bits: u32, err: f64) -> Self {
        Self { mant, bits, err }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn error_bound(&self) -> f64 {
        self.err
    }

    pub fn with_extra_error(mut self, e: f64) -> Self {
        self.err = (self.err + e) * ROUND_UP;
        self
    }

    /// Upper bound for `|value|` (midpoint only).
    pub fn magnitude(&self) -> f64 {
        magnitude(&self.mant, self.bits)
    }

    pub fn to_f64(&self) -> f64 {
        let nb = self.mant.bits();
        let shift = nb.saturating_sub(60);
        let top = (&self.mant >> shift as usize).to_f64().unwrap();
        top * pow2_f64(shift as i64 - self.bits as i64)
    }

    /// Exact midpoint as a rational.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mant.clone(), BigInt::one() << self.bits as usize)
    }

    pub fn is_zero_within_bound(&self) -> bool {
        self.magnitude() <= self.err
    }

    pub fn rescale(&self, bits: u32) -> Self {
        use std::cmp::Ordering::*;
        match bits.cmp(&self.bits) {
            Equal => self.clone(),
            Greater => Self {
                mant: &self.mant << (bits - self.bits) as usize,
                bits,
                err: self.err,
            },
            Less => {
                let mant = round_shift(&self.mant, self.bits - bits);
                Self {
                    mant,
                    bits,
                    err: (self.err + ulp(bits + 1)) * ROUND_UP,
                }
            }
        }
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let b = self.bits.max(other.bits);
        (self.rescale(b), other.rescale(b))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        Self {
            mant: a.mant + b.mant,
            bits: a.bits,
            err: (a.err + b.err) * ROUND_UP,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            mant: -&self.mant,
            bits: self.bits,
            err: self.err,
        }
    }

    pub fn abs(&self) -> Self {
        Self {
            mant: self.mant.abs(),
            bits: self.bits,
            err: self.err,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let bits = a.bits;
        let prod = &a.mant * &b.mant;
        let mant = round_shift(&prod, bits);
        let exact = (&mant << bits as usize) == prod;
        let ma = a.magnitude();
        let mb = b.magnitude();
        let mut err = ma * b.err + mb * a.err + a.err * b.err;
        if !exact {
            err += ulp(bits + 1);
        }
        Self {
            mant,
            bits,
            err: err * ROUND_UP,
        }
    }

    /// Division; the bound becomes infinite if the divisor interval
    /// contains zero.
    pub fn div(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let bits = a.bits;
        if b.mant.is_zero() {
            return Self {
                mant: BigInt::zero(),
                bits,
                err: f64::INFINITY,
            };
        }
        let mant = round_div(&(&a.mant << bits as usize), &b.mant);
        let q = magnitude(&mant, bits);
        let denom = magnitude_lower(&b.mant, bits) - b.err;
        let err = if denom <= 0.0 {
            f64::INFINITY
        } else {
            ((a.err + q * b.err) / denom * ROUND_UP + ulp(bits)) * ROUND_UP
        };
        Self { mant, bits, err }
    }

    pub fn mul_int(&self, n: &BigInt) -> Self {
        let f = n.abs().to_f64().unwrap_or(f64::INFINITY);
        Self {
            mant: &self.mant * n,
            bits: self.bits,
            err: self.err * f * ROUND_UP,
        }
    }

    pub fn div_int(&self, n: &BigInt) -> Self {
        assert!(!n.is_zero(), "division by zero");
        let mant = round_div(&self.mant, n);
        let f = n.abs().to_f64().unwrap_or(f64::INFINITY);
        Self {
            mant,
            bits: self.bits,
            err: (self.err / f * ROUND_UP + ulp(self.bits + 1)) * ROUND_UP,
        }
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        self.mul_int(r.numer()).div_int(r.denom())
    }

    pub fn powu(&self, e: u32) -> Self {
        let mut result = Self::from_int(1, self.bits);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Decimal rendering of the midpoint with `digits` places after the point.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = num_traits::pow(BigInt::from(10), digits);
        let n = round_div(&(&self.mant * scale), &(BigInt::one() << self.bits as usize));
        let neg = n.sign() == Sign::Minus;
        let s = n.abs().to_string();
        let s = if s.len() <= digits {
            format!("{}{}", "0".repeat(digits + 1 - s.len()), s)
        } else {
            s
        };
        let (int, frac) = s.split_at(s.len() - digits);
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    /// Number of decimal places that the error bound supports, capped.
    pub fn correct_digits(&self, cap: usize) -> usize {
        if self.err <= 0.0 {
            return cap;
        }
        let d = -self.err.log10();
        if d.is_finite() && d > 0.0 {
            (d.floor() as usize).min(cap)
        } else {
            0
        }
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or_else(|| self.correct_digits(60).max(1));
        write!(f, "{} ± {:.3e}", self.to_decimal(digits), self.err)
    }
}

/// `atan(1/x)` scaled by `2^wb`, with the number of truncating divisions.
fn atan_inv(x: u32, wb: u32) -> (BigInt, u64) {
    let scale = BigInt::one() << wb as usize;
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut power = scale / BigInt::from(x);
    let mut sum = power.clone();
    let mut k = 1u64;
    let mut ops = 1u64;
    loop {
        power /= &x2;
        if power.is_zero() {
            break;
        }
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
        ops += 2;
    }
    (sum, ops + 1)
}

static PI_CACHE: Lazy<Mutex<HashMap<u32, BigFloat>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// `pi` at the given fraction size via Machin's formula. Memoized.
pub fn pi(bits: u32) -> BigFloat {
    if let Some(p) = PI_CACHE.lock().unwrap().get(&bits) {
        return p.clone();
    }
    let wb = bits + 32;
    let (a5, n5) = atan_inv(5, wb);
    let (a239, n239) = atan_inv(239, wb);
    let mant = a5 * 16 - a239 * 4;
    // Each truncating division is off by < 1 unit; the series tail is below
    // the last kept unit as well.
    let units = 16 * (n5 + 1) + 4 * (n239 + 1);
    let raw = BigFloat::from_parts(mant, wb, units as f64 * ulp(wb) * ROUND_UP);
    let p = raw.rescale(bits);
    PI_CACHE.lock().unwrap().insert(bits, p.clone());
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::ratio;

    #[test]
    fn pi_digits() {
        let p = pi(200);
        assert!(p.to_decimal(55).starts_with("3.14159265358979323846264338327950288419716939937510582"));
        assert!(p.error_bound() < 1e-58);
    }

    #[test]
    fn arithmetic_tracks_error() {
        let third = BigFloat::from_rational(&ratio(1, 3), 128);
        let one = third.mul_int(&BigInt::from(3));
        let d = one.sub(&BigFloat::from_int(1, 128));
        assert!(d.magnitude() <= d.error_bound());
        let q = BigFloat::from_int(1, 128).div(&BigFloat::from_int(3, 128));
        assert!(q.sub(&third).is_zero_within_bound());
    }

    #[test]
    fn division_by_uncertain_zero_is_unbounded() {
        let z = BigFloat::zero(64).with_extra_error(1e-3);
        assert!(BigFloat::from_int(1, 64).div(&z).error_bound().is_infinite());
    }

    #[test]
    fn decimal_rendering() {
        let x = BigFloat::from_rational(&ratio(-3, 4), 64);
        assert_eq!(x.to_decimal(3), "-0.750");
        assert_eq!(BigFloat::from_int(12, 64).to_decimal(0), "12");
        assert_eq!(BigFloat::from_rational(&ratio(1, 200), 64).to_decimal(3), "0.005");
    }

    #[test]
    fn powers() {
        let p = pi(256);
        let p4 = p.powu(4);
        let direct = p.mul(&p).mul(&p).mul(&p);
        assert!(p4.sub(&direct).is_zero_within_bound());
        assert!((p4.to_f64() - std::f64::consts::PI.powi(4)).abs() < 1e-12);
    }
}
