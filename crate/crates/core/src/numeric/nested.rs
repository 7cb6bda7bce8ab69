//! Nested chain sums
//!
//! ```text
//!   S = sum_{1 <= k_1 < k_2 < ... < k_r}  g_1(k_1) g_2(k_2) ... g_r(k_r)
//! ```
//!
//! where every level `g_i` is a product of powers `(a k - b)^(-s)` with
//! `a >= 1`, `0 <= b < a`. Euler-Zagier sums, the odd and even chains of the
//! sharp series, and the sign-split pieces of the alternating double series
//! are all of this form.
//!
//! Splitting every index at the cutoff `M`, the sum becomes
//! `sum_j Z_j * V_j`: `Z_j` runs `k_1 < ... < k_j < M` and is summed directly;
//! `V_j` runs `M <= k_{j+1} < ... < k_r` and is evaluated from an exact
//! rational expansion in `1/k`. Working from the outermost level inwards,
//! each partial tail `sum_{k >= n} h(k)` with `h(k) = sum_e h_e k^(-e)` is
//! replaced by its Euler-Maclaurin expansion in `1/n`, which keeps the next
//! level's summand a plain power series.
//!
//! Error: rounding is tracked by [`BigFloat`]; the expansion is truncated at
//! exponent `E = weight + 2 * em_order`, and the truncation is charged twice
//! the magnitude of the next six omitted orders at `M`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use super::bigfloat::BigFloat;
use super::config::EvalConfig;
use crate::algebra::bernoulli::bernoulli;
use crate::algebra::rational::{binomial, factorial, Rational};
use crate::error::{Error, Result};

/// `(scale * k - shift)^(-exponent)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearPower {
    pub scale: u32,
    pub shift: u32,
    pub exponent: u32,
}

impl LinearPower {
    pub fn new(scale: u32, shift: u32, exponent: u32) -> Self {
        Self {
            scale,
            shift,
            exponent,
        }
    }

    /// `k^(-s)`.
    pub fn plain(s: u32) -> Self {
        Self::new(1, 0, s)
    }

    /// `(2k)^(-s)`.
    pub fn even(s: u32) -> Self {
        Self::new(2, 0, s)
    }

    /// `(2k - 1)^(-s)`.
    pub fn odd(s: u32) -> Self {
        Self::new(2, 1, s)
    }
}

pub type Level = Vec<LinearPower>;

/// Extra orders carried past the evaluation cap for the error estimate.
const TAIL_ORDERS: usize = 6;

type Series = Vec<Rational>;

fn series_mul(a: &Series, b: &Series, cap: usize) -> Series {
    let mut out = vec![Rational::zero(); cap + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(cap + 1 - i.min(cap + 1)) {
            if !y.is_zero() && i + j <= cap {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn level_series(level: &Level, cap: usize) -> Series {
    let mut acc = vec![Rational::zero(); cap + 1];
    acc[0] = Rational::one();
    for f in level {
        let s = f.exponent as usize;
        let mut ser = vec![Rational::zero(); cap + 1];
        let a_pow = Rational::from_integer(num_traits::pow(BigInt::from(f.scale), s)).recip();
        let ratio = Rational::new(BigInt::from(f.shift), BigInt::from(f.scale));
        let mut rj = Rational::one();
        for j in 0..=cap.saturating_sub(s) {
            if s + j > cap {
                break;
            }
            let c = Rational::from_integer(binomial((s + j - 1) as i64, j as i64));
            ser[s + j] = &a_pow * c * &rj;
            if f.shift == 0 {
                break;
            }
            rj *= &ratio;
        }
        acc = series_mul(&acc, &ser, cap);
    }
    acc
}

static TAIL_CACHE: Lazy<Mutex<HashMap<(usize, usize), Arc<Series>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Asymptotic expansion of `sum_{k >= n} k^(-e)` in powers of `1/n`,
/// through exponent `cap`, omitting the `n^(-e)` boundary term (added by
/// the caller with sign `+1/2` for `k >= n` and `-1/2` for `k > n`).
fn tail_expansion(e: usize, cap: usize) -> Arc<Series> {
    if let Some(s) = TAIL_CACHE.lock().unwrap().get(&(e, cap)) {
        return s.clone();
    }
    let mut s = vec![Rational::zero(); cap + 1];
    s[e - 1] = Rational::new(BigInt::one(), BigInt::from(e - 1));
    let mut i = 1;
    while e - 1 + 2 * i <= cap {
        // B_{2i}/(2i)! * e (e+1) ... (e+2i-2)
        let mut rising = BigInt::one();
        for t in 0..(2 * i - 1) {
            rising *= BigInt::from(e + t);
        }
        s[e - 1 + 2 * i] =
            bernoulli(2 * i) * Rational::new(rising, factorial(2 * i));
        i += 1;
    }
    let s = Arc::new(s);
    TAIL_CACHE.lock().unwrap().insert((e, cap), s.clone());
    s
}

/// Expansion of `sum_{k >= n} h(k)` (`strict = false`) or `sum_{k > n} h(k)`.
fn tail_sum(h: &Series, cap: usize, strict: bool) -> Result<Series> {
    let mut out = vec![Rational::zero(); cap + 1];
    let half = Rational::new(BigInt::from(if strict { -1 } else { 1 }), BigInt::from(2));
    for (e, c) in h.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if e < 2 {
            return Err(Error::Divergent(format!(
                "summand decays like k^-{e}; the tail sum does not converge"
            )));
        }
        let t = tail_expansion(e, cap);
        for (j, tj) in t.iter().enumerate() {
            if !tj.is_zero() {
                out[j] += c * tj;
            }
        }
        out[e] += c * &half;
    }
    Ok(out)
}

/// `sum_e c_e M^(-e)` split into the value through `emax` and the magnitude
/// of the remaining orders.
fn evaluate_at(series: &Series, m: u64, emax: usize) -> (Rational, f64) {
    let mut value = Rational::zero();
    let mut tail = 0.0f64;
    let inv_m = Rational::new(BigInt::one(), BigInt::from(m));
    let mut p = Rational::one();
    let mf = (m as f64).ln();
    for (e, c) in series.iter().enumerate() {
        if e > 0 {
            p *= &inv_m;
        }
        if c.is_zero() {
            continue;
        }
        if e <= emax {
            value += c * &p;
        } else {
            let mag = rational_log_abs(c) - e as f64 * mf;
            tail += mag.exp();
        }
    }
    (value, tail)
}

fn rational_log_abs(r: &Rational) -> f64 {
    let ln = |x: &BigInt| {
        let b = x.bits();
        let shift = b.saturating_sub(60);
        let top = (x.abs() >> shift as usize).to_f64().unwrap();
        top.ln() + shift as f64 * std::f64::consts::LN_2
    };
    ln(r.numer()) - ln(r.denom())
}

/// Evaluate the chain sum; `levels[0]` carries the smallest index.
pub fn chain_sum(levels: &[Level], cfg: &EvalConfig) -> Result<BigFloat> {
    cfg.validate()?;
    let r = levels.len();
    if r == 0 {
        return Err(Error::InvalidArgument("empty chain".into()));
    }
    for f in levels.iter().flatten() {
        if f.scale == 0 || f.shift >= f.scale || f.exponent == 0 {
            return Err(Error::InvalidArgument(format!("bad level factor {f:?}")));
        }
    }
    let bits = cfg.working_bits();
    let m = cfg.cutoff;
    let weight: usize = levels.iter().flatten().map(|f| f.exponent as usize).sum();
    let emax = weight + 2 * cfg.em_order as usize;
    let cap = emax + TAIL_ORDERS;

    // Suffix values V_j = sum over M <= k_{j+1} < ... < k_r.
    let mut v_vals: Vec<BigFloat> = vec![BigFloat::zero(bits); r + 1];
    v_vals[r] = BigFloat::from_int(1, bits);
    let mut b = vec![Rational::zero(); cap + 1];
    b[0] = Rational::one();
    for j in (0..r).rev() {
        let g = level_series(&levels[j], cap);
        let h = series_mul(&g, &b, cap);
        let u = tail_sum(&h, cap, false)?;
        let (val, trunc) = evaluate_at(&u, m, emax);
        v_vals[j] = BigFloat::from_rational(&val, bits).with_extra_error(2.0 * trunc);
        if j > 0 {
            b = tail_sum(&h, cap, true)?;
        }
    }

    // Prefix sums Z_j over k_1 < ... < k_j < M.
    let mut z: Vec<BigFloat> = vec![BigFloat::zero(bits); r + 1];
    z[0] = BigFloat::from_int(1, bits);
    let mut bases: Vec<(u32, u32)> = levels.iter().flatten().map(|f| (f.scale, f.shift)).collect();
    bases.sort();
    bases.dedup();
    let max_exp: HashMap<(u32, u32), u32> = bases
        .iter()
        .map(|&bs| {
            let e = levels
                .iter()
                .flatten()
                .filter(|f| (f.scale, f.shift) == bs)
                .map(|f| f.exponent)
                .max()
                .unwrap();
            (bs, e)
        })
        .collect();
    for k in 1..m {
        let mut powers: HashMap<(u32, u32), Vec<BigFloat>> = HashMap::new();
        for &(a, s) in &bases {
            let d = BigInt::from(a as u64 * k - s as u64);
            let inv = BigFloat::from_int(1, bits).div_int(&d);
            let mut ps = vec![BigFloat::from_int(1, bits), inv.clone()];
            for _ in 2..=max_exp[&(a, s)] {
                let next = ps.last().unwrap().mul(&inv);
                ps.push(next);
            }
            powers.insert((a, s), ps);
        }
        for j in (1..=r).rev() {
            if z[j - 1].mantissa().is_zero() && z[j - 1].error_bound() == 0.0 {
                continue;
            }
            let mut gk = BigFloat::from_int(1, bits);
            for f in &levels[j - 1] {
                gk = gk.mul(&powers[&(f.scale, f.shift)][f.exponent as usize]);
            }
            let term = gk.mul(&z[j - 1]);
            z[j] = z[j].add(&term);
        }
    }

    let mut total = BigFloat::zero(bits);
    for j in 0..=r {
        total = total.add(&z[j].mul(&v_vals[j]));
    }
    Ok(total)
}
