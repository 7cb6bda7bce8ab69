//! Values at equal and permuted even arguments.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::algebra::bernoulli::bernoulli;
use crate::algebra::expr::ZetaExpression;
use crate::algebra::rational::{binomial, factorial, pow2, Rational};
use crate::error::{Error, Result};
use crate::roots::datum::{build_root_datum, Family, RootSet};
use crate::roots::genfun::{p_coefficient, symmetric_sum_factor};

static C_MEMO: Lazy<Mutex<HashMap<(u32, u32), Rational>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Drops the memoized recursion coefficients.
pub fn clear_memo() {
    C_MEMO.lock().unwrap().clear();
}

/// `C_0 = 1`, `C_n = (1/2n) sum_{j=1}^n (-1)^j C(2nk, 2jk) B_{2jk} C_{n-j}`.
pub fn c_coefficient(n: u32, k: u32) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    if let Some(v) = C_MEMO.lock().unwrap().get(&(n, k)) {
        return v.clone();
    }
    let mut acc = Rational::zero();
    for j in 1..=n {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let term = Rational::from_integer(binomial((2 * n * k) as i64, (2 * j * k) as i64) * sign)
            * bernoulli((2 * j * k) as usize)
            * c_coefficient(n - j, k);
        acc += term;
    }
    let v = acc / Rational::from_integer(BigInt::from(2 * n));
    C_MEMO.lock().unwrap().insert((n, k), v.clone());
    v
}

/// `(2 pi i)^{2m}` as a rational multiple of `pi^{2m}`.
fn two_pi_i_even(m: u32) -> Rational {
    let c = pow2(2 * m as i64);
    if m % 2 == 1 {
        -c
    } else {
        c
    }
}

/// `zeta_r(2k, ..., 2k) = C_r (2 pi i)^{2kr} / (2kr)!`.
pub fn equal_arg_mzv(r: u32, k: u32) -> Result<ZetaExpression> {
    if r == 0 || k == 0 {
        return Err(Error::InvalidArgument(format!("equal_arg_mzv({r},{k}): need r, k >= 1")));
    }
    let w = 2 * k * r;
    let c = c_coefficient(r, k) * two_pi_i_even(k * r)
        / Rational::from_integer(factorial(w as usize));
    Ok(ZetaExpression::pi_multiple(c, w))
}

/// `P((2k)^r)` as implied by the recursion route:
/// `C_r 2^r r! (-1)^r ((2k)!)^r / (2kr)!`.
pub fn p_from_c_recursion(r: u32, k: u32) -> Rational {
    let mut c = c_coefficient(r, k) * pow2(r as i64) * Rational::from_integer(factorial(r as usize));
    if r % 2 == 1 {
        c = -c;
    }
    let fk = Rational::from_integer(factorial(2 * k as usize));
    for _ in 0..r {
        c *= &fk;
    }
    c / Rational::from_integer(factorial((2 * k * r) as usize))
}

fn natural_p(family: Family, k: &[u32]) -> Result<Rational> {
    let datum = build_root_datum(family, k.len())?;
    let zero = vec![Rational::zero(); datum.rank];
    p_coefficient(&datum, RootSet::natural(family), k, &zero)
}

/// Sum over all `r!` orderings of `k` of `zeta_r` (type C) or the sharp
/// series (type B), from the generating function.
pub fn symmetric_sum(family: Family, k: &[u32]) -> Result<ZetaExpression> {
    let factor = symmetric_sum_factor(k)?;
    let p = natural_p(family, k)?;
    Ok(ZetaExpression::pi_multiple(factor * p, k.iter().sum()))
}

/// `zeta_r(2k, ..., 2k)` (type C) or its sharp analogue (type B) from the
/// generating function.
pub fn volume_formula(family: Family, r: u32, k: u32) -> Result<ZetaExpression> {
    if r == 0 || k == 0 {
        return Err(Error::InvalidArgument(format!("volume_formula: need r, k >= 1 (got {r}, {k})")));
    }
    let args = vec![2 * k; r as usize];
    let s = symmetric_sum(family, &args)?;
    Ok(s.scale(&Rational::from_integer(factorial(r as usize)).recip()))
}
