//! Rational helpers on top of `num-rational`.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, so it is used directly as the crate's `Rational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use std::sync::RwLock;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn pow2(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(BigInt::one() << e as usize)
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

pub fn powi(x: &Rational, e: u32) -> Rational {
    num_traits::pow(x.clone(), e as usize)
}

static FACTORIALS: Lazy<RwLock<Vec<BigInt>>> = Lazy::new(|| RwLock::new(vec![BigInt::one()]));

pub fn factorial(n: usize) -> BigInt {
    if let Some(v) = FACTORIALS.read().unwrap().get(n) {
        return v.clone();
    }
    let mut table = FACTORIALS.write().unwrap();
    while table.len() <= n {
        let next = table.last().unwrap() * BigInt::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `p/q` with the denominator dropped when it is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = |msg: &str| Error::Parse {
        pos: 0,
        msg: format!("{msg}: {s:?}"),
    };
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad("bad numerator"))?;
    let d: BigInt = d.parse().map_err(|_| bad("bad denominator"))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

pub fn floor(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

pub fn ceil(r: &Rational) -> BigInt {
    -(-r.numer()).div_floor(r.denom())
}

/// Fractional part in `[0, 1)`.
pub fn frac(r: &Rational) -> Rational {
    r - Rational::from_integer(floor(r))
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}
