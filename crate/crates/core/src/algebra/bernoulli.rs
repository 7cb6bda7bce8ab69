use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::sync::RwLock;

use super::rational::{binomial, Rational};

static TABLE: Lazy<RwLock<Vec<Rational>>> = Lazy::new(|| RwLock::new(vec![Rational::one()]));

/// Bernoulli number `B_n` with `B_1 = -1/2`, from the recurrence
/// `sum_{k<=n} C(n+1, k) B_k = 0`. Memoized.
pub fn bernoulli(n: usize) -> Rational {
    if let Some(b) = TABLE.read().unwrap().get(n) {
        return b.clone();
    }
    let mut table = TABLE.write().unwrap();
    while table.len() <= n {
        let m = table.len();
        if m >= 3 && m % 2 == 1 {
            table.push(Rational::zero());
            continue;
        }
        let mut acc = Rational::zero();
        for (k, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += b * Rational::from_integer(binomial(m as i64 + 1, k as i64));
            }
        }
        let b = -acc / Rational::from_integer(BigInt::from(m + 1));
        table.push(b);
    }
    table[n].clone()
}

/// Bernoulli polynomial `B_n(x) = sum_k C(n,k) B_k x^(n-k)`.
pub fn bernoulli_poly(n: usize, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut xp = Rational::one();
    for j in 0..=n {
        let k = n - j;
        acc += bernoulli(k) * Rational::from_integer(binomial(n as i64, k as i64)) * &xp;
        xp *= x;
    }
    acc
}
