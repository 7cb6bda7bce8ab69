//! Independent construction of the C_2 generating function from its
//! published closed form, shared by the root-system and acceptance tests.
#![allow(dead_code)]

use mzv_core::algebra::rational::{factorial, powi, ratio, Rational};
use mzv_core::roots::{build_root_datum, generating_function_fstar, Family, RootSet};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Bernoulli numbers with `B_1 = +1/2` (Akiyama-Tanigawa).
pub fn bernoulli_plus(n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut a: Vec<Rational> = Vec::new();
    for m in 0..=n {
        a.push(ratio(1, m as i64 + 1));
        for j in (1..=m).rev() {
            a[j - 1] = Rational::from_integer((j as i64).into()) * (&a[j - 1] - &a[j]);
        }
        out.push(a[0].clone());
    }
    out
}

pub type Bivariate = BTreeMap<(u32, u32), Rational>;

pub fn inv_fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n)).recip()
}

pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

/// `B_k(x)` from the `B_1 = +1/2` numbers: `B_k(x) = sum_j C(k,j) B^-_j x^(k-j)`.
pub fn bernoulli_poly_at(k: usize, x: &Rational, bp: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for j in 0..=k {
        let bj = if j == 1 { ratio(-1, 2) } else { bp[j].clone() };
        acc += Rational::from_integer(factorial(k) / (factorial(j) * factorial(k - j))) * bj * powi(x, (k - j) as u32);
    }
    acc
}

/// `t e^(a t) / (e^t - 1)` in variable `var`, through degree `n`.
pub fn kernel(a: &Rational, var: usize, n: usize, bp: &[Rational]) -> Bivariate {
    let mut out = Bivariate::new();
    for k in 0..=n {
        let key = if var == 0 { (k as u32, 0) } else { (0, k as u32) };
        out.insert(key, bernoulli_poly_at(k, a, bp) * inv_fact(k));
    }
    out
}

pub fn mul(a: &Bivariate, b: &Bivariate, max: u32) -> Bivariate {
    let mut out = Bivariate::new();
    for (&(i, j), x) in a {
        for (&(k, l), y) in b {
            if i + j + k + l <= max {
                *out.entry((i + k, j + l)).or_insert_with(Rational::zero) += x * y;
            }
        }
    }
    out
}

pub fn add(a: &mut Bivariate, b: &Bivariate, c: i64) {
    for (k, v) in b {
        *a.entry(*k).or_insert_with(Rational::zero) += v * ratio(c, 1);
    }
}

pub fn poly(terms: &[((u32, u32), i64)]) -> Bivariate {
    terms.iter().map(|&(k, c)| (k, ratio(c, 1))).collect()
}

/// `(t1^2 - t2^2) F(t1, t2; y)` for the published C_2 closed form, where
/// `F = 1 + t1 t2 e^{y2 t1}/((e^t1 - 1)(t1 - t2)) + t1 t2 e^{y2 t2}/((e^t2 - 1)(t2 - t1))
///   + t1 t2 e^{(1-{y1-y2}) t1 + {y1} t2}/((e^t1 - 1)(e^t2 - 1))
///   - t1 t2 e^{(1-{2y1-y2}) t1}/((e^t1 - 1)(t1 + t2)) - t1 t2 e^{{2y1-y2} t2}/((e^t2 - 1)(t1 + t2))`
/// with the fractional parts taken as written.
pub fn c2_closed_numerator(y1: &Rational, y2: &Rational, max: u32) -> Bivariate {
    let n = max as usize;
    let bp = bernoulli_plus(n + 2);
    let one = Rational::one();
    let two = ratio(2, 1);
    let a2 = frac(y2);
    let a3 = &one - frac(&(y1 - y2));
    let b3 = frac(y1);
    let a4 = &one - frac(&(&two * y1 - y2));
    let a5 = frac(&(&two * y1 - y2));
    let diff_sq = poly(&[((2, 0), 1), ((0, 2), -1)]);
    let sum = poly(&[((1, 0), 1), ((0, 1), 1)]);
    let diff = poly(&[((1, 0), 1), ((0, 1), -1)]);
    let t1 = poly(&[((1, 0), 1)]);
    let t2 = poly(&[((0, 1), 1)]);
    let mut out = diff_sq.clone();
    // (t1 + t2) [t2 K(t1) - t1 K(t2)]
    let mut inner = mul(&t2, &kernel(&a2, 0, n, &bp), max);
    add(&mut inner, &mul(&t1, &kernel(&a2, 1, n, &bp), max), -1);
    add(&mut out, &mul(&sum, &inner, max), 1);
    let prod = mul(&kernel(&a3, 0, n, &bp), &kernel(&b3, 1, n, &bp), max);
    add(&mut out, &mul(&diff_sq, &prod, max), 1);
    // -(t1 - t2) [t2 K(t1) + t1 K(t2)]
    let mut inner = mul(&t2, &kernel(&a4, 0, n, &bp), max);
    add(&mut inner, &mul(&t1, &kernel(&a5, 1, n, &bp), max), 1);
    add(&mut out, &mul(&diff, &inner, max), -1);
    out.retain(|_, v| !v.is_zero());
    out
}

pub fn implemented_numerator(y: &[Rational], max: u32) -> Bivariate {
    let datum = build_root_datum(Family::C, 2).unwrap();
    let series = generating_function_fstar(&datum, RootSet::Long, y, max - 2).unwrap();
    let mut f = Bivariate::new();
    for d in 0..=max - 2 {
        for i in 0..=d {
            f.insert((i, d - i), series.coefficient(&[i, d - i]));
        }
    }
    let mut out = mul(&poly(&[((2, 0), 1), ((0, 2), -1)]), &f, max);
    out.retain(|_, v| !v.is_zero());
    out
}

/// Recovers `F` through degree `max - 2` from `(t1^2 - t2^2) F` via
/// `N(a+2, b) = F(a, b) - F(a+2, b-2)`.
pub fn divide_out(numerator: &Bivariate, max: u32) -> Bivariate {
    let get = |m: &Bivariate, k: (u32, u32)| m.get(&k).cloned().unwrap_or_else(Rational::zero);
    let mut f = Bivariate::new();
    for d in 0..=max - 2 {
        for b in 0..=d {
            let a = d - b;
            let mut v = get(numerator, (a + 2, b));
            if b >= 2 {
                v += get(&f, (a + 2, b - 2));
            }
            f.insert((a, b), v);
        }
    }
    f
}
