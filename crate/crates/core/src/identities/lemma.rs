//! The folding identity
//! `sum_k phi(d-k) e_{d-k} sum_v f(k-v) (i pi)^v / v!
//!  = -(i pi / 2) f(d-1) + sum_xi zeta(2 xi) f(d - 2 xi)`,
//! with `e_j = (1 + (-1)^j) / 2`.

use std::fmt;

use num_bigint::BigInt;

use crate::algebra::expr::{phi_even, zeta_even, ZetaExpression};
use crate::algebra::rational::{factorial, Rational};
use crate::error::{Error, Result};
use crate::numeric::{pi, BigFloat, EvalConfig};

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexExpr {
    pub re: ZetaExpression,
    pub im: ZetaExpression,
}

#[derive(Clone, Debug)]
pub struct Complex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Complex {
    pub fn sub(&self, other: &Complex) -> Complex {
        Complex { re: self.re.sub(&other.re), im: self.im.sub(&other.im) }
    }

    /// Largest of the two component error bounds.
    pub fn error_bound(&self) -> f64 {
        self.re.error_bound().max(self.im.error_bound())
    }

    pub fn max_abs(&self) -> f64 {
        self.re.to_f64().abs().max(self.im.to_f64().abs())
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + i({})", self.re, self.im)
    }
}

/// Both sides exactly, as polynomials in `pi` with rational coefficients.
/// `f` holds `f(0), ..., f(d)`.
pub fn lemma_fold_exact(f: &[Rational], d: usize) -> Result<(ComplexExpr, ComplexExpr)> {
    if d < 1 || f.len() < d + 1 {
        return Err(Error::InvalidArgument(format!(
            "lemma_fold: need d >= 1 and d + 1 table entries (d={d}, got {})",
            f.len()
        )));
    }
    let mut lre = ZetaExpression::zero();
    let mut lim = ZetaExpression::zero();
    for k in 0..=d {
        let j = d - k;
        if j % 2 == 1 {
            continue;
        }
        let phi = phi_even(j as u32)?;
        for v in 0..=k {
            // (i pi)^v / v!
            let c = f[k - v].clone() / Rational::from_integer(factorial(v));
            let c = if (v / 2) % 2 == 1 { -c } else { c };
            let term = (&phi * &ZetaExpression::pi_multiple(Rational::from_integer(1.into()), v as u32)).scale(&c);
            if v % 2 == 0 {
                lre += &term;
            } else {
                lim += &term;
            }
        }
    }
    let mut rre = ZetaExpression::zero();
    for xi in 0..=d / 2 {
        rre.add_scaled(&zeta_even(2 * xi as u32)?, &f[d - 2 * xi]);
    }
    let rim = ZetaExpression::pi_multiple(Rational::from_integer(1.into()), 1).scale(&(-f[d - 1].clone() / Rational::from_integer(BigInt::from(2))));
    Ok((ComplexExpr { re: lre, im: lim }, ComplexExpr { re: rre, im: rim }))
}

/// Both sides evaluated numerically at the working precision of `cfg`.
pub fn lemma_fold(f: &[Rational], d: usize, cfg: &EvalConfig) -> Result<(Complex, Complex)> {
    let (l, r) = lemma_fold_exact(f, d)?;
    let p = pi(cfg.working_bits());
    let eval = |e: &ZetaExpression| e.numeric(&p, |_| None);
    Ok((
        Complex { re: eval(&l.re)?, im: eval(&l.im)? },
        Complex { re: eval(&r.re)?, im: eval(&r.im)? },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn degree_one() {
        let (l, r) = lemma_fold_exact(&[int(1), int(0)], 1).unwrap();
        assert_eq!(l, r);
        assert_eq!(r.im, ZetaExpression::pi_multiple(Rational::from_integer(1.into()), 1).scale(&Rational::new((-1).into(), 2.into())));
    }

    #[test]
    fn zero_table() {
        let (l, r) = lemma_fold(&vec![int(0); 5], 4, &EvalConfig::default()).unwrap();
        assert!(l.max_abs() == 0.0 && r.max_abs() == 0.0);
    }
}
