//! Parity relations for double zeta values of types C_2 and B_2.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::expr::{zeta_even, ZetaExpression};
use crate::algebra::rational::{binomial, pow2, Rational};
use crate::error::{Error, Result};
use crate::numeric::EvalConfig;

use super::report::RelationReport;

fn z(n: u32) -> Result<ZetaExpression> {
    ZetaExpression::zeta(n)
}

fn rat(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

fn check_pair(p: u32, q: u32) -> Result<()> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidArgument(format!("({p},{q}): need p, q >= 2")));
    }
    Ok(())
}

/// `2 sum_j C(w-2j-1, q-1) zeta(2j) zeta(w-2j) + 2 sum_j C(w-2j-1, p-1) ...
/// - zeta(w)`, each inner term weighted by `2^-(w-2j)` when `sharp`.
fn parity_rhs(p: u32, q: u32, sharp: bool) -> Result<ZetaExpression> {
    let w = p + q;
    let mut out = z(w)?.scale(&-Rational::one());
    for (bound, lower) in [(p / 2, q - 1), (q / 2, p - 1)] {
        for j in 0..=bound {
            let mut c = rat(binomial((w - 2 * j - 1) as i64, lower as i64) * 2);
            if sharp {
                c *= pow2(-((w - 2 * j) as i64));
            }
            let term = &zeta_even(2 * j)? * &z(w - 2 * j)?;
            out.add_scaled(&term, &c);
        }
    }
    Ok(out)
}

fn parity_lhs(p: u32, q: u32, sharp: bool) -> Result<ZetaExpression> {
    let sym = |a, b| if sharp { ZetaExpression::ez2s(a, b) } else { ZetaExpression::ez2(a, b) };
    let mut out = ZetaExpression::zero();
    if p % 2 == 0 {
        out.add_scaled(&sym(p, q)?, &Rational::from_integer(2.into()));
    }
    if q % 2 == 0 {
        out.add_scaled(&sym(q, p)?, &Rational::from_integer(2.into()));
    }
    Ok(out)
}

/// Right side of `(1+(-1)^p) zeta_2(p,q) + (1+(-1)^q) zeta_2(q,p) = ...`.
pub fn double_parity_rhs(p: u32, q: u32) -> Result<ZetaExpression> {
    check_pair(p, q)?;
    parity_rhs(p, q, false)
}

/// Right side of the sharp analogue, with `2^-(p+q-2j)` weights.
pub fn b2_parity_rhs(p: u32, q: u32) -> Result<ZetaExpression> {
    check_pair(p, q)?;
    parity_rhs(p, q, true)
}

pub fn double_relation(p: u32, q: u32, cfg: &EvalConfig) -> Result<RelationReport> {
    check_pair(p, q)?;
    RelationReport::evaluate("C2-parity", vec![p, q], parity_lhs(p, q, false)?, parity_rhs(p, q, false)?, cfg)
}

pub fn b2_relation(p: u32, q: u32, cfg: &EvalConfig) -> Result<RelationReport> {
    check_pair(p, q)?;
    RelationReport::evaluate("B2-parity", vec![p, q], parity_lhs(p, q, true)?, parity_rhs(p, q, true)?, cfg)
}

/// `zeta_2(p,q)` for odd `p + q` in terms of `pi` and odd zeta values.
/// `p = 1` goes through the sum formula.
pub fn reduce_double(p: u32, q: u32) -> Result<ZetaExpression> {
    if (p + q) % 2 == 0 {
        return Err(Error::InvalidArgument(format!("reduce_double({p},{q}): weight must be odd")));
    }
    if q < 2 || p == 0 {
        return Err(Error::Divergent(format!("zeta_2({p},{q})")));
    }
    if p == 1 {
        let k = p + q;
        let mut out = z(k)?;
        for j in 2..=k - 2 {
            out = &out - &reduce_double(k - j, j)?;
        }
        return Ok(out);
    }
    let half = Rational::new(1.into(), 2.into());
    let rhs = parity_rhs(p, q, false)?;
    if p % 2 == 0 {
        return Ok(rhs.scale(&half));
    }
    // zeta(p) zeta(q) = zeta_2(p,q) + zeta_2(q,p) + zeta(p+q)
    let harmonic = &(&z(p)? * &z(q)?) - &z(p + q)?;
    Ok(&harmonic - &rhs.scale(&half))
}

/// `zeta#_2(p,q)` for odd `p + q`, `p, q >= 2`.
pub fn reduce_sharp_double(p: u32, q: u32) -> Result<ZetaExpression> {
    check_pair(p, q)?;
    if (p + q) % 2 == 0 {
        return Err(Error::InvalidArgument(format!("reduce_sharp_double({p},{q}): weight must be odd")));
    }
    let half = Rational::new(1.into(), 2.into());
    let rhs = parity_rhs(p, q, true)?;
    if p % 2 == 0 {
        return Ok(rhs.scale(&half));
    }
    // Same-parity pairs m != n: even pairs give 2^-w (zeta(p)zeta(q) - zeta(w)),
    // odd pairs the same with the odd parts (1 - 2^-s) zeta(s).
    let w = (p + q) as i64;
    let one = Rational::one();
    let prod_coeff = pow2(-w) + (&one - pow2(-(p as i64))) * (&one - pow2(-(q as i64)));
    let mut harmonic = (&z(p)? * &z(q)?).scale(&prod_coeff);
    harmonic.add_scaled(&z(p + q)?, &-one);
    Ok(&harmonic - &rhs.scale(&half))
}
