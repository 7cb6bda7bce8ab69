//! Restricted sum formulas: sums of `zeta_r(2d a_1, ..., 2d a_r)` over all
//! `a_1 + ... + a_r = N`.


use crate::algebra::expr::ZetaExpression;
use crate::algebra::rational::{factorial, ratio, Rational};
use crate::error::{Error, Result};
use crate::numeric::{ez_mzv, BigFloat, EvalConfig, MzvIndex};
use crate::roots::datum::Family;

use super::volume::symmetric_sum;

/// All ordered tuples of positive integers summing to `r`.
pub fn compositions(r: u32) -> Vec<Vec<u32>> {
    if r == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=r {
        for mut rest in compositions(r - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn increasing_solutions(j: &[u32], n: u32, min_h: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let Some((&first, rest)) = j.split_first() else {
        if n == 0 {
            out.push(cur.clone());
        }
        return;
    };
    // remaining blocks need at least sum_i j_i (h + 1 + i)
    let mut h = min_h;
    loop {
        let need: u32 = first * h + rest.iter().enumerate().map(|(i, &ji)| ji * (h + 1 + i as u32)).sum::<u32>();
        if need > n {
            break;
        }
        cur.push(h);
        increasing_solutions(rest, n - first * h, h + 1, cur, out);
        cur.pop();
        h += 1;
    }
}

/// For each composition `J = (j_1, ..., j_v)` of `r`, the tuples
/// `((2d h_1)^[j_1], ..., (2d h_v)^[j_v])` with `h_1 < ... < h_v` and
/// `sum j_i h_i = N`.
pub fn restricted_tuples(r: u32, d: u32, n: u32) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = Vec::new();
    for j in compositions(r) {
        let mut hs = Vec::new();
        increasing_solutions(&j, n, 1, &mut Vec::new(), &mut hs);
        for h in hs {
            let mut tuple = Vec::with_capacity(r as usize);
            for (&ji, &hi) in j.iter().zip(&h) {
                tuple.extend(std::iter::repeat(2 * d * hi).take(ji as usize));
            }
            out.push((j.clone(), tuple));
        }
    }
    out
}

/// `sum_{a_1 + ... + a_r = N} zeta_r(2d a_1, ..., 2d a_r)` (type C) or the
/// sharp analogue (type B), as a rational multiple of `pi^{2dN}`.
pub fn restricted_sum(family: Family, r: u32, d: u32, n: u32) -> Result<ZetaExpression> {
    if r == 0 || d == 0 || n < r {
        return Err(Error::InvalidArgument(format!("restricted_sum: need r, d >= 1 and N >= r (got r={r}, d={d}, N={n})")));
    }
    let mut out = ZetaExpression::zero();
    for (j, tuple) in restricted_tuples(r, d, n) {
        let stabilizer = j.iter().fold(num_bigint::BigInt::from(1), |acc, &ji| acc * factorial(ji as usize));
        let s = symmetric_sum(family, &tuple)?;
        out.add_scaled(&s, &Rational::new(1.into(), stabilizer));
    }
    Ok(out)
}

/// `sum_{a + b = N} zeta_2(2a - 1, 2b + 1)`, obtained as
/// `zeta(2N)` minus the even restricted sum.
pub fn gkz_odd_sum(n: u32) -> Result<ZetaExpression> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("gkz_odd_sum({n}): need N >= 2")));
    }
    Ok(&ZetaExpression::zeta(2 * n)? - &restricted_sum(Family::C, 2, 1, n)?)
}

/// Closed forms of the depth 3 and 4 restricted sums with `d = 1`.
pub fn shen_cai(r: u32, n: u32) -> Result<ZetaExpression> {
    let (c0, c1) = match r {
        3 => (ratio(5, 8), ratio(-1, 4)),
        4 => (ratio(35, 64), ratio(-5, 16)),
        _ => return Err(Error::InvalidArgument(format!("shen_cai: depth {r} not covered"))),
    };
    if n < r {
        return Err(Error::InvalidArgument(format!("shen_cai: need N >= {r}")));
    }
    let mut out = ZetaExpression::zeta(2 * n)?.scale(&c0);
    out.add_scaled(&(&ZetaExpression::zeta(2)? * &ZetaExpression::zeta(2 * n - 2)?), &c1);
    Ok(out)
}

fn ordered_parts(r: u32, n: u32) -> Vec<Vec<u32>> {
    if r == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in 1..=n.saturating_sub(r - 1) {
        for mut rest in ordered_parts(r - 1, n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Direct numeric restricted sum over ordered tuples, type C only.
pub fn restricted_sum_numeric(r: u32, d: u32, n: u32, cfg: &EvalConfig) -> Result<BigFloat> {
    if r == 0 || d == 0 || n < r {
        return Err(Error::InvalidArgument(format!("restricted_sum_numeric: need N >= r >= 1 (got r={r}, N={n})")));
    }
    let parts = ordered_parts(r, n);
    let values = crate::parallel::map_collect(&parts, |p| {
        let idx = MzvIndex::new(p.iter().map(|&x| 2 * d * x).collect())?;
        ez_mzv(&idx, cfg)
    });
    let mut total: Option<BigFloat> = None;
    for v in values {
        let v = v?;
        total = Some(match total {
            None => v,
            Some(t) => t.add(&v),
        });
    }
    Ok(total.unwrap_or_else(|| BigFloat::zero(cfg.precision_bits + 8)))
}
