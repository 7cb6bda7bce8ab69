//! Recovering exact rationals from enclosures.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::bigfloat::{pi, BigFloat};
use crate::algebra::rational::{ceil, floor, Rational};
use crate::error::{Error, Result};

/// The rational with the smallest denominator in the closed interval
/// `[lo, hi]` (smallest magnitude among those), by continued fractions.
pub fn simplest_in(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_in(&-hi, &-lo);
    }
    let c = Rational::from_integer(ceil(lo));
    if &c <= hi {
        return c;
    }
    let fl = Rational::from_integer(floor(lo));
    let inner = simplest_in(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

/// Farey neighbours of `p/q` among fractions with denominator `<= q_max`.
fn farey_neighbours(x: &Rational, q_max: &BigInt) -> (Rational, Rational) {
    let (p, q) = (x.numer(), x.denom());
    // Left: p b - q a = 1, right: q a - p b = 1, with b maximal.
    let inv = if q.is_one() {
        BigInt::zero()
    } else {
        let e = p.extended_gcd(q);
        e.x.mod_floor(q)
    };
    let largest = |res: &BigInt| -> BigInt {
        if q.is_one() {
            return q_max.clone();
        }
        let r = res.mod_floor(q);
        let r = if r.is_zero() { q.clone() } else { r };
        q_max - (q_max - &r).mod_floor(q)
    };
    let bl = largest(&inv);
    let left = Rational::new((p * &bl - 1) / q, bl);
    let br = largest(&-&inv);
    let right = Rational::new((p * &br + 1) / q, br);
    (left, right)
}

/// The unique rational with denominator `<= q_max` within the enclosure of
/// `x`; fails when none or more than one qualifies.
pub fn rational_reconstruct(x: &BigFloat, q_max: &BigInt) -> Result<Rational> {
    if !q_max.is_positive() {
        return Err(Error::InvalidArgument("q_max must be positive".into()));
    }
    let e = x.error_bound();
    if !e.is_finite() {
        return Err(Error::Reconstruction("unbounded input".into()));
    }
    let mid = x.to_rational();
    let rad = Rational::from_float(e).unwrap_or_else(Rational::zero);
    let lo = &mid - &rad;
    let hi = &mid + &rad;
    let cand = simplest_in(&lo, &hi);
    if cand.denom() > q_max {
        return Err(Error::Reconstruction(format!(
            "no rational with denominator <= {q_max} within {e:.3e} of {}; simplest has denominator {}",
            x.to_decimal(30),
            cand.denom()
        )));
    }
    let (left, right) = farey_neighbours(&cand, q_max);
    if left >= lo || right <= hi {
        let other = if left >= lo { left } else { right };
        return Err(Error::Reconstruction(format!(
            "ambiguous: both {cand} and {other} lie within {e:.3e} of {}",
            x.to_decimal(30)
        )));
    }
    Ok(cand)
}

/// Reconstruct `x / pi^w`.
pub fn pi_power_coefficient(x: &BigFloat, w: u32, q_max: &BigInt) -> Result<Rational> {
    let p = pi(x.bits()).powu(w);
    rational_reconstruct(&x.div(&p), q_max)
}
