//! Triple zeta relations of types C_3 and B_3, and reduction of triple zeta
//! values of even weight to double zeta values.

use num_traits::{One, Zero};

use crate::algebra::expr::{zeta_even, ZetaExpression, ZetaGenerator};
use crate::algebra::linalg::{in_span, solve_row_combination};
use crate::algebra::rational::{binomial, int, pow2, Rational};
use crate::error::{Error, Result};
use crate::numeric::EvalConfig;

use super::report::RelationReport;

fn sign(e: u32) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn check_triple(a: u32, b: u32, c: u32) -> Result<()> {
    if a < 2 || b < 2 || c < 2 {
        return Err(Error::InvalidArgument(format!("({a},{b},{c}): need a, b, c >= 2")));
    }
    Ok(())
}

fn triple_lhs(a: u32, b: u32, c: u32, sharp: bool) -> Result<ZetaExpression> {
    let sym = |x, y, z| if sharp { ZetaExpression::ez3s(x, y, z) } else { ZetaExpression::ez3(x, y, z) };
    let mut out = ZetaExpression::zero();
    out.add_scaled(&sym(a, b, c)?, &int(1 + sign(a)));
    out.add_scaled(&sym(b, a, c)?, &int(1 + sign(b)));
    out.add_scaled(&sym(b, c, a)?, &int(1 + sign(b)));
    out.add_scaled(&sym(c, b, a)?, &int(sign(b) * (1 + sign(c))));
    Ok(out)
}

/// Exponent `e` in the weight `2^(e xi)` on `zeta(2 xi)` in the B_3 relation.
///
/// The relation as usually printed carries `2^xi`; it only holds with
/// `4^xi`, which is also what the B_2 case gives after pulling out
/// `2^(1-w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum B3Weight {
    Corrected,
    AsPrinted,
}

impl B3Weight {
    fn exponent(self) -> i64 {
        match self {
            B3Weight::Corrected => 2,
            B3Weight::AsPrinted => 1,
        }
    }
}

/// `S1 + S2 + (-1)^b (S3 + S4)`, with `zeta(2 xi)` weighted by `2^(e xi)`.
fn four_sums(a: u32, b: u32, c: u32, e: i64) -> Result<ZetaExpression> {
    let even = |xi: u32| -> Result<ZetaExpression> { Ok(zeta_even(2 * xi)?.scale(&pow2(e * xi as i64))) };
    let bin = |n: u32, k: u32| Rational::from_integer(binomial(n as i64, k as i64));
    let mut first = ZetaExpression::zero();
    let mut second = ZetaExpression::zero();
    // S1 and S3 share a shape with a and c exchanged in the outer role.
    for (outer, other, target) in [(a, c, &mut first), (c, a, &mut second)] {
        for xi in 0..=outer / 2 {
            let ze = even(xi)?;
            for w in 0..=outer - 2 * xi {
                let coeff = bin(w + b - 1, w) * bin(a + c - 2 * xi - w - 1, other - 1);
                let d = ZetaExpression::ez2(b + w, a + c - 2 * xi - w)?;
                target.add_scaled(&(&ze * &d), &coeff);
            }
        }
    }
    // S2 and S4.
    for (outer, other, target) in [(a, c, &mut first), (c, a, &mut second)] {
        for xi in 0..=b / 2 {
            let ze = even(xi)?;
            for w in 0..outer {
                let coeff = bin(w + b - 2 * xi, w) * bin(a + c - w - 2, other - 1);
                let d = ZetaExpression::ez2(b - 2 * xi + w + 1, a + c - 1 - w)?;
                target.add_scaled(&(&ze * &d), &coeff);
            }
        }
    }
    first.add_scaled(&second, &int(sign(b)));
    Ok(first)
}

fn triple_rhs(a: u32, b: u32, c: u32, sharp: Option<B3Weight>) -> Result<ZetaExpression> {
    let mut out = match sharp {
        Some(w) => four_sums(a, b, c, w.exponent())?.scale(&pow2(1 - (a + b + c) as i64)),
        None => four_sums(a, b, c, 0)?.scale(&int(2)),
    };
    let sharp = sharp.is_some();
    let sym = |x, y| if sharp { ZetaExpression::ez2s(x, y) } else { ZetaExpression::ez2(x, y) };
    out.add_scaled(&sym(a + b, c)?, &int(-1));
    out.add_scaled(&sym(b, a + c)?, &int(-(1 + sign(b))));
    out.add_scaled(&sym(b + c, a)?, &int(-sign(b)));
    Ok(out)
}

/// Both sides of the type C_3 parity relation at `(a,b,c)`.
pub fn triple_theorem(a: u32, b: u32, c: u32) -> Result<(ZetaExpression, ZetaExpression)> {
    check_triple(a, b, c)?;
    Ok((triple_lhs(a, b, c, false)?, triple_rhs(a, b, c, None)?))
}

/// Both sides of the type B_3 analogue.
pub fn b3_theorem(a: u32, b: u32, c: u32) -> Result<(ZetaExpression, ZetaExpression)> {
    b3_theorem_weighted(a, b, c, B3Weight::Corrected)
}

pub fn b3_theorem_weighted(a: u32, b: u32, c: u32, w: B3Weight) -> Result<(ZetaExpression, ZetaExpression)> {
    check_triple(a, b, c)?;
    Ok((triple_lhs(a, b, c, true)?, triple_rhs(a, b, c, Some(w))?))
}

pub fn triple_relation(a: u32, b: u32, c: u32, cfg: &EvalConfig) -> Result<RelationReport> {
    let (l, r) = triple_theorem(a, b, c)?;
    RelationReport::evaluate("C3-parity", vec![a, b, c], l, r, cfg)
}

pub fn b3_relation(a: u32, b: u32, c: u32, cfg: &EvalConfig) -> Result<RelationReport> {
    let (l, r) = b3_theorem(a, b, c)?;
    RelationReport::evaluate("B3-parity", vec![a, b, c], l, r, cfg)
}

/// `zeta_3(x,y,z) + zeta_3(y,x,z) + zeta_3(y,z,x)
///  = zeta(x) zeta_2(y,z) - zeta_2(y,z+x) - zeta_2(x+y,z)`.
pub fn harmonic_triple(x: u32, y: u32, z: u32) -> Result<(ZetaExpression, ZetaExpression)> {
    check_triple(x, y, z)?;
    let lhs = &(&ZetaExpression::ez3(x, y, z)? + &ZetaExpression::ez3(y, x, z)?) + &ZetaExpression::ez3(y, z, x)?;
    let mut rhs = &ZetaExpression::zeta(x)? * &ZetaExpression::ez2(y, z)?;
    rhs.add_scaled(&ZetaExpression::ez2(y, z + x)?, &int(-1));
    rhs.add_scaled(&ZetaExpression::ez2(x + y, z)?, &int(-1));
    Ok((lhs, rhs))
}

fn distinct_permutations(a: u32, b: u32, c: u32) -> Vec<[u32; 3]> {
    let mut v = vec![[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]];
    v.sort();
    v.dedup();
    v
}

/// Coefficients of `lhs` on the triple symbols `unknowns`; fails if `lhs`
/// has any other term.
fn coefficient_row(lhs: &ZetaExpression, unknowns: &[[u32; 3]]) -> Result<Vec<Rational>> {
    let mut row = vec![Rational::zero(); unknowns.len()];
    for (m, c) in lhs.terms() {
        let pos = match m.factors.as_slice() {
            [ZetaGenerator::TripleZeta(x, y, z)] if m.pi_power == 0 => {
                unknowns.iter().position(|u| *u == [*x, *y, *z])
            }
            _ => None,
        };
        let pos = pos.ok_or_else(|| Error::InvalidArgument(format!("unexpected term {m} in relation")))?;
        row[pos] = c.clone();
    }
    Ok(row)
}

fn subsets_by_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Expresses `zeta_3(a,b,c)` of even weight through double zeta values,
/// `pi` and odd zeta values by exact elimination over the parity relations
/// and harmonic products at all distinct permutations of `(a,b,c)`.
///
/// The equations used are the first (in size, then index order) minimal
/// subset whose row space contains the target, so the output is
/// deterministic. Fails with [`Error::Underdetermined`] when no subset
/// isolates the target.
pub fn reduce_triple(a: u32, b: u32, c: u32) -> Result<ZetaExpression> {
    check_triple(a, b, c)?;
    if (a + b + c) % 2 == 1 {
        return Err(Error::InvalidArgument(format!("reduce_triple({a},{b},{c}): weight must be even")));
    }
    let unknowns = distinct_permutations(a, b, c);
    let mut equations = Vec::new();
    for p in &unknowns {
        equations.push(triple_theorem(p[0], p[1], p[2])?);
    }
    for p in &unknowns {
        equations.push(harmonic_triple(p[0], p[1], p[2])?);
    }
    let rows: Vec<Vec<Rational>> = equations
        .iter()
        .map(|(l, _)| coefficient_row(l, &unknowns))
        .collect::<Result<_>>()?;
    let target_pos = unknowns.iter().position(|u| *u == [a, b, c]).unwrap();
    let mut target = vec![Rational::zero(); unknowns.len()];
    target[target_pos] = Rational::one();

    if !in_span(&rows, &target) {
        let rank = crate::algebra::linalg::rank(&rows);
        return Err(Error::Underdetermined(format!(
            "zeta_3({a},{b},{c}): relations have rank {rank} on {} unknowns and do not isolate the target",
            unknowns.len()
        )));
    }
    for k in 1..=rows.len() {
        for subset in subsets_by_size(rows.len(), k) {
            let sub: Vec<Vec<Rational>> = subset.iter().map(|&i| rows[i].clone()).collect();
            if let Some(x) = solve_row_combination(&sub, &target) {
                let mut out = ZetaExpression::zero();
                for (&i, xi) in subset.iter().zip(&x) {
                    out.add_scaled(&equations[i].1, xi);
                }
                return Ok(out);
            }
        }
    }
    unreachable!("target lies in the span of all rows")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::ratio;

    fn ez2(a: u32, b: u32) -> ZetaExpression {
        ZetaExpression::ez2(a, b).unwrap()
    }

    fn zeta(n: u32) -> ZetaExpression {
        ZetaExpression::zeta(n).unwrap()
    }

    fn combo(terms: &[(i64, i64, ZetaExpression)]) -> ZetaExpression {
        let mut out = ZetaExpression::zero();
        for (p, q, e) in terms {
            out.add_scaled(e, &ratio(*p, *q));
        }
        out
    }

    #[test]
    fn worked_instance_224() {
        let (_, rhs) = triple_theorem(2, 2, 4).unwrap();
        let inner = combo(&[(8, 1, ez2(4, 2)), (12, 1, ez2(3, 3)), (16, 1, ez2(2, 4)), (16, 1, ez2(1, 5))]);
        let expected = &(&(&zeta(4) * &ez2(2, 2)).scale(&int(2)) + &(&zeta(2) * &inner))
            + &combo(&[
                (-16, 1, ez2(6, 2)),
                (-20, 1, ez2(5, 3)),
                (-25, 1, ez2(4, 4)),
                (-24, 1, ez2(3, 5)),
                (-17, 1, ez2(2, 6)),
            ]);
        assert_eq!(rhs, expected);
    }

    #[test]
    fn reduction_422() {
        let inner = combo(&[(4, 1, ez2(4, 2)), (6, 1, ez2(3, 3)), (7, 1, ez2(2, 4)), (8, 1, ez2(1, 5))]);
        let expected = &(&(&zeta(4) * &ez2(2, 2)) + &(&zeta(2) * &inner))
            + &combo(&[
                (-8, 1, ez2(6, 2)),
                (-10, 1, ez2(5, 3)),
                (-23, 2, ez2(4, 4)),
                (-12, 1, ez2(3, 5)),
                (-15, 2, ez2(2, 6)),
            ]);
        assert_eq!(reduce_triple(4, 2, 2).unwrap(), expected);
    }

    #[test]
    fn odd_weight_rejected() {
        assert!(reduce_triple(2, 2, 3).is_err());
    }
}
