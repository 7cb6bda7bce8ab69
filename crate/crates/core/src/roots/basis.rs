//! Bases `V` of the positive roots, their dual bases and coroot sublattices.

use num_traits::{Signed, Zero};

use super::datum::RootDatum;
use crate::algebra::linalg::{determinant, dot, in_span, inverse, lattice_transversal};
use crate::algebra::rational::{frac, ratio, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisV {
    /// Positive-root indices, ascending.
    pub roots: Vec<usize>,
    /// `dual_basis[i]` pairs to 1 with the coroot of `roots[i]` and to 0 with
    /// the others.
    pub dual_basis: Vec<Vec<Rational>>,
    /// `|Q^vee / L(V^vee)|`.
    pub lattice_index: u64,
    /// Representatives of `Q^vee / L(V^vee)` in the orthonormal basis.
    pub coset_reps_q: Vec<Vec<i64>>,
}

impl BasisV {
    pub fn position(&self, root: usize) -> Option<usize> {
        self.roots.iter().position(|&r| r == root)
    }

    pub fn contains(&self, root: usize) -> bool {
        self.roots.contains(&root)
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Every linearly independent `r`-subset of the positive roots, in
/// lexicographic order of root indices.
pub fn enumerate_bases(datum: &RootDatum) -> Vec<BasisV> {
    let r = datum.rank;
    let mut out = Vec::new();
    for subset in combinations(datum.roots.len(), r) {
        let m: Vec<Vec<Rational>> = subset.iter().map(|&i| datum.coroot_q(i)).collect();
        let Some(inv) = inverse(&m) else { continue };
        let dual_basis: Vec<Vec<Rational>> =
            (0..r).map(|j| (0..r).map(|i| inv[i][j].clone()).collect()).collect();
        let simple: Vec<Vec<i64>> = subset
            .iter()
            .map(|&i| datum.roots[i].simple_coords.clone())
            .collect();
        let simple_q: Vec<Vec<Rational>> = simple
            .iter()
            .map(|v| v.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        let index = determinant(&simple_q).abs();
        let lattice_index = u64::try_from(index.to_integer()).unwrap();
        let coset_reps_q: Vec<Vec<i64>> = lattice_transversal(&simple)
            .into_iter()
            .map(|c| {
                let mut q = vec![0i64; r];
                for (ci, alpha) in c.iter().zip(&datum.simple_coroots) {
                    for (qk, ak) in q.iter_mut().zip(alpha) {
                        *qk += ci * ak;
                    }
                }
                q
            })
            .collect();
        out.push(BasisV {
            roots: subset,
            dual_basis,
            lattice_index,
            coset_reps_q,
        });
    }
    out
}

/// Keep the bases `V` with `nu_{j+1}` outside the span of the coroots of
/// `V ∩ {nu_1, ..., nu_j}` for every `j`, where `a_order` lists `A`.
pub fn filter_bases_for_a(datum: &RootDatum, bases: &[BasisV], a_order: &[usize]) -> Vec<BasisV> {
    bases
        .iter()
        .filter(|v| {
            let mut hull: Vec<Vec<Rational>> = Vec::new();
            for &nu in a_order {
                if in_span(&hull, &datum.coroot_q(nu)) {
                    return false;
                }
                if v.contains(nu) {
                    hull.push(datum.coroot_q(nu));
                }
            }
            true
        })
        .cloned()
        .collect()
}

fn all_pairings_nonzero(phi: &[Rational], bases: &[BasisV]) -> bool {
    bases
        .iter()
        .all(|v| v.dual_basis.iter().all(|mu| !dot(phi, mu).is_zero()))
}

/// Perturbation budget for the generic direction.
const MAX_PERTURBATIONS: usize = 16;

/// Choose `phi = (1, 1/2, ..., 1/2^(r-1))`, adding `(eps, eps^2, ...)` with
/// `eps = 1/97` until no dual-basis vector is orthogonal to it.
pub fn fix_generic_direction(datum: &mut RootDatum) -> Result<()> {
    let bases = enumerate_bases(datum);
    let r = datum.rank;
    let mut phi: Vec<Rational> = (0..r).map(|i| ratio(1, 1 << i)).collect();
    let eps = ratio(1, 97);
    for _ in 0..MAX_PERTURBATIONS {
        if all_pairings_nonzero(&phi, &bases) {
            datum.phi = phi;
            return Ok(());
        }
        let mut p = eps.clone();
        for x in phi.iter_mut() {
            *x += &p;
            p *= &eps;
        }
    }
    Err(Error::DegenerateDirection(MAX_PERTURBATIONS))
}

/// `{<y+q, mu>}` if `<phi, mu> > 0`, else `1 - {-<y+q, mu>}`, for the dual
/// vector of `V` attached to the root at `beta_pos`.
pub fn fractional_shift(
    datum: &RootDatum,
    v: &BasisV,
    beta_pos: usize,
    y: &[Rational],
    q: &[i64],
) -> Result<Rational> {
    let mu = &v.dual_basis[beta_pos];
    let s = dot(&datum.phi, mu);
    let point: Vec<Rational> = y
        .iter()
        .zip(q)
        .map(|(a, &b)| a + Rational::from_integer(b.into()))
        .collect();
    let x = dot(&point, mu);
    if s.is_positive() {
        Ok(frac(&x))
    } else if s.is_negative() {
        Ok(Rational::from_integer(1.into()) - frac(&-x))
    } else {
        Err(Error::DegenerateDirection(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::datum::{build_root_datum, Family, RootSet};

    #[test]
    fn c2_bases() {
        let d = build_root_datum(Family::C, 2).unwrap();
        let bases = enumerate_bases(&d);
        assert_eq!(bases.len(), 6);
        let v = bases.iter().find(|b| b.roots == vec![0, 1]).unwrap();
        assert_eq!(v.lattice_index, 2);
        assert_eq!(v.coset_reps_q.len(), 2);
        assert_eq!(v.dual_basis[0], vec![ratio(1, 2), ratio(-1, 2)]);
        assert_eq!(v.dual_basis[1], vec![ratio(1, 2), ratio(1, 2)]);
    }

    #[test]
    fn c1_single_basis() {
        let d = build_root_datum(Family::C, 1).unwrap();
        assert_eq!(enumerate_bases(&d).len(), 1);
    }

    #[test]
    fn dual_relation_and_index() {
        for fam in [Family::B, Family::C] {
            for r in 1..=3 {
                let d = build_root_datum(fam, r).unwrap();
                for v in enumerate_bases(&d) {
                    for (i, &a) in v.roots.iter().enumerate() {
                        for (j, mu) in v.dual_basis.iter().enumerate() {
                            let expect = if i == j { ratio(1, 1) } else { ratio(0, 1) };
                            assert_eq!(dot(&d.coroot_q(a), mu), expect);
                        }
                    }
                    assert_eq!(v.lattice_index as usize, v.coset_reps_q.len());
                }
            }
        }
    }

    #[test]
    fn empty_a_keeps_everything() {
        let d = build_root_datum(Family::C, 2).unwrap();
        let bases = enumerate_bases(&d);
        assert_eq!(filter_bases_for_a(&d, &bases, &[]).len(), bases.len());
    }

    #[test]
    fn c2_filtered_count() {
        let d = build_root_datum(Family::C, 2).unwrap();
        let bases = enumerate_bases(&d);
        let a = d.complement(RootSet::Long);
        let kept = filter_bases_for_a(&d, &bases, &a);
        let mut rev = a.clone();
        rev.reverse();
        let kept_rev = filter_bases_for_a(&d, &bases, &rev);
        assert_eq!(kept.len(), 6);
        assert_eq!(kept, kept_rev);
        // Bases without short roots always survive.
        let long_only = kept.iter().filter(|v| v.roots.iter().all(|&i| d.roots[i].long)).count();
        assert_eq!(long_only, 1);
    }

    #[test]
    fn shifts_at_origin() {
        let d = build_root_datum(Family::C, 2).unwrap();
        let bases = enumerate_bases(&d);
        let zero = vec![ratio(0, 1), ratio(0, 1)];
        for v in &bases {
            for pos in 0..2 {
                let s = fractional_shift(&d, v, pos, &zero, &[0, 0]).unwrap();
                assert!(s == ratio(0, 1) || s == ratio(1, 1));
            }
        }
        let v = bases.iter().find(|b| b.roots == vec![0, 1]).unwrap();
        for pos in 0..2 {
            let s = fractional_shift(&d, v, pos, &zero, &[0, 1]).unwrap();
            assert_eq!(s, ratio(1, 2));
        }
    }
}
