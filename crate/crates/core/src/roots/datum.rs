//! Root data of types B and C in the orthonormal realization.
//!
//! Type C: roots `e_i - e_j`, `e_i + e_j` (short) and `2 e_i` (long); the
//! coroots are `e_i - e_j`, `e_i + e_j` and `e_i`. Type B: roots `e_i - e_j`,
//! `e_i + e_j` (long) and `e_i` (short); coroots `e_i - e_j`, `e_i + e_j`,
//! `2 e_i`. Simple coroots are `e_i - e_{i+1}` and `e_r` (C) or `2 e_r` (B).

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::algebra::linalg::{inverse, solve_row_combination};
use crate::algebra::rational::{ratio, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    B,
    C,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::B => "B",
            Family::C => "C",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            other => Err(Error::UnsupportedDatum {
                family: other.to_string(),
                rank: 0,
            }),
        }
    }
}

/// Which positive roots form the root set `Delta*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootSet {
    Long,
    Short,
}

impl RootSet {
    /// The root set carrying the zeta arguments: long roots for C, short
    /// roots for B.
    pub fn natural(family: Family) -> Self {
        match family {
            Family::C => RootSet::Long,
            Family::B => RootSet::Short,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRoot {
    /// Coroot in the orthonormal basis.
    pub coroot: Vec<i64>,
    /// Coroot in the basis of simple coroots.
    pub simple_coords: Vec<i64>,
    pub long: bool,
    /// Human-readable name of the root, e.g. `e1-e2` or `2e1`.
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub family: Family,
    pub rank: usize,
    pub roots: Vec<PositiveRoot>,
    pub simple_coroots: Vec<Vec<i64>>,
    /// Basis of `Q^vee` (the simple coroots).
    pub coroot_lattice_basis: Vec<Vec<i64>>,
    /// Fundamental coweights, dual to the simple roots.
    pub fundamental_coweights: Vec<Vec<Rational>>,
    /// Representatives of `P^vee / Q^vee`, zero first.
    pub coset_reps: Vec<Vec<Rational>>,
    pub weyl_order: u64,
    /// Generic direction fixing the fractional-part branches.
    pub phi: Vec<Rational>,
}

fn unit(r: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; r];
    v[i] = c;
    v
}

fn to_q(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

impl RootDatum {
    pub fn root_set(&self, set: RootSet) -> Vec<usize> {
        let want_long = set == RootSet::Long;
        let mut idx: Vec<usize> = (0..self.roots.len())
            .filter(|&i| self.roots[i].long == want_long)
            .collect();
        // Roots proportional to e_i carry the zeta arguments in the order
        // e_r, e_{r-1}, ..., e_1.
        if idx.iter().all(|&i| self.roots[i].coroot.iter().filter(|&&x| x != 0).count() == 1) {
            idx.sort_by_key(|&i| {
                std::cmp::Reverse(self.roots[i].coroot.iter().position(|&x| x != 0).unwrap())
            });
        }
        idx
    }

    /// Positive roots outside `Delta*`, in root order.
    pub fn complement(&self, set: RootSet) -> Vec<usize> {
        let star = self.root_set(set);
        (0..self.roots.len()).filter(|i| !star.contains(i)).collect()
    }

    pub fn coroot_q(&self, i: usize) -> Vec<Rational> {
        to_q(&self.roots[i].coroot)
    }

    /// Is the rational vector in `Q^vee`?
    pub fn in_coroot_lattice(&self, v: &[Rational]) -> bool {
        let rows: Vec<Vec<Rational>> = self.simple_coroots.iter().map(|c| to_q(c)).collect();
        match solve_row_combination(&rows, v) {
            Some(x) => x.iter().all(|c| c.is_integer()),
            None => false,
        }
    }
}

/// Build the datum for `family` at rank 1..=4. The generic direction is
/// fixed later by [`super::basis::fix_generic_direction`] (done here).
pub fn build_root_datum(family: Family, rank: usize) -> Result<RootDatum> {
    if !(1..=4).contains(&rank) {
        return Err(Error::UnsupportedDatum {
            family: family.to_string(),
            rank,
        });
    }
    let r = rank;
    let mut roots = Vec::new();
    let short_mixed = family == Family::C;
    for i in 0..r {
        for j in i + 1..r {
            let mut c = vec![0; r];
            c[i] = 1;
            c[j] = -1;
            roots.push((c, !short_mixed, format!("e{}-e{}", i + 1, j + 1)));
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            let mut c = vec![0; r];
            c[i] = 1;
            c[j] = 1;
            roots.push((c, !short_mixed, format!("e{}+e{}", i + 1, j + 1)));
        }
    }
    for i in 0..r {
        match family {
            Family::C => roots.push((unit(r, i, 1), true, format!("2e{}", i + 1))),
            Family::B => roots.push((unit(r, i, 2), false, format!("e{}", i + 1))),
        }
    }

    let mut simple_coroots: Vec<Vec<i64>> = (0..r.saturating_sub(1))
        .map(|i| {
            let mut c = vec![0; r];
            c[i] = 1;
            c[i + 1] = -1;
            c
        })
        .collect();
    simple_coroots.push(unit(r, r - 1, if family == Family::C { 1 } else { 2 }));
    let basis_rows: Vec<Vec<Rational>> = simple_coroots.iter().map(|c| to_q(c)).collect();

    let roots: Vec<PositiveRoot> = roots
        .into_iter()
        .map(|(coroot, long, label)| {
            let x = solve_row_combination(&basis_rows, &to_q(&coroot))
                .expect("coroot outside the span of the simple coroots");
            let simple_coords = x
                .iter()
                .map(|c| {
                    assert!(c.is_integer(), "coroot not in Q^vee");
                    i64::try_from(c.to_integer()).unwrap()
                })
                .collect();
            PositiveRoot {
                coroot,
                simple_coords,
                long,
                label,
            }
        })
        .collect();

    // Simple roots: e_i - e_{i+1}, then 2 e_r (C) or e_r (B).
    let mut simple_roots: Vec<Vec<Rational>> = (0..r.saturating_sub(1))
        .map(|i| {
            let mut v = vec![Rational::zero(); r];
            v[i] = Rational::one();
            v[i + 1] = -Rational::one();
            v
        })
        .collect();
    let mut last = vec![Rational::zero(); r];
    last[r - 1] = if family == Family::C { ratio(2, 1) } else { Rational::one() };
    simple_roots.push(last);
    let inv = inverse(&simple_roots).expect("simple roots are independent");
    let fundamental_coweights: Vec<Vec<Rational>> =
        (0..r).map(|j| (0..r).map(|i| inv[i][j].clone()).collect()).collect();

    let mut weyl_order: u64 = 1 << r;
    for i in 2..=r as u64 {
        weyl_order *= i;
    }

    let mut datum = RootDatum {
        family,
        rank: r,
        roots,
        coroot_lattice_basis: simple_coroots.clone(),
        simple_coroots,
        fundamental_coweights: fundamental_coweights.clone(),
        coset_reps: Vec::new(),
        weyl_order,
        phi: (0..r).map(|i| ratio(1, 1 << i)).collect(),
    };

    let mut reps: Vec<Vec<Rational>> = vec![vec![Rational::zero(); r]];
    for w in &fundamental_coweights {
        let fresh = reps.iter().all(|p| {
            let d: Vec<Rational> = w.iter().zip(p).map(|(a, b)| a - b).collect();
            !datum.in_coroot_lattice(&d)
        });
        if fresh {
            reps.push(w.clone());
        }
    }
    datum.coset_reps = reps;
    super::basis::fix_generic_direction(&mut datum)?;
    Ok(datum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_coroots() {
        let d = build_root_datum(Family::C, 2).unwrap();
        let coroots: Vec<Vec<i64>> = d.roots.iter().map(|r| r.coroot.clone()).collect();
        assert_eq!(coroots, vec![vec![1, -1], vec![1, 1], vec![1, 0], vec![0, 1]]);
        let long: Vec<Vec<i64>> = d.root_set(RootSet::Long).iter().map(|&i| d.roots[i].coroot.clone()).collect();
        assert_eq!(long, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(d.weyl_order, 8);
        assert_eq!(d.coset_reps.len(), 2);
        assert_eq!(d.coset_reps[1], vec![ratio(1, 2), ratio(1, 2)]);
    }

    #[test]
    fn c1_is_a_single_root() {
        let d = build_root_datum(Family::C, 1).unwrap();
        assert_eq!(d.roots.len(), 1);
        assert_eq!(d.roots[0].coroot, vec![1]);
        assert_eq!(d.weyl_order, 2);
    }

    #[test]
    fn b2_short_coroots_in_simple_basis() {
        let d = build_root_datum(Family::B, 2).unwrap();
        let short: Vec<Vec<i64>> = d
            .root_set(RootSet::Short)
            .iter()
            .map(|&i| d.roots[i].simple_coords.clone())
            .collect();
        assert_eq!(short, vec![vec![0, 1], vec![2, 1]]);
        assert_eq!(d.coset_reps[1], vec![ratio(1, 1), ratio(0, 1)]);
    }

    #[test]
    fn sizes_and_bounds() {
        for fam in [Family::B, Family::C] {
            for r in 1..=4 {
                let d = build_root_datum(fam, r).unwrap();
                assert_eq!(d.roots.len(), r * r);
                assert_eq!(d.root_set(RootSet::natural(fam)).len(), r);
            }
            assert!(build_root_datum(fam, 0).is_err());
            assert!(build_root_datum(fam, 5).is_err());
        }
    }

    #[test]
    fn family_parsing() {
        assert_eq!("C".parse::<Family>().unwrap(), Family::C);
        assert!("A".parse::<Family>().is_err());
    }
}
