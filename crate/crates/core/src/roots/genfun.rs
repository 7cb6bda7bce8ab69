//! The generating function `F_{Delta*}` and its Taylor coefficients.
//!
//! For every basis `V` retained by the `A`-filter, the contribution is
//!
//! ```text
//!   (-1)^{|A \ V|} * prod_{gamma in Delta* \ V} t_gamma / L_gamma
//!     * |Q^vee / L(V^vee)|^{-1} sum_q prod_{beta in V ∩ Delta*}
//!         t_beta exp(x_beta t_beta) / (exp(t_beta) - 1)
//! ```
//!
//! with `L_gamma = t_gamma - sum_beta <gamma^vee, mu_beta> t_beta` and the
//! shifts `x_beta` from [`fractional_shift`]. Each summand is a quotient of
//! homogeneous pieces, so the total is assembled one homogeneous degree at a
//! time: all summands are brought over the common denominator `D` (product
//! of the distinct primitive forms at their largest multiplicity), and the
//! numerator of degree `d + deg D` is divided by the forms of `D` one at a
//! time. Every division must be exact.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use super::basis::{enumerate_bases, filter_bases_for_a, fractional_shift, BasisV};
use super::datum::{build_root_datum, Family, RootDatum, RootSet};
use super::series::{LinearForm, MultiSeries, Poly};
use crate::algebra::bernoulli::bernoulli_poly;
use crate::algebra::linalg::dot;
use crate::algebra::rational::{factorial, Rational};
use crate::error::{Error, Result};
use crate::numeric::bigfloat::pi;
use crate::numeric::config::EvalConfig;
use crate::numeric::reconstruct::rational_reconstruct;
use crate::numeric::zeta::{ez_mzv, sharp_mzv, MzvIndex, SharpIndex};
use crate::parallel::map_collect;

/// Per-basis data independent of the degree and of `q`.
struct Term {
    basis: BasisV,
    /// Variables (positions in `Delta*`) of `V ∩ Delta*`, aligned with
    /// `star_pos`.
    vars: Vec<usize>,
    /// Positions inside `basis.roots` of the same roots.
    star_pos: Vec<usize>,
    /// `sign / (index * prod c_gamma)`.
    weight: Rational,
    /// `prod t_gamma * D / prod Lhat_gamma`.
    cofactor: Poly,
}

struct Setup {
    nvars: usize,
    terms: Vec<Term>,
    /// Primitive forms of `D`, with multiplicity.
    denominator: Vec<LinearForm>,
}

type SetupKey = (Family, usize, RootSet);

static SETUPS: Lazy<Mutex<HashMap<SetupKey, Arc<Setup>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

type ComponentKey = (Family, usize, RootSet, Vec<Rational>, u32);

static COMPONENTS: Lazy<Mutex<HashMap<ComponentKey, Arc<Poly>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Drops the cached setups and homogeneous components.
pub fn clear_caches() {
    SETUPS.lock().unwrap().clear();
    COMPONENTS.lock().unwrap().clear();
}

fn setup(datum: &RootDatum, set: RootSet) -> Result<Arc<Setup>> {
    let key = (datum.family, datum.rank, set);
    if let Some(s) = SETUPS.lock().unwrap().get(&key) {
        return Ok(s.clone());
    }
    let s = Arc::new(build_setup(datum, set)?);
    SETUPS.lock().unwrap().insert(key, s.clone());
    Ok(s)
}

fn build_setup(datum: &RootDatum, set: RootSet) -> Result<Setup> {
    let star = datum.root_set(set);
    if star.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "{}{} has no {:?} roots",
            datum.family, datum.rank, set
        )));
    }
    let n = star.len();
    let a = datum.complement(set);
    let bases = filter_bases_for_a(datum, &enumerate_bases(datum), &a);

    struct Raw {
        basis: BasisV,
        vars: Vec<usize>,
        star_pos: Vec<usize>,
        weight: Rational,
        gammas: Vec<usize>,
        forms: BTreeMap<LinearForm, u32>,
    }
    let mut raws = Vec::new();
    let mut max_mult: BTreeMap<LinearForm, u32> = BTreeMap::new();
    for v in bases {
        let mut vars = Vec::new();
        let mut star_pos = Vec::new();
        for (var, &root) in star.iter().enumerate() {
            if let Some(p) = v.position(root) {
                vars.push(var);
                star_pos.push(p);
            }
        }
        let outside_a = a.iter().filter(|x| !v.contains(**x)).count();
        let mut weight = Rational::new(
            BigInt::from(if outside_a % 2 == 0 { 1 } else { -1 }),
            BigInt::from(v.lattice_index),
        );
        let mut gammas = Vec::new();
        let mut forms: BTreeMap<LinearForm, u32> = BTreeMap::new();
        for (g_var, &gamma) in star.iter().enumerate() {
            if v.contains(gamma) {
                continue;
            }
            let gco = datum.coroot_q(gamma);
            let mut coeffs = vec![Rational::zero(); n];
            coeffs[g_var] = Rational::one();
            let mut trivial = true;
            for (&var, &pos) in vars.iter().zip(&star_pos) {
                let c = dot(&gco, &v.dual_basis[pos]);
                if !c.is_zero() {
                    trivial = false;
                    coeffs[var] -= c;
                }
            }
            if trivial {
                continue;
            }
            let (scale, prim) = LinearForm::new(coeffs)?.normalized();
            weight /= scale;
            gammas.push(g_var);
            *forms.entry(prim).or_insert(0) += 1;
        }
        for (f, &m) in &forms {
            let e = max_mult.entry(f.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        raws.push(Raw {
            basis: v,
            vars,
            star_pos,
            weight,
            gammas,
            forms,
        });
    }

    let terms = raws
        .into_iter()
        .map(|raw| {
            let mut cof = Poly::constant(n, Rational::one());
            for &g in &raw.gammas {
                cof = cof.mul(&Poly::variable(n, g));
            }
            for (f, &m) in &max_mult {
                let have = raw.forms.get(f).copied().unwrap_or(0);
                cof = cof.mul(&Poly::from_linear(f).pow(m - have));
            }
            Term {
                basis: raw.basis,
                vars: raw.vars,
                star_pos: raw.star_pos,
                weight: raw.weight,
                cofactor: cof,
            }
        })
        .collect();
    let mut denominator = Vec::new();
    for (f, &m) in &max_mult {
        for _ in 0..m {
            denominator.push(f.clone());
        }
    }
    Ok(Setup {
        nvars: n,
        terms,
        denominator,
    })
}

/// Degree-`d` part of `prod_j t_j exp(x_j t_j)/(exp(t_j) - 1)` over the
/// given variables: `sum_{n_1+...=d} prod_j B_{n_j}(x_j) t_j^{n_j} / n_j!`.
fn bernoulli_product(nvars: usize, vars: &[usize], shifts: &[Rational], d: u32) -> Poly {
    let tables: Vec<Vec<Rational>> = shifts
        .iter()
        .map(|x| {
            (0..=d as usize)
                .map(|k| bernoulli_poly(k, x) / Rational::from_integer(factorial(k)))
                .collect()
        })
        .collect();
    let mut out = Poly::zero(nvars);
    let mut exps = vec![0u32; vars.len()];
    fn rec(
        i: usize,
        left: u32,
        vars: &[usize],
        tables: &[Vec<Rational>],
        exps: &mut Vec<u32>,
        out: &mut Poly,
    ) {
        if i == vars.len() {
            if left > 0 {
                return;
            }
            let mut e = vec![0u32; out.nvars];
            let mut c = Rational::one();
            for (j, &v) in vars.iter().enumerate() {
                e[v] = exps[j];
                c *= &tables[j][exps[j] as usize];
                if c.is_zero() {
                    return;
                }
            }
            out.add_term(e, c);
            return;
        }
        let lo = if i + 1 == vars.len() { left } else { 0 };
        for k in lo..=left {
            exps[i] = k;
            rec(i + 1, left - k, vars, tables, exps, out);
        }
    }
    rec(0, d, vars, &tables, &mut exps, &mut out);
    out
}

fn compute_component(datum: &RootDatum, set: RootSet, y: &[Rational], d: u32) -> Result<Poly> {
    let s = setup(datum, set)?;
    let n = s.nvars;
    let pieces: Vec<Result<Poly>> = map_collect(&s.terms, |t| {
        let mut inner = Poly::zero(n);
        for q in &t.basis.coset_reps_q {
            let shifts = t
                .star_pos
                .iter()
                .map(|&p| fractional_shift(datum, &t.basis, p, y, q))
                .collect::<Result<Vec<_>>>()?;
            inner.add_assign(&bernoulli_product(n, &t.vars, &shifts, d));
        }
        Ok(inner.mul(&t.cofactor).scale(&t.weight))
    });
    let mut numer = Poly::zero(n);
    for p in pieces {
        numer.add_assign(&p?);
    }
    for f in &s.denominator {
        numer = numer.div_linear(f)?;
    }
    debug_assert!(numer.terms.keys().all(|e| e.iter().sum::<u32>() == d));
    Ok(numer)
}

fn check_y(datum: &RootDatum, y: &[Rational]) -> Result<()> {
    if y.len() != datum.rank {
        return Err(Error::InvalidArgument(format!(
            "y has {} coordinates, rank is {}",
            y.len(),
            datum.rank
        )));
    }
    Ok(())
}

/// Homogeneous degree-`d` part of `F_{Delta*}(t, y)`, memoized.
pub fn homogeneous_component(
    datum: &RootDatum,
    set: RootSet,
    y: &[Rational],
    d: u32,
) -> Result<Arc<Poly>> {
    check_y(datum, y)?;
    let key = (datum.family, datum.rank, set, y.to_vec(), d);
    if let Some(p) = COMPONENTS.lock().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let p = Arc::new(compute_component(datum, set, y, d)?);
    COMPONENTS.lock().unwrap().insert(key, p.clone());
    Ok(p)
}

/// Variable labels of `Delta*`, in argument order.
pub fn variable_labels(datum: &RootDatum, set: RootSet) -> Vec<String> {
    datum
        .root_set(set)
        .iter()
        .map(|&i| format!("t[{}]", datum.roots[i].label))
        .collect()
}

/// Taylor expansion of `F_{Delta*}(t, y)` through total degree `n`.
pub fn generating_function_fstar(
    datum: &RootDatum,
    set: RootSet,
    y: &[Rational],
    n: u32,
) -> Result<MultiSeries> {
    let labels = variable_labels(datum, set);
    let degrees: Vec<u32> = (0..=n).collect();
    let parts = map_collect(&degrees, |&d| homogeneous_component(datum, set, y, d));
    let mut total = Poly::zero(labels.len());
    for p in parts {
        total.add_assign(&*p?);
    }
    Ok(MultiSeries::from_poly(labels, n, &total))
}

/// `P_{Delta*}(k, y) = (prod k_i!) * [t^k] F_{Delta*}(t, y)`.
pub fn p_coefficient(datum: &RootDatum, set: RootSet, k: &[u32], y: &[Rational]) -> Result<Rational> {
    let n = datum.root_set(set).len();
    if k.len() != n {
        return Err(Error::InvalidArgument(format!(
            "exponent vector has {} entries, root set has {n}",
            k.len()
        )));
    }
    let d: u32 = k.iter().sum();
    let comp = homogeneous_component(datum, set, y, d)?;
    let mut c = comp.coefficient(k);
    for &ki in k {
        c *= Rational::from_integer(factorial(ki as usize));
    }
    Ok(c)
}

/// Distinct permutations with multiplicity: all `r!` orderings.
pub(crate) fn all_permutations(k: &[u32]) -> Vec<Vec<u32>> {
    if k.len() <= 1 {
        return vec![k.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..k.len() {
        let mut rest = k.to_vec();
        let head = rest.remove(i);
        for mut tail in all_permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// `(-1)^r / 2^r * prod (2 pi i)^{k_j} / k_j!` as a rational multiple of
/// `pi^{sum k}`; the `k_j` must be even.
pub fn symmetric_sum_factor(k: &[u32]) -> Result<Rational> {
    if k.iter().any(|&x| x % 2 == 1 || x == 0) {
        return Err(Error::InvalidArgument(format!("{k:?}: entries must be even and >= 2")));
    }
    let r = k.len() as i64;
    let total: u32 = k.iter().sum();
    let mut c = crate::algebra::rational::pow2(total as i64 - r);
    if r % 2 == 1 {
        c = -c;
    }
    if (total / 2) % 2 == 1 {
        c = -c;
    }
    for &x in k {
        c /= Rational::from_integer(factorial(x as usize));
    }
    Ok(c)
}

/// Numeric route to `P`: evaluate the symmetrized zeta sum, strip the
/// explicit factor and reconstruct the rational.
pub fn p_coefficient_numeric_fallback(
    datum: &RootDatum,
    set: RootSet,
    k: &[u32],
    cfg: &EvalConfig,
    q_max: &BigInt,
) -> Result<Rational> {
    if set != RootSet::natural(datum.family) {
        return Err(Error::InvalidArgument(
            "numeric route needs the root set carrying the zeta arguments".into(),
        ));
    }
    if k.len() != datum.rank {
        return Err(Error::InvalidArgument("exponent vector length must equal the rank".into()));
    }
    let factor = symmetric_sum_factor(k)?;
    let bits = cfg.precision_bits + 8;
    let mut total = crate::numeric::bigfloat::BigFloat::zero(bits);
    for perm in all_permutations(k) {
        let v = match datum.family {
            Family::C => ez_mzv(&MzvIndex::new(perm)?, cfg)?,
            Family::B => sharp_mzv(&SharpIndex::new(perm)?, cfg)?,
        };
        total = total.add(&v);
    }
    let w: u32 = k.iter().sum();
    let scaled = total.div(&pi(bits).powu(w)).mul_rational(&factor.recip());
    rational_reconstruct(&scaled, q_max)
}

/// Convenience: build the datum and take its natural root set.
pub fn natural_p_coefficient(family: Family, k: &[u32]) -> Result<Rational> {
    let datum = build_root_datum(family, k.len())?;
    let zero = vec![Rational::zero(); datum.rank];
    p_coefficient(&datum, RootSet::natural(family), k, &zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::bernoulli::bernoulli;
    use crate::algebra::rational::ratio;

    fn zero(r: usize) -> Vec<Rational> {
        vec![Rational::zero(); r]
    }

    #[test]
    fn c1_gives_bernoulli_numbers() {
        let d = build_root_datum(Family::C, 1).unwrap();
        let s = generating_function_fstar(&d, RootSet::Long, &zero(1), 10).unwrap();
        for k in 0..=10u32 {
            let c = s.coefficient(&[k]) * Rational::from_integer(factorial(k as usize));
            assert_eq!(c, bernoulli(k as usize), "k={k}");
        }
    }

    #[test]
    fn c2_known_coefficients() {
        let d = build_root_datum(Family::C, 2).unwrap();
        assert_eq!(p_coefficient(&d, RootSet::Long, &[4, 4], &zero(2)).unwrap(), ratio(1, 6300));
        assert_eq!(p_coefficient(&d, RootSet::Long, &[2, 2], &zero(2)).unwrap(), ratio(1, 60));
    }

    #[test]
    fn b2_known_coefficient() {
        let d = build_root_datum(Family::B, 2).unwrap();
        // zeta#_2(2,2) = pi^4/320 = (1/8) * P * ((2 pi i)^2 / 2!)^2
        assert_eq!(p_coefficient(&d, RootSet::Short, &[2, 2], &zero(2)).unwrap(), ratio(1, 160));
    }

    #[test]
    fn factor_signs() {
        // r = 2, k = (4,4): (+1)/4 * (2 pi)^8 / (4!)^2 = 2^6 / 576
        assert_eq!(symmetric_sum_factor(&[4, 4]).unwrap(), ratio(64, 576));
        assert!(symmetric_sum_factor(&[3, 4]).is_err());
        assert_eq!(all_permutations(&[1, 2, 3]).len(), 6);
    }
}
