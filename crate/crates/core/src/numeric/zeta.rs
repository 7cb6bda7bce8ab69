//! Riemann, Euler-Zagier, sharp and alternating double zeta values.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use once_cell::sync::Lazy;

use super::bigfloat::BigFloat;
use super::config::EvalConfig;
use super::nested::{chain_sum, Level, LinearPower};
use crate::algebra::expr::ZetaGenerator;
use crate::algebra::rational::pow2;
use crate::error::{Error, Result};

/// Admissible exponents of an Euler-Zagier sum over `0 < n_1 < ... < n_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MzvIndex(Vec<u32>);

/// Admissible exponents of a sharp series.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SharpIndex(Vec<u32>);

fn check_index(s: &[u32], max_depth: usize, what: &str) -> Result<()> {
    if s.is_empty() || s.len() > max_depth {
        return Err(Error::InvalidArgument(format!(
            "{what} depth must be 1..={max_depth} (got {})",
            s.len()
        )));
    }
    if s.iter().any(|&x| x == 0) || *s.last().unwrap() < 2 {
        return Err(Error::Divergent(format!(
            "{what}{s:?}: entries must be >= 1 and the last >= 2"
        )));
    }
    Ok(())
}

impl MzvIndex {
    pub fn new(s: Vec<u32>) -> Result<Self> {
        check_index(&s, 4, "ez")?;
        Ok(Self(s))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl SharpIndex {
    pub fn new(s: Vec<u32>) -> Result<Self> {
        check_index(&s, 3, "ez_sharp")?;
        Ok(Self(s))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for MzvIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", v.join(","))
    }
}

impl fmt::Display for SharpIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", v.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Key {
    Mzv(Vec<u32>),
    OddChain(Vec<u32>),
    Phi2(u32, u32),
}

static MEMO: Lazy<Mutex<HashMap<(Key, EvalConfig), BigFloat>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Drops every memoized series value.
pub fn clear_memo() {
    MEMO.lock().unwrap().clear();
}

fn memoized(key: Key, cfg: &EvalConfig, f: impl FnOnce() -> Result<BigFloat>) -> Result<BigFloat> {
    let k = (key, *cfg);
    if let Some(v) = MEMO.lock().unwrap().get(&k) {
        return Ok(v.clone());
    }
    let v = f()?;
    MEMO.lock().unwrap().insert(k, v.clone());
    Ok(v)
}

fn checked(v: BigFloat, cfg: &EvalConfig, depth: usize) -> Result<BigFloat> {
    let v = v.rescale(cfg.precision_bits + 8);
    let target = cfg.target_bound(depth);
    if !(v.error_bound() <= target) {
        return Err(Error::Unreachable {
            target,
            achieved: v.error_bound(),
        });
    }
    Ok(v)
}

fn plain_levels(s: &[u32]) -> Vec<Level> {
    s.iter().map(|&e| vec![LinearPower::plain(e)]).collect()
}

fn raw_mzv(s: &[u32], cfg: &EvalConfig) -> Result<BigFloat> {
    memoized(Key::Mzv(s.to_vec()), cfg, || chain_sum(&plain_levels(s), cfg))
}

/// `sum_{k_1 < ... < k_r} prod (2k_i - 1)^(-s_i)`.
fn raw_odd_chain(s: &[u32], cfg: &EvalConfig) -> Result<BigFloat> {
    memoized(Key::OddChain(s.to_vec()), cfg, || {
        let levels: Vec<Level> = s.iter().map(|&e| vec![LinearPower::odd(e)]).collect();
        chain_sum(&levels, cfg)
    })
}

/// Riemann zeta at an integer `s >= 2`.
pub fn riemann_zeta(s: u32, cfg: &EvalConfig) -> Result<BigFloat> {
    if s < 2 {
        return Err(Error::Divergent(format!("zeta({s})")));
    }
    checked(raw_mzv(&[s], cfg)?, cfg, 1)
}

pub fn ez_mzv(idx: &MzvIndex, cfg: &EvalConfig) -> Result<BigFloat> {
    checked(raw_mzv(idx.exponents(), cfg)?, cfg, idx.depth())
}

/// Sharp series: the chains `n_1 < ... < n_r` whose entries all share the
/// parity of `n_1`, split as `2^-w zeta_r(s)` plus the odd chain.
pub fn sharp_mzv(idx: &SharpIndex, cfg: &EvalConfig) -> Result<BigFloat> {
    let s = idx.exponents();
    let even = raw_mzv(s, cfg)?.mul_rational(&pow2(-(idx.weight() as i64)));
    let odd = raw_odd_chain(s, cfg)?;
    checked(even.add(&odd), cfg, idx.depth())
}

/// `phi_2(s1, s2) = sum_{m,n >= 1} (-1)^m n^(-s1) (m+n)^(-s2)`, from the four
/// parity classes of `(n, m+n)`.
pub fn phi2(s1: u32, s2: u32, cfg: &EvalConfig) -> Result<BigFloat> {
    if s1 < 1 || s2 < 2 {
        return Err(Error::Divergent(format!("phi2({s1},{s2})")));
    }
    let v = memoized(Key::Phi2(s1, s2), cfg, || {
        let ee = raw_mzv(&[s1, s2], cfg)?.mul_rational(&pow2(-((s1 + s2) as i64)));
        let oo = raw_odd_chain(&[s1, s2], cfg)?;
        let eo = chain_sum(&[vec![LinearPower::even(s1)], vec![LinearPower::odd(s2)]], cfg)?;
        let oe_strict = chain_sum(&[vec![LinearPower::odd(s1)], vec![LinearPower::even(s2)]], cfg)?;
        let oe_diag = chain_sum(&[vec![LinearPower::odd(s1), LinearPower::even(s2)]], cfg)?;
        Ok(ee.add(&oo).sub(&eo).sub(&oe_strict).sub(&oe_diag))
    })?;
    checked(v, cfg, 2)
}

/// Numeric value of any expression generator.
pub fn generator_value(g: &ZetaGenerator, cfg: &EvalConfig) -> Result<BigFloat> {
    match *g {
        ZetaGenerator::OddZeta(n) => riemann_zeta(n, cfg),
        ZetaGenerator::DoubleZeta(a, b) => ez_mzv(&MzvIndex::new(vec![a, b])?, cfg),
        ZetaGenerator::TripleZeta(a, b, c) => ez_mzv(&MzvIndex::new(vec![a, b, c])?, cfg),
        ZetaGenerator::DoubleZetaSharp(a, b) => sharp_mzv(&SharpIndex::new(vec![a, b])?, cfg),
        ZetaGenerator::TripleZetaSharp(a, b, c) => {
            sharp_mzv(&SharpIndex::new(vec![a, b, c])?, cfg)
        }
    }
}
