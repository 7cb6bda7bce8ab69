//! Verification suites: published values, relation grids, and cross-checks
//! between the exact and numeric routes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::algebra::expr::ZetaExpression;
use crate::algebra::rational::{format_rational, ratio, Rational};
use crate::error::{Error, Result};
use crate::identities::{self, numeric_value, RelationReport};
use crate::numeric::{
    ez_mzv, phi2, pi_power_coefficient, riemann_zeta, sharp_mzv, BigFloat, EvalConfig, MzvIndex, SharpIndex,
};
use crate::parallel::map_collect;
use crate::roots::datum::{build_root_datum, Family, RootSet};
use crate::roots::genfun::{natural_p_coefficient, p_coefficient_numeric_fallback};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    PublishedValues,
    Relations,
    Oracles,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "paper-values" | "published-values" => Ok(Suite::PublishedValues),
            "relations" => Ok(Suite::Relations),
            "oracles" => Ok(Suite::Oracles),
            _ => Err(Error::InvalidArgument(format!("unknown suite '{s}'"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::PublishedValues => "paper-values",
            Suite::Relations => "relations",
            Suite::Oracles => "oracles",
        })
    }
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub label: String,
    pub symbolic: Option<String>,
    pub numeric: Option<String>,
    pub bound: Option<f64>,
    pub passed: bool,
    pub detail: Option<String>,
}

impl Check {
    fn new(label: impl Into<String>, passed: bool) -> Self {
        Self { label: label.into(), symbolic: None, numeric: None, bound: None, passed, detail: None }
    }

    fn failed(label: impl Into<String>, err: &Error) -> Self {
        let mut c = Self::new(label, false);
        c.detail = Some(err.to_string());
        c
    }

    fn with_symbolic(mut self, s: impl ToString) -> Self {
        self.symbolic = Some(s.to_string());
        self
    }

    fn with_value(mut self, v: &BigFloat, digits: usize) -> Self {
        self.numeric = Some(v.to_decimal(digits));
        self.bound = Some(v.error_bound());
        self
    }

    fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", if self.passed { "pass" } else { "FAIL" }, self.label)?;
        if let Some(s) = &self.symbolic {
            write!(f, " = {s}")?;
        }
        if let Some(n) = &self.numeric {
            write!(f, " ~ {n}")?;
        }
        if let Some(b) = self.bound {
            write!(f, " (+- {b:.1e})")?;
        }
        if let Some(d) = &self.detail {
            write!(f, " [{d}]")?;
        }
        Ok(())
    }
}

/// Exact comparison of a computed expression with the expected one.
pub fn exact_check(label: impl Into<String>, got: Result<ZetaExpression>, expected: &ZetaExpression) -> Check {
    let label = label.into();
    match got {
        Ok(g) => {
            let ok = &g == expected;
            let c = Check::new(label, ok).with_symbolic(&g);
            if ok {
                c
            } else {
                c.with_detail(format!("expected {expected}"))
            }
        }
        Err(e) => Check::failed(label, &e),
    }
}

/// `value` against the numeric value of `expected`: the difference must
/// vanish within the combined bound, and that bound must be at most `tol`.
pub fn numeric_check(
    label: impl Into<String>,
    value: Result<BigFloat>,
    expected: &ZetaExpression,
    tol: f64,
    cfg: &EvalConfig,
) -> Check {
    let label = label.into();
    let run = || -> Result<(BigFloat, BigFloat)> {
        let v = value?;
        let e = numeric_value(expected, cfg)?;
        let diff = v.sub(&e);
        Ok((v, diff))
    };
    match run() {
        Ok((v, diff)) => {
            let ok = diff.is_zero_within_bound() && diff.error_bound() <= tol;
            let mut c = Check::new(label, ok).with_symbolic(expected).with_value(&v, 40);
            c.bound = Some(diff.error_bound());
            if !ok {
                c = c.with_detail(format!("difference {:.3e}", diff.to_f64()));
            }
            c
        }
        Err(e) => Check::failed(label, &e),
    }
}

pub fn relation_check(report: Result<RelationReport>, label: impl Into<String>) -> Check {
    match report {
        Ok(r) => {
            let mut c = Check::new(r.to_string(), r.passed()).with_value(&r.residual, 40);
            c.symbolic = None;
            c
        }
        Err(e) => Check::failed(label, &e),
    }
}

/// Default tolerance for numeric checks: `2^(24 - precision_bits)`.
pub fn tolerance(cfg: &EvalConfig) -> f64 {
    2f64.powi(24 - cfg.precision_bits as i32)
}

fn pi_c(p: i64, q: i64, w: u32) -> ZetaExpression {
    ZetaExpression::pi_multiple(ratio(p, q), w)
}

fn parse(s: &str) -> ZetaExpression {
    s.parse().expect("well-formed literal")
}

fn zeta(n: u32) -> ZetaExpression {
    ZetaExpression::zeta(n).expect("valid zeta argument")
}

fn ez2(a: u32, b: u32) -> ZetaExpression {
    ZetaExpression::ez2(a, b).expect("valid double zeta")
}

fn combo(terms: &[(i64, i64, ZetaExpression)]) -> ZetaExpression {
    let mut out = ZetaExpression::zero();
    for (p, q, e) in terms {
        out.add_scaled(e, &ratio(*p, *q));
    }
    out
}

/// Published sharp values `zeta#_r(2k, ..., 2k) = c pi^{2kr}`.
pub fn sharp_table() -> Vec<(u32, u32, Rational)> {
    vec![
        (2, 1, ratio(1, 320)),
        (2, 2, ratio(23, 14515200)),
        (2, 3, ratio(1369, 871782912000)),
        (3, 1, ratio(1, 40320)),
        (3, 2, ratio(23, 697426329600)),
        (3, 3, Rational::new(1997.into(), "17030314057236480000".parse::<BigInt>().unwrap())),
    ]
}

/// The reduction of `zeta_3(4,2,2)` to double zeta values.
pub fn triple_422_expected() -> ZetaExpression {
    let inner = combo(&[(4, 1, ez2(4, 2)), (6, 1, ez2(3, 3)), (7, 1, ez2(2, 4)), (8, 1, ez2(1, 5))]);
    &(&(&zeta(4) * &ez2(2, 2)) + &(&zeta(2) * &inner))
        + &combo(&[(-8, 1, ez2(6, 2)), (-10, 1, ez2(5, 3)), (-23, 2, ez2(4, 4)), (-12, 1, ez2(3, 5)), (-15, 2, ez2(2, 6))])
}

/// Right side of the `(2,2,4)` instance of the C_3 parity relation.
pub fn triple_224_rhs_expected() -> ZetaExpression {
    let inner = combo(&[(8, 1, ez2(4, 2)), (12, 1, ez2(3, 3)), (16, 1, ez2(2, 4)), (16, 1, ez2(1, 5))]);
    &(&(&zeta(4) * &ez2(2, 2)).scale(&ratio(2, 1)) + &(&zeta(2) * &inner))
        + &combo(&[(-16, 1, ez2(6, 2)), (-20, 1, ez2(5, 3)), (-25, 1, ez2(4, 4)), (-24, 1, ez2(3, 5)), (-17, 1, ez2(2, 6))])
}

/// `c_0 zeta(2N) + c_1 zeta(2) zeta(2N-2)`.
fn two_term(n: u32, c0: Rational, c1: Rational) -> ZetaExpression {
    let mut out = zeta(2 * n).scale(&c0);
    out.add_scaled(&(&zeta(2) * &zeta(2 * n - 2)), &c1);
    out
}

type Job = Box<dyn Fn(&EvalConfig) -> Vec<Check> + Send + Sync>;

fn job(f: impl Fn(&EvalConfig) -> Vec<Check> + Send + Sync + 'static) -> Job {
    Box::new(f)
}

/// Exact and numeric checks of all published values.
pub fn published_value_jobs() -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    jobs.push(job(|_| {
        let target = pi_c(1, 113400, 8);
        vec![
            exact_check("zeta_2(4,4) via recursion", identities::equal_arg_mzv(2, 2), &target),
            exact_check("zeta_2(4,4) via generating function", identities::volume_formula(Family::C, 2, 2), &target),
            rational_check("P(4,4) via generating function", natural_p_coefficient(Family::C, &[4, 4]), &ratio(1, 6300)),
            rational_check("P(4,4) via recursion", Ok(identities::p_from_c_recursion(2, 2)), &ratio(1, 6300)),
        ]
    }));
    for (r, k, c) in sharp_table() {
        jobs.push(job(move |_| {
            let label = format!("zeta#_{r}({})", vec![(2 * k).to_string(); r as usize].join(","));
            vec![exact_check(label, identities::volume_formula(Family::B, r, k), &ZetaExpression::pi_multiple(c.clone(), 2 * k * r))]
        }));
    }
    jobs.push(job(|_| {
        let mut v = vec![
            exact_check("reduce zeta_2(2,3)", identities::reduce_double(2, 3), &parse("1/2*pi^2*zeta(3) - 11/2*zeta(5)")),
            exact_check(
                "reduce zeta#_2(2,3)",
                identities::reduce_sharp_double(2, 3),
                &combo(&[(-21, 32, zeta(5)), (3, 8, &zeta(2) * &zeta(3))]),
            ),
            exact_check("reduce zeta_3(4,2,2)", identities::reduce_triple(4, 2, 2), &triple_422_expected()),
            exact_check(
                "C3 relation rhs at (2,2,4)",
                identities::triple_theorem(2, 2, 4).map(|(_, r)| r),
                &triple_224_rhs_expected(),
            ),
            exact_check("C2 parity rhs at (4,4)", identities::double_parity_rhs(4, 4), &pi_c(1, 28350, 8)),
            exact_check("B2 parity rhs at (2,2)", identities::b2_parity_rhs(2, 2), &pi_c(1, 80, 4)),
            exact_check("zeta_2(2,4) + zeta_2(4,2)", identities::symmetric_sum(Family::C, &[2, 4]), &pi_c(1, 1260, 6)),
            exact_check("restricted sum (C,3,1,3)", identities::restricted_sum(Family::C, 3, 1, 3), &pi_c(1, 5040, 6)),
        ];
        for n in 2..=8 {
            v.push(exact_check(
                format!("restricted sum (C,2,1,{n})"),
                identities::restricted_sum(Family::C, 2, 1, n),
                &zeta(2 * n).scale(&ratio(3, 4)),
            ));
            v.push(exact_check(format!("odd restricted sum N={n}"), identities::gkz_odd_sum(n), &zeta(2 * n).scale(&ratio(1, 4))));
        }
        for n in 3..=6 {
            v.push(exact_check(
                format!("restricted sum (C,3,1,{n})"),
                identities::restricted_sum(Family::C, 3, 1, n),
                &two_term(n, ratio(5, 8), ratio(-1, 4)),
            ));
        }
        v
    }));
    jobs.push(job(|cfg| {
        let tol = tolerance(cfg);
        let mzv = |s: Vec<u32>| MzvIndex::new(s).and_then(|i| ez_mzv(&i, cfg));
        let sharp = |s: Vec<u32>| SharpIndex::new(s).and_then(|i| sharp_mzv(&i, cfg));
        vec![
            numeric_check("numeric zeta_2(2,3)", mzv(vec![2, 3]), &parse("1/2*pi^2*zeta(3) - 11/2*zeta(5)"), tol, cfg),
            numeric_check("numeric zeta_2(4,4)", mzv(vec![4, 4]), &pi_c(1, 113400, 8), tol, cfg),
            numeric_check("numeric zeta#_2(2,2)", sharp(vec![2, 2]), &pi_c(1, 320, 4), tol, cfg),
            numeric_check("numeric zeta#_2(6,6)", sharp(vec![6, 6]), &pi_c(1369, 871782912000, 12), tol, cfg),
            numeric_check("numeric zeta#_3(2,2,2)", sharp(vec![2, 2, 2]), &pi_c(1, 40320, 6), tol, cfg),
            numeric_check(
                "numeric zeta#_2(2,3)",
                sharp(vec![2, 3]),
                &combo(&[(-21, 32, zeta(5)), (3, 8, &zeta(2) * &zeta(3))]),
                tol,
                cfg,
            ),
        ]
    }));
    jobs.push(job(|cfg| {
        let tol = tolerance(cfg);
        [(2, 3), (2, 2)]
            .iter()
            .map(|&(a, b)| {
                let label = format!("zeta#_2({a},{b}) = (zeta_2 + phi_2)/2");
                let lhs = SharpIndex::new(vec![a, b]).and_then(|i| sharp_mzv(&i, cfg));
                let rhs = (|| -> Result<BigFloat> {
                    let z = ez_mzv(&MzvIndex::new(vec![a, b])?, cfg)?;
                    Ok(z.add(&phi2(a, b, cfg)?).mul_rational(&ratio(1, 2)))
                })();
                difference_check(label, lhs, rhs, tol)
            })
            .collect()
    }));
    jobs.push(job(|_| reconstruction_checks()));
    jobs
}

fn rational_check(label: impl Into<String>, got: Result<Rational>, expected: &Rational) -> Check {
    let label = label.into();
    match got {
        Ok(g) => {
            let ok = &g == expected;
            let c = Check::new(label, ok).with_symbolic(format_rational(&g));
            if ok {
                c
            } else {
                c.with_detail(format!("expected {}", format_rational(expected)))
            }
        }
        Err(e) => Check::failed(label, &e),
    }
}

fn difference_check(label: String, a: Result<BigFloat>, b: Result<BigFloat>, tol: f64) -> Check {
    match a.and_then(|a| Ok((a, b?))) {
        Ok((a, b)) => {
            let d = a.sub(&b);
            let ok = d.is_zero_within_bound() && d.error_bound() <= tol;
            let mut c = Check::new(label, ok).with_value(&a, 40);
            c.bound = Some(d.error_bound());
            c
        }
        Err(e) => Check::failed(label, &e),
    }
}

/// Digits used for the reconstruction checks.
pub const RECONSTRUCTION_DIGITS: u32 = 40;

/// `q_max` used for the reconstruction checks.
pub fn reconstruction_q_max() -> BigInt {
    BigInt::from(10u64.pow(12))
}

/// Every published `pi`-power rational, with its numeric source.
pub fn reconstruction_targets() -> Vec<(String, Vec<u32>, bool, Rational)> {
    let mut v = vec![("zeta_2(4,4)".to_string(), vec![4, 4], false, ratio(1, 113400))];
    for (r, k, c) in sharp_table() {
        let args = vec![2 * k; r as usize];
        let label = format!("zeta#_{r}({})", args.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
        v.push((label, args, true, c));
    }
    v
}

/// Numeric value of one reconstruction target at [`RECONSTRUCTION_DIGITS`].
pub fn reconstruction_value(args: &[u32], sharp: bool) -> Result<BigFloat> {
    let cfg = EvalConfig::default().with_digits(RECONSTRUCTION_DIGITS);
    if sharp {
        sharp_mzv(&SharpIndex::new(args.to_vec())?, &cfg)
    } else {
        ez_mzv(&MzvIndex::new(args.to_vec())?, &cfg)
    }
}

fn reconstruction_checks() -> Vec<Check> {
    let q_max = reconstruction_q_max();
    let targets = reconstruction_targets();
    map_collect(&targets, |(label, args, sharp, expected)| {
        let w: u32 = args.iter().sum();
        let got = reconstruction_value(args, *sharp).and_then(|x| pi_power_coefficient(&x, w, &q_max));
        let mut c = rational_check(format!("reconstruct {label} (40 digits, q_max 1e12)"), got, expected);
        if !c.passed && expected.denom() > &q_max {
            c.detail = Some(format!(
                "{} [denominator exceeds q_max]",
                c.detail.unwrap_or_default()
            ));
        }
        c
    })
}

/// Parity relation residuals over the standard grids.
pub fn relation_jobs() -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for a in 2..=4 {
        for b in 2..=4 {
            for c in 2..=4 {
                jobs.push(job(move |cfg| {
                    vec![
                        relation_check(identities::triple_relation(a, b, c, cfg), format!("C3-parity({a},{b},{c})")),
                        relation_check(identities::b3_relation(a, b, c, cfg), format!("B3-parity({a},{b},{c})")),
                    ]
                }));
            }
        }
    }
    for p in 2..=6 {
        for q in 2..=6 {
            jobs.push(job(move |cfg| {
                vec![
                    relation_check(identities::double_relation(p, q, cfg), format!("C2-parity({p},{q})")),
                    relation_check(identities::b2_relation(p, q, cfg), format!("B2-parity({p},{q})")),
                ]
            }));
        }
    }
    jobs
}

/// Ordered tuples of even integers `>= 2` of length `r` and weight `<= max`.
pub fn even_tuples(r: usize, max: u32) -> Vec<Vec<u32>> {
    if r == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut k = 2;
    while k + 2 * (r as u32 - 1) <= max {
        for mut rest in even_tuples(r - 1, max - k) {
            rest.insert(0, k);
            out.push(rest);
        }
        k += 2;
    }
    out
}

/// Symbolic routes against the numeric evaluators.
pub fn oracle_jobs() -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for (family, rank) in [(Family::C, 2), (Family::C, 3), (Family::B, 2), (Family::B, 3)] {
        for k in even_tuples(rank, 12) {
            jobs.push(job(move |cfg| {
                let label = format!("P{family}{rank}({}) exact vs numeric", k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
                let run = || -> Result<(Rational, Rational)> {
                    let datum = build_root_datum(family, rank)?;
                    let exact = natural_p_coefficient(family, &k)?;
                    let q_max = BigInt::from(10u64).pow(30);
                    let numeric = p_coefficient_numeric_fallback(&datum, RootSet::natural(family), &k, cfg, &q_max)?;
                    Ok((exact, numeric))
                };
                vec![match run() {
                    Ok((e, n)) => rational_check(label, Ok(n), &e),
                    Err(err) => Check::failed(label, &err),
                }]
            }));
        }
    }
    for r in 1..=3 {
        for k in 1..=3 {
            jobs.push(job(move |_| {
                let expected = match identities::equal_arg_mzv(r, k) {
                    Ok(e) => e,
                    Err(err) => return vec![Check::failed(format!("routes agree ({r},{k})"), &err)],
                };
                vec![exact_check(format!("recursion vs generating function ({r},{k})"), identities::volume_formula(Family::C, r, k), &expected)]
            }));
        }
    }
    jobs.push(job(|cfg| {
        let tol = tolerance(cfg);
        let mut v = Vec::new();
        for s in 2..=8 {
            for t in 2..=8 {
                let label = format!("stuffle zeta({s}) zeta({t})");
                let lhs = riemann_zeta(s, cfg).and_then(|a| Ok(a.mul(&riemann_zeta(t, cfg)?)));
                let rhs = (|| -> Result<BigFloat> {
                    let st = ez_mzv(&MzvIndex::new(vec![s, t])?, cfg)?;
                    let ts = ez_mzv(&MzvIndex::new(vec![t, s])?, cfg)?;
                    Ok(st.add(&ts).add(&riemann_zeta(s + t, cfg)?))
                })();
                v.push(difference_check(label, lhs, rhs, tol));
            }
        }
        v
    }));
    jobs.push(job(|cfg| {
        let tol = tolerance(cfg);
        (3..=10)
            .map(|k| {
                let lhs = (2..k).try_fold(BigFloat::zero(cfg.precision_bits + 8), |acc, j| {
                    Ok::<_, Error>(acc.add(&ez_mzv(&MzvIndex::new(vec![k - j, j])?, cfg)?))
                });
                difference_check(format!("sum formula K={k}"), lhs, riemann_zeta(k, cfg), tol)
            })
            .collect()
    }));
    jobs.push(job(|cfg| {
        let tol = tolerance(cfg);
        let mut v = Vec::new();
        for a in 2..=6 {
            for b in 2..=6 {
                let label = format!("zeta#_2({a},{b}) = (zeta_2 + phi_2)/2");
                let lhs = SharpIndex::new(vec![a, b]).and_then(|i| sharp_mzv(&i, cfg));
                let rhs = (|| -> Result<BigFloat> {
                    let z = ez_mzv(&MzvIndex::new(vec![a, b])?, cfg)?;
                    Ok(z.add(&phi2(a, b, cfg)?).mul_rational(&ratio(1, 2)))
                })();
                v.push(difference_check(label, lhs, rhs, tol));
            }
        }
        v
    }));
    jobs.push(job(|cfg| {
        let tol = tolerance(cfg);
        let mut v = Vec::new();
        for w in (3..=11).step_by(2) {
            for p in 1..w - 1 {
                let q = w - p;
                let mzv = MzvIndex::new(vec![p, q]).and_then(|i| ez_mzv(&i, cfg));
                match identities::reduce_double(p, q) {
                    Ok(e) => v.push(numeric_check(format!("reduce zeta_2({p},{q})"), mzv, &e, tol, cfg)),
                    Err(err) => v.push(Check::failed(format!("reduce zeta_2({p},{q})"), &err)),
                }
                if p >= 2 {
                    let sharp = SharpIndex::new(vec![p, q]).and_then(|i| sharp_mzv(&i, cfg));
                    match identities::reduce_sharp_double(p, q) {
                        Ok(e) => v.push(numeric_check(format!("reduce zeta#_2({p},{q})"), sharp, &e, tol, cfg)),
                        Err(err) => v.push(Check::failed(format!("reduce zeta#_2({p},{q})"), &err)),
                    }
                }
            }
        }
        v
    }));
    jobs.push(job(|cfg| {
        let tol = tolerance(cfg);
        [(2, 3, 3), (2, 2, 2), (3, 3, 2), (2, 4, 4), (4, 2, 2)]
            .iter()
            .map(|&(a, b, c)| {
                let label = format!("reduce zeta_3({a},{b},{c})");
                let value = MzvIndex::new(vec![a, b, c]).and_then(|i| ez_mzv(&i, cfg));
                match identities::reduce_triple(a, b, c) {
                    Ok(e) => numeric_check(label, value, &e, tol, cfg),
                    Err(err) => Check::failed(label, &err),
                }
            })
            .collect()
    }));
    jobs.push(job(|cfg| {
        let tol = tolerance(cfg);
        (2..=8)
            .map(|n| {
                let direct = (1..n).try_fold(BigFloat::zero(cfg.precision_bits + 8), |acc, a| {
                    Ok::<_, Error>(acc.add(&ez_mzv(&MzvIndex::new(vec![2 * a - 1, 2 * (n - a) + 1])?, cfg)?))
                });
                match identities::gkz_odd_sum(n) {
                    Ok(e) => numeric_check(format!("odd restricted sum N={n} direct"), direct, &e, tol, cfg),
                    Err(err) => Check::failed(format!("odd restricted sum N={n}"), &err),
                }
            })
            .collect()
    }));
    jobs.push(job(|cfg| {
        let mut v = Vec::new();
        for n in 3..=6 {
            let closed = identities::sums::shen_cai(3, n).expect("depth 3");
            let direct = identities::sums::restricted_sum_numeric(3, 1, n, cfg);
            v.push(numeric_check(format!("depth-3 restricted sum N={n} direct"), direct, &closed, tolerance(cfg), cfg));
        }
        for n in 4..=5 {
            let closed = identities::sums::shen_cai(4, n).expect("depth 4");
            let direct = identities::sums::restricted_sum_numeric(4, 1, n, cfg);
            v.push(numeric_check(format!("depth-4 restricted sum N={n} direct"), direct, &closed, 1e-18, cfg));
        }
        v
    }));
    jobs
}

/// Runs a suite. The report order is fixed regardless of scheduling.
pub fn run_suite(suite: Suite, cfg: &EvalConfig) -> Vec<Check> {
    let jobs = match suite {
        Suite::PublishedValues => published_value_jobs(),
        Suite::Relations => relation_jobs(),
        Suite::Oracles => oracle_jobs(),
        Suite::All => {
            let mut j = published_value_jobs();
            j.extend(relation_jobs());
            j.extend(oracle_jobs());
            j
        }
    };
    map_collect(&jobs, |j| j(cfg)).into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_tuple_enumeration() {
        assert_eq!(even_tuples(2, 6), vec![vec![2, 2], vec![2, 4], vec![4, 2]]);
        assert!(even_tuples(3, 12).iter().all(|t| t.iter().sum::<u32>() <= 12));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::All, Suite::PublishedValues, Suite::Relations, Suite::Oracles] {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
    }
}
