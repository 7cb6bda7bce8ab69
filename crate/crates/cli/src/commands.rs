use mzv_core::algebra::rational::{format_rational, parse_rational, ratio};
use mzv_core::identities::sums::{restricted_sum_numeric, shen_cai};
use mzv_core::identities::{numeric_value, reduce_double, reduce_sharp_double, reduce_triple, restricted_sum, volume_formula};
use mzv_core::numeric::{ez_mzv, phi2, riemann_zeta, sharp_mzv, MzvIndex, SharpIndex};
use mzv_core::roots::genfun::p_coefficient;
use mzv_core::roots::{build_root_datum, Family, RootSet};
use mzv_core::verify::run_suite;
use mzv_core::{BigFloat, Error, EvalConfig, Rational, ZetaExpression};

use crate::args::{Command, EvalArgs, PcoeffArgs, ReduceArgs, SetArg, SumsArgs, VolumeArgs};
use crate::report::Row;

/// Failure that maps to an exit code.
#[derive(Debug)]
pub enum Failure {
    /// Malformed or out-of-domain arguments (exit 2).
    Usage(String),
    /// The computation itself failed (exit 1).
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::Parse { .. } | Error::UnsupportedDatum { .. } | Error::Divergent(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Compute(other.to_string()),
        }
    }
}

pub struct Context {
    pub cfg: EvalConfig,
    pub digits: usize,
    pub trunc: u32,
}

fn parse_list(flag: &str, s: &str) -> Result<Vec<u32>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::Usage(format!("--{flag}: expected comma-separated non-negative integers, got {s:?}")))
}

fn parse_fixed<const N: usize>(flag: &str, s: &str) -> Result<[u32; N], Failure> {
    let v = parse_list(flag, s)?;
    v.try_into()
        .map_err(|_| Failure::Usage(format!("--{flag}: expected exactly {N} integers, got {s:?}")))
}

fn joined(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn check_trunc(ctx: &Context, degree: u32) -> Result<(), Failure> {
    if degree > ctx.trunc {
        return Err(Failure::Usage(format!(
            "total degree {degree} exceeds the truncation budget --trunc {}",
            ctx.trunc
        )));
    }
    Ok(())
}

pub fn run(command: &Command, ctx: &Context) -> Result<Vec<Row>, Failure> {
    match command {
        Command::Eval(a) => eval(a, ctx),
        Command::Reduce(a) => reduce(a, ctx),
        Command::Volume(a) => volume(a, ctx),
        Command::Sums(a) => sums(a, ctx),
        Command::Pcoeff(a) => pcoeff(a, ctx),
        Command::Verify(a) => Ok(run_suite(a.suite, &ctx.cfg).into_iter().map(Row::from).collect()),
    }
}

fn numeric_row(label: String, value: mzv_core::Result<BigFloat>, ctx: &Context) -> Row {
    match value {
        Ok(v) => Row::new(label).value(&v, ctx.digits),
        Err(e) => Row::new(label).failed(e),
    }
}

fn eval(a: &EvalArgs, ctx: &Context) -> Result<Vec<Row>, Failure> {
    let cfg = &ctx.cfg;
    let row = if let Some(s) = &a.mzv {
        let idx = MzvIndex::new(parse_list("mzv", s)?)?;
        numeric_row(format!("zeta_{}({})", idx.depth(), joined(idx.exponents())), ez_mzv(&idx, cfg), ctx)
    } else if let Some(s) = &a.sharp {
        let idx = SharpIndex::new(parse_list("sharp", s)?)?;
        numeric_row(format!("zeta#_{}({})", idx.depth(), joined(idx.exponents())), sharp_mzv(&idx, cfg), ctx)
    } else if let Some(s) = a.zeta {
        if s < 2 {
            return Err(Failure::Usage(format!("--zeta: need s >= 2, got {s}")));
        }
        numeric_row(format!("zeta({s})"), riemann_zeta(s, cfg), ctx)
    } else if let Some(s) = &a.phi2 {
        let [p, q] = parse_fixed::<2>("phi2", s)?;
        if p < 1 || q < 2 {
            return Err(Failure::Usage(format!("--phi2: need a >= 1 and b >= 2, got ({p},{q})")));
        }
        numeric_row(format!("phi_2({p},{q})"), phi2(p, q, cfg), ctx)
    } else {
        unreachable!("clap enforces one eval target")
    };
    Ok(vec![row])
}

/// Symbolic result, its value, and agreement with the direct series.
fn closed_form_row(label: String, expr: ZetaExpression, direct: mzv_core::Result<BigFloat>, ctx: &Context) -> Row {
    let row = Row::new(label).symbolic(&expr);
    let value = numeric_value(&expr, &ctx.cfg);
    match (value, direct) {
        (Ok(v), Ok(d)) => {
            let diff = v.sub(&d);
            let row = row.value(&v, ctx.digits);
            if diff.is_zero_within_bound() {
                row
            } else {
                row.failed(format!("differs from the direct series by {:.3e}", diff.to_f64()))
            }
        }
        (Err(e), _) | (_, Err(e)) => row.failed(e),
    }
}

fn reduce(a: &ReduceArgs, ctx: &Context) -> Result<Vec<Row>, Failure> {
    let cfg = &ctx.cfg;
    let row = if let Some(s) = &a.double {
        let [p, q] = parse_fixed::<2>("double", s)?;
        let idx = MzvIndex::new(vec![p, q])?;
        let expr = reduce_double(p, q)?;
        closed_form_row(format!("zeta_2({p},{q})"), expr, ez_mzv(&idx, cfg), ctx)
    } else if let Some(s) = &a.sharp_double {
        let [p, q] = parse_fixed::<2>("sharp-double", s)?;
        let idx = SharpIndex::new(vec![p, q])?;
        let expr = reduce_sharp_double(p, q)?;
        closed_form_row(format!("zeta#_2({p},{q})"), expr, sharp_mzv(&idx, cfg), ctx)
    } else if let Some(s) = &a.triple {
        let [x, y, z] = parse_fixed::<3>("triple", s)?;
        let idx = MzvIndex::new(vec![x, y, z])?;
        match reduce_triple(x, y, z) {
            Ok(expr) => closed_form_row(format!("zeta_3({x},{y},{z})"), expr, ez_mzv(&idx, cfg), ctx),
            Err(e @ Error::Underdetermined(_)) => Row::new(format!("zeta_3({x},{y},{z})")).failed(e),
            Err(e) => return Err(e.into()),
        }
    } else {
        unreachable!("clap enforces one reduce target")
    };
    Ok(vec![row])
}

fn direct_equal_args(family: Family, r: u32, arg: u32, cfg: &EvalConfig) -> mzv_core::Result<BigFloat> {
    let args = vec![arg; r as usize];
    match family {
        Family::C => ez_mzv(&MzvIndex::new(args)?, cfg),
        Family::B => sharp_mzv(&SharpIndex::new(args)?, cfg),
    }
}

fn series_name(family: Family) -> &'static str {
    match family {
        Family::C => "zeta",
        Family::B => "zeta#",
    }
}

fn volume(a: &VolumeArgs, ctx: &Context) -> Result<Vec<Row>, Failure> {
    if a.depth == 0 || a.k == 0 {
        return Err(Failure::Usage("volume: need --depth >= 1 and --k >= 1".into()));
    }
    check_trunc(ctx, 2 * a.k * a.depth)?;
    build_root_datum(a.family, a.depth as usize)?;
    let expr = volume_formula(a.family, a.depth, a.k)?;
    let label = format!(
        "{}_{}({})",
        series_name(a.family),
        a.depth,
        vec![(2 * a.k).to_string(); a.depth as usize].join(",")
    );
    let direct = direct_equal_args(a.family, a.depth, 2 * a.k, &ctx.cfg);
    Ok(vec![closed_form_row(label, expr, direct, ctx)])
}

fn sums(a: &SumsArgs, ctx: &Context) -> Result<Vec<Row>, Failure> {
    if a.depth == 0 || a.d == 0 || a.n < a.depth {
        return Err(Failure::Usage(format!(
            "sums: need --depth >= 1, --d >= 1 and --N >= --depth (got depth={}, d={}, N={})",
            a.depth, a.d, a.n
        )));
    }
    check_trunc(ctx, 2 * a.d * a.n)?;
    build_root_datum(a.family, a.depth as usize)?;
    let label = format!("restricted sum {}{} d={} N={}", a.family, a.depth, a.d, a.n);
    let expr = restricted_sum(a.family, a.depth, a.d, a.n)?;
    let mut rows = Vec::new();
    let row = if a.family == Family::C {
        closed_form_row(label, expr.clone(), restricted_sum_numeric(a.depth, a.d, a.n, &ctx.cfg), ctx)
    } else {
        match numeric_value(&expr, &ctx.cfg) {
            Ok(v) => Row::new(label).symbolic(&expr).value(&v, ctx.digits),
            Err(e) => Row::new(label).symbolic(&expr).failed(e),
        }
    };
    rows.push(row);
    if a.family == Family::C && a.d == 1 {
        let n = a.n;
        let decomposition = match a.depth {
            2 => Some((ZetaExpression::zeta(2 * n)?.scale(&ratio(3, 4)), format!("3/4 zeta({})", 2 * n))),
            3 | 4 => {
                let (c0, c1) = if a.depth == 3 { ("5/8", "1/4") } else { ("35/64", "5/16") };
                Some((shen_cai(a.depth, n)?, format!("{c0} zeta({}) - {c1} zeta(2) zeta({})", 2 * n, 2 * n - 2)))
            }
            _ => None,
        };
        if let Some((closed, text)) = decomposition {
            let row = Row::new(format!("decomposition N={n}")).symbolic(&closed).detail(text);
            rows.push(if closed == expr { row } else { row.failed("does not match the restricted sum") });
        }
    }
    Ok(rows)
}

fn pcoeff(a: &PcoeffArgs, ctx: &Context) -> Result<Vec<Row>, Failure> {
    let k = parse_list("k", &a.k)?;
    check_trunc(ctx, k.iter().sum())?;
    let datum = build_root_datum(a.family, k.len())?;
    let set = match a.set {
        Some(SetArg::Long) => RootSet::Long,
        Some(SetArg::Short) => RootSet::Short,
        None => RootSet::natural(a.family),
    };
    let y: Vec<Rational> = match &a.y {
        Some(s) => s.split(',').map(|t| parse_rational(t.trim())).collect::<mzv_core::Result<_>>()?,
        None => vec![Rational::from_integer(0.into()); datum.rank],
    };
    if y.len() != datum.rank {
        return Err(Failure::Usage(format!("--y: expected {} entries, got {}", datum.rank, y.len())));
    }
    let label = format!("P[{}{} {:?}]({}; y={})", a.family, datum.rank, set, joined(&k),
        y.iter().map(format_rational).collect::<Vec<_>>().join(","));
    let row = match p_coefficient(&datum, set, &k, &y) {
        Ok(p) => Row::new(label).symbolic(format_rational(&p)),
        Err(e) => Row::new(label).failed(e),
    };
    Ok(vec![row])
}
