use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mzv_core::roots::Family;
use mzv_core::verify::Suite;

#[derive(Parser, Debug)]
#[command(name = "mzv", version, about = "Exact and numeric multiple zeta values, Euler-Zagier and B-type")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Decimal digits of working precision
    #[arg(long, global = true, env = "MZV_DIGITS")]
    pub digits: Option<u32>,

    /// Terms summed directly in every summation variable
    #[arg(long, global = true, env = "MZV_CUTOFF")]
    pub cutoff: Option<u64>,

    /// Bernoulli correction terms per Euler-Maclaurin tail
    #[arg(long = "em-order", global = true, env = "MZV_EM_ORDER")]
    pub em_order: Option<u32>,

    /// Largest total degree of generating-function work
    #[arg(long, global = true, env = "MZV_TRUNC")]
    pub trunc: Option<u32>,

    #[arg(long, global = true, value_enum, env = "MZV_FORMAT", default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// key=value file with precision_bits, digits, cutoff, em_order
    #[arg(long, global = true, env = "MZV_CONFIG")]
    pub config: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a series numerically
    Eval(EvalArgs),
    /// Reduce a double or triple value to lower depth
    Reduce(ReduceArgs),
    /// Closed form of an equal-argument value
    Volume(VolumeArgs),
    /// Restricted sum over even tuples of a fixed weight
    Sums(SumsArgs),
    /// Coefficient of the root-system generating function
    Pcoeff(PcoeffArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct EvalArgs {
    /// Euler-Zagier value zeta_r(s_1,...,s_r)
    #[arg(long, value_name = "S1,S2,..")]
    pub mzv: Option<String>,
    /// B-type value zeta#_r(s_1,...,s_r)
    #[arg(long, value_name = "S1,S2,..")]
    pub sharp: Option<String>,
    /// Riemann zeta(s)
    #[arg(long, value_name = "S")]
    pub zeta: Option<u32>,
    /// Alternating double series phi_2(a,b)
    #[arg(long, value_name = "A,B")]
    pub phi2: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct ReduceArgs {
    #[arg(long, value_name = "P,Q")]
    pub double: Option<String>,
    #[arg(long = "sharp-double", value_name = "P,Q")]
    pub sharp_double: Option<String>,
    #[arg(long, value_name = "A,B,C")]
    pub triple: Option<String>,
}

#[derive(Args, Debug)]
pub struct VolumeArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    /// Rank r
    #[arg(long)]
    pub depth: u32,
    /// Every argument equals 2k
    #[arg(long)]
    pub k: u32,
}

#[derive(Args, Debug)]
pub struct SumsArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub depth: u32,
    /// Arguments are 2d times the parts
    #[arg(long, default_value_t = 1)]
    pub d: u32,
    /// Weight is 2dN
    #[arg(long = "N")]
    pub n: u32,
}

#[derive(Args, Debug)]
pub struct PcoeffArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    /// Exponent vector; its length is the rank
    #[arg(long, value_name = "K1,K2,..")]
    pub k: String,
    /// Shift vector of rationals
    #[arg(long, value_name = "Y1,Y2,..")]
    pub y: Option<String>,
    /// Root set (defaults to long for C and short for B)
    #[arg(long, value_enum)]
    pub set: Option<SetArg>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetArg {
    Long,
    Short,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_parser = parse_suite, default_value = "all")]
    pub suite: Suite,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|_| format!("expected B or C, got {s:?}"))
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: mzv_core::Error| e.to_string())
}
