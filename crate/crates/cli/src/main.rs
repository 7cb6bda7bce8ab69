mod args;
mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use mzv_core::EvalConfig;

use args::{Cli, Format, GlobalOpts};
use commands::{Context, Failure};
use report::{ConfigSnapshot, Report};

const DEFAULT_TRUNC: u32 = 32;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli, argv[1..].to_vec()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("computation failed: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Config file first, then flags (or their environment defaults).
fn build_context(g: &GlobalOpts) -> Result<Context, Failure> {
    let mut cfg = EvalConfig::default();
    if let Some(path) = &g.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read config {}: {e}", path.display())))?;
        cfg = cfg.apply_kv(&text)?;
    }
    if let Some(d) = g.digits {
        if d == 0 {
            return Err(Failure::Usage("--digits must be positive".into()));
        }
        cfg = cfg.with_digits(d);
    }
    if let Some(c) = g.cutoff {
        cfg.cutoff = c;
    }
    if let Some(m) = g.em_order {
        cfg.em_order = m;
    }
    cfg.validate()?;
    let digits = match g.digits {
        Some(d) => d as usize,
        None => ((cfg.precision_bits - 8) as f64 * std::f64::consts::LOG10_2).floor() as usize,
    };
    Ok(Context { cfg, digits, trunc: g.trunc.unwrap_or(DEFAULT_TRUNC) })
}

fn run(cli: Cli, command: Vec<String>) -> Result<bool, Failure> {
    let ctx = build_context(&cli.global)?;
    let start = Instant::now();
    let rows = commands::run(&cli.command, &ctx)?;
    let config = ConfigSnapshot {
        precision_bits: ctx.cfg.precision_bits,
        digits: ctx.digits,
        cutoff: ctx.cfg.cutoff,
        em_order: ctx.cfg.em_order,
        trunc: ctx.trunc,
    };
    let report = Report::new(command, rows, config, start.elapsed().as_secs_f64());
    let body = match cli.global.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    match &cli.global.out {
        Some(path) => {
            std::fs::write(path, body)
                .map_err(|e| Failure::Compute(format!("cannot write {}: {e}", path.display())))?;
            let passed = report.results.iter().filter(|r| r.status == report::Status::Pass).count();
            println!("{}: {passed}/{} pass, report written to {}", if report.passed() { "pass" } else { "fail" }, report.results.len(), path.display());
        }
        None => print!("{body}"),
    }
    Ok(report.passed())
}
