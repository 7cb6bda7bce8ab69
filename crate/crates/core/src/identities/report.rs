//! Numeric checking of exact relations.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::expr::ZetaExpression;
use crate::error::Result;
use crate::numeric::{generator_value, pi, BigFloat, EvalConfig};
use crate::parallel::map_collect;

/// Numeric value of an expression; generators are evaluated in parallel.
pub fn numeric_value(expr: &ZetaExpression, cfg: &EvalConfig) -> Result<BigFloat> {
    let gens = expr.generators();
    let values = map_collect(&gens, |g| generator_value(g, cfg));
    let mut table = BTreeMap::new();
    for (g, v) in gens.into_iter().zip(values) {
        table.insert(g, v?);
    }
    expr.numeric_with_table(&pi(cfg.precision_bits + 8), &table)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// Both sides of an instance of a relation with the numeric residual.
#[derive(Clone, Debug)]
pub struct RelationReport {
    pub label: String,
    pub inputs: Vec<u32>,
    pub lhs: ZetaExpression,
    pub rhs: ZetaExpression,
    pub lhs_value: BigFloat,
    pub residual: BigFloat,
    /// Largest residual bound still counted as a pass.
    pub tolerance: f64,
    pub status: Status,
}

impl RelationReport {
    /// Evaluates both sides. Passes iff the residual interval contains zero
    /// and its radius is at most `2^(24 - precision_bits)`.
    pub fn evaluate(
        label: impl Into<String>,
        inputs: Vec<u32>,
        lhs: ZetaExpression,
        rhs: ZetaExpression,
        cfg: &EvalConfig,
    ) -> Result<Self> {
        let tolerance = 2f64.powi(24 - cfg.precision_bits as i32);
        let l = numeric_value(&lhs, cfg)?;
        let r = numeric_value(&rhs, cfg)?;
        let residual = l.sub(&r);
        let ok = residual.is_zero_within_bound() && residual.error_bound() <= tolerance;
        Ok(Self {
            label: label.into(),
            inputs,
            lhs,
            rhs,
            lhs_value: l,
            residual,
            tolerance,
            status: if ok { Status::Pass } else { Status::Fail },
        })
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Decimal digits guaranteed by the residual bound.
    pub fn digits(&self) -> usize {
        self.residual.correct_digits(999)
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.inputs.iter().map(|x| x.to_string()).collect();
        write!(
            f,
            "{}({}) residual {:.3e} bound {:.3e} {}",
            self.label,
            args.join(","),
            self.residual.to_f64(),
            self.residual.error_bound(),
            self.status
        )
    }
}
