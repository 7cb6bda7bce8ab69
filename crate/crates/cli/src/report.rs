use std::fmt::Write as _;

use mzv_core::verify::Check;
use mzv_core::BigFloat;
use serde::Serialize;

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Serialize, Debug, Clone)]
pub struct Row {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbolic: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Row {
    pub fn new(label: impl Into<String>) -> Self {
        Self { label: label.into(), symbolic: None, numeric: None, bound: None, status: Status::Pass, detail: None }
    }

    pub fn symbolic(mut self, s: impl ToString) -> Self {
        self.symbolic = Some(s.to_string());
        self
    }

    pub fn value(mut self, v: &BigFloat, digits: usize) -> Self {
        self.numeric = Some(v.to_decimal(digits));
        self.bound = Some(v.error_bound());
        self
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn failed(mut self, why: impl ToString) -> Self {
        self.status = Status::Fail;
        self.detail = Some(why.to_string());
        self
    }
}

impl From<Check> for Row {
    fn from(c: Check) -> Self {
        Row {
            label: c.label,
            symbolic: c.symbolic,
            numeric: c.numeric,
            bound: c.bound,
            status: if c.passed { Status::Pass } else { Status::Fail },
            detail: c.detail,
        }
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct ConfigSnapshot {
    pub precision_bits: u32,
    pub digits: usize,
    pub cutoff: u64,
    pub em_order: u32,
    pub trunc: u32,
}

#[derive(Serialize, Debug, Clone)]
pub struct Report {
    pub command: Vec<String>,
    pub status: Status,
    pub results: Vec<Row>,
    pub config: ConfigSnapshot,
    pub wall_time: f64,
}

impl Report {
    pub fn new(command: Vec<String>, results: Vec<Row>, config: ConfigSnapshot, wall_time: f64) -> Self {
        let status = if results.iter().all(|r| r.status == Status::Pass) { Status::Pass } else { Status::Fail };
        Self { command, status, results, config, wall_time }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: mzv {}", self.command.join(" "));
        let c = &self.config;
        let _ = writeln!(
            s,
            "config: precision_bits={} digits={} cutoff={} em_order={} trunc={}",
            c.precision_bits, c.digits, c.cutoff, c.em_order, c.trunc
        );
        for r in &self.results {
            let tag = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            let _ = write!(s, "[{tag}] {}", r.label);
            if let Some(x) = &r.symbolic {
                let _ = write!(s, " = {x}");
            }
            if let Some(x) = &r.numeric {
                let _ = write!(s, "\n    ~ {x}");
                if let Some(b) = r.bound {
                    let _ = write!(s, " (+- {b:.3e})");
                }
            }
            if let Some(d) = &r.detail {
                let _ = write!(s, "\n    {d}");
            }
            s.push('\n');
        }
        let passed = self.results.iter().filter(|r| r.status == Status::Pass).count();
        let _ = writeln!(s, "status: {} ({passed}/{} pass)", if self.passed() { "pass" } else { "fail" }, self.results.len());
        let _ = writeln!(s, "wall_time: {:.3}s", self.wall_time);
        s
    }
}
