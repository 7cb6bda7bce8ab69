use std::fmt;

use crate::error::{Error, Result};

use super::bigfloat::{pow2_f64, MAX_BITS};

/// Extra fraction bits carried through every evaluation.
pub const GUARD_BITS: u32 = 32;

/// Slack between the requested precision and the promised error bound:
/// results satisfy `error_bound <= 2^(GUARD_SLACK - precision_bits)`.
pub const GUARD_SLACK: u32 = 4;

/// Accuracy floor for depth-4 sums, in decimal digits.
pub const DEPTH4_DIGITS: u32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EvalConfig {
    pub precision_bits: u32,
    /// Number of leading terms summed directly in every summation variable.
    pub cutoff: u64,
    /// Number of Bernoulli correction terms in each Euler-Maclaurin tail.
    pub em_order: u32,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            precision_bits: 256,
            cutoff: 2000,
            em_order: 24,
        }
    }
}

impl EvalConfig {
    pub fn new(precision_bits: u32, cutoff: u64, em_order: u32) -> Result<Self> {
        let cfg = Self {
            precision_bits,
            cutoff,
            em_order,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Precision sized for `digits` correct decimal places.
    pub fn with_digits(mut self, digits: u32) -> Self {
        let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 8;
        self.precision_bits = bits.max(64);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.precision_bits < 64 || self.precision_bits > MAX_BITS - GUARD_BITS - 8 {
            return Err(Error::InvalidArgument(format!(
                "precision_bits must be in 64..={} (got {})",
                MAX_BITS - GUARD_BITS - 8,
                self.precision_bits
            )));
        }
        if self.cutoff < 16 {
            return Err(Error::InvalidArgument(format!(
                "cutoff must be >= 16 (got {})",
                self.cutoff
            )));
        }
        if self.em_order < 2 {
            return Err(Error::InvalidArgument(format!(
                "em_order must be >= 2 (got {})",
                self.em_order
            )));
        }
        Ok(())
    }

    pub fn working_bits(&self) -> u32 {
        self.precision_bits + GUARD_BITS
    }

    /// Error bound every evaluation of the given depth must meet.
    pub fn target_bound(&self, depth: usize) -> f64 {
        let t = pow2_f64(GUARD_SLACK as i64 - self.precision_bits as i64);
        if depth >= 4 {
            t.max(10f64.powi(-(DEPTH4_DIGITS as i32)))
        } else {
            t
        }
    }

    /// Parse `key = value` lines (`#` comments allowed) on top of `self`.
    /// Keys: `precision_bits`, `digits`, `cutoff`, `em_order`.
    pub fn apply_kv(mut self, text: &str) -> Result<Self> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| Error::Parse {
                pos: lineno + 1,
                msg,
            };
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got {line:?}")))?;
            let (k, v) = (k.trim(), v.trim());
            let num: u64 = v
                .parse()
                .map_err(|_| bad(format!("value for {k} is not a non-negative integer: {v:?}")))?;
            let small = || u32::try_from(num).map_err(|_| bad(format!("{k} out of range")));
            match k {
                "precision_bits" => self.precision_bits = small()?,
                "digits" => self = self.with_digits(small()?),
                "cutoff" => self.cutoff = num,
                "em_order" => self.em_order = small()?,
                _ => return Err(bad(format!("unknown key {k:?}"))),
            }
        }
        self.validate()?;
        Ok(self)
    }
}

impl fmt::Display for EvalConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "precision_bits={} cutoff={} em_order={}",
            self.precision_bits, self.cutoff, self.em_order
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(EvalConfig::default().validate().is_ok());
        assert!(EvalConfig::new(63, 2000, 24).is_err());
        assert!(EvalConfig::new(64, 15, 24).is_err());
        assert!(EvalConfig::new(64, 16, 1).is_err());
    }

    #[test]
    fn key_value_file() {
        let cfg = EvalConfig::default()
            .apply_kv("# comment\ncutoff = 500\nem_order=10\n\nprecision_bits = 128")
            .unwrap();
        assert_eq!(cfg, EvalConfig::new(128, 500, 10).unwrap());
        assert!(EvalConfig::default().apply_kv("bogus=1").is_err());
        assert!(EvalConfig::default().apply_kv("cutoff").is_err());
        assert!(EvalConfig::default().apply_kv("cutoff=2").is_err());
    }

    #[test]
    fn digits_to_bits() {
        let cfg = EvalConfig::default().with_digits(40);
        assert!(cfg.precision_bits >= 133);
        assert!(cfg.target_bound(3) < 1e-40);
        assert!(EvalConfig::default().target_bound(4) >= 1e-20);
    }
}
