use std::ops::RangeInclusive;

use gorenstein_core::sampling::{DEFAULT_BOUND, DEFAULT_TRIALS};

use crate::{LabError, Result};

pub const DEFAULT_SEED: u64 = 42;

/// Environment variable that replaces [`DEFAULT_SEED`].
pub const SEED_ENV: &str = "GORENSTEIN_LAB_SEED";

pub const DEFAULT_SAMPLES: usize = 200;
pub const DEFAULT_D_MIN: u32 = 5;
pub const DEFAULT_D_MAX: u32 = 9;

/// Parameters shared by surveys and the reproduce suite.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RunConfig {
    pub seed: u64,
    /// Coefficients are drawn from `[-bound, bound]`.
    pub bound: i64,
    /// Linear forms tried before declaring that no weak Lefschetz element exists.
    pub trials: usize,
    /// Random threefolds per degree in a survey.
    pub samples: usize,
    pub d_min: u32,
    pub d_max: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: default_seed(),
            bound: DEFAULT_BOUND,
            trials: DEFAULT_TRIALS,
            samples: DEFAULT_SAMPLES,
            d_min: DEFAULT_D_MIN,
            d_max: DEFAULT_D_MAX,
        }
    }
}

/// [`DEFAULT_SEED`], unless [`SEED_ENV`] holds an integer.
pub fn default_seed() -> u64 {
    std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.bound < 1 {
            return Err(LabError::Usage("--bound must be positive".into()));
        }
        if self.trials < 1 || self.samples < 1 {
            return Err(LabError::Usage("--trials and --samples must be positive".into()));
        }
        if self.d_min < 5 || self.d_min > self.d_max {
            return Err(LabError::Usage(format!(
                "degree range {}..={} is empty or starts below 5",
                self.d_min, self.d_max
            )));
        }
        Ok(())
    }

    /// The part of `lo..=hi` inside the configured degree range.
    pub fn degrees(&self, lo: u32, hi: u32) -> RangeInclusive<u32> {
        lo.max(self.d_min)..=hi.min(self.d_max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_clipping() {
        let cfg = RunConfig {
            d_max: 6,
            ..RunConfig::default()
        };
        assert_eq!(cfg.degrees(5, 8), 5..=6);
        assert!(cfg.degrees(7, 9).is_empty());
        assert!(cfg.validate().is_ok());
        assert!(RunConfig { bound: 0, ..cfg }.validate().is_err());
    }
}
