// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

//! Sample statistics and Student-t confidence intervals.

mod t_table;

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal, StudentsT};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("no samples")]
    Empty,
    #[error("confidence level {0} is not in (0, 1)")]
    Level(f64),
}

/// Two-sided quantile `t_{(1+level)/2, df}`.
///
/// Tabulated levels use the built-in table up to 200 degrees of freedom and
/// the normal quantile beyond. Other levels are computed numerically.
pub fn t_quantile(level: f64, df: usize) -> Result<f64, StatsError> {
    if !(level > 0.0 && level < 1.0) {
        return Err(StatsError::Level(level));
    }
    let p = (1.0 + level) / 2.0;
    if let Some(i) = t_table::LEVELS.iter().position(|l| (l - level).abs() < 1e-12) {
        return Ok(if df == 0 {
            f64::NAN
        } else if df <= t_table::MAX_DF {
            t_table::T[i][df - 1]
        } else {
            t_table::NORMAL[i]
        });
    }
    let q = if df > t_table::MAX_DF {
        Normal::new(0.0, 1.0).expect("standard normal").inverse_cdf(p)
    } else {
        StudentsT::new(0.0, 1.0, df as f64)
            .expect("positive degrees of freedom")
            .inverse_cdf(p)
    };
    Ok(q)
}

/// Mean, sample standard deviation and t-interval of one metric.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub n: usize,
    pub mean: f64,
    pub std: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
}

fn mean_and_std(samples: &[f64]) -> (f64, f64) {
    // shift by the first sample so constant data gives exactly that constant
    let n = samples.len() as f64;
    let origin = samples[0];
    let shift: f64 = samples.iter().map(|x| x - origin).sum::<f64>() / n;
    let mean = origin + shift;
    if samples.len() < 2 {
        return (mean, 0.0);
    }
    let ss: f64 = samples.iter().map(|x| (x - origin - shift).powi(2)).sum();
    (mean, (ss / (n - 1.0)).sqrt())
}

pub fn summarize(samples: &[f64], level: f64) -> Result<Summary, StatsError> {
    if samples.is_empty() {
        return Err(StatsError::Empty);
    }
    if !(level > 0.0 && level < 1.0) {
        return Err(StatsError::Level(level));
    }
    let (mean, std) = mean_and_std(samples);
    let n = samples.len();
    let (ci_lo, ci_hi) = if n == 1 || std == 0.0 {
        (mean, mean)
    } else {
        let half = t_quantile(level, n - 1)? * std / (n as f64).sqrt();
        (mean - half, mean + half)
    };
    Ok(Summary {
        n,
        mean,
        std,
        ci_lo,
        ci_hi,
    })
}

/// `mean ± t(level, n-1) · s/√n`; a single sample gives `(x, x)`.
pub fn compute_confidence_interval(samples: &[f64], level: f64) -> Result<(f64, f64), StatsError> {
    summarize(samples, level).map(|s| (s.ci_lo, s.ci_hi))
}
