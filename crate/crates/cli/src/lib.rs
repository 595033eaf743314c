// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

//! Experiment harness for the symmetry-aware SFC simulator: repeated runs,
//! confidence intervals and report files.

pub mod experiment;
pub mod report;
pub mod stats;

use std::path::PathBuf;

use sfc_sym_core::intent::IntentError;
use sfc_sym_core::model::{LoadError, Violation};
use sfc_sym_core::sim::SimError;
use thiserror::Error;

pub use experiment::{run_experiment, ExperimentConfig, OutputFormat, Outcome, Report};
pub use report::{emit_report, parse_report_csv, write_report_files};
pub use stats::{compute_confidence_interval, StatsError};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{0}")]
    Config(String),
    #[error("{}: {1}", .0.display())]
    Io(PathBuf, #[source] std::io::Error),
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error("repository failed validation: {}", fmt_violations(.0))]
    InvalidRepository(Vec<Violation>),
    #[error(transparent)]
    Sim(#[from] SimError),
    #[error(transparent)]
    Intent(#[from] IntentError),
    #[error(transparent)]
    Stats(#[from] StatsError),
    #[error("report has no {0} samples")]
    EmptyMetric(String),
    #[error("csv: {0}")]
    Csv(String),
}

fn fmt_violations(v: &[Violation]) -> String {
    v.iter().map(|v| format!("{} ({})", v.rule, v.subject)).collect::<Vec<_>>().join(", ")
}
