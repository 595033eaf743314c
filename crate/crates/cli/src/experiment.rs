// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

//! Repeated paired simulations and their aggregation into a [`Report`].

use std::collections::BTreeMap;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sfc_sym_core::model::Repository;
use sfc_sym_core::scenario::evaluation_repository;
use sfc_sym_core::sim::{run_simulation_traced, Metrics, RunTraces, Scenario, SimConfig};

use crate::stats::{summarize, Summary};
use crate::HarnessError;

pub const DEFAULT_REPETITIONS: u32 = 20;
pub const PAPER_SCALE_REPETITIONS: u32 = 100;
pub const PAPER_SCALE_BYTES: u64 = 1_000_000_000;
pub const DEFAULT_JITTER_NS: u64 = 10_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Text,
}

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    /// `None` runs the bundled three-forwarder evaluation repository.
    pub repo_path: Option<PathBuf>,
    pub scenarios: Vec<Scenario>,
    /// Per-run settings; `rng_seed` and `repetitions` are taken from this struct instead.
    pub sim: SimConfig,
    pub repetitions: u32,
    pub confidence: f64,
    pub format: OutputFormat,
    pub seed: u64,
    /// Keep the event traces of the first repetition of each scenario.
    pub trace: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            repo_path: None,
            scenarios: Scenario::BOTH.to_vec(),
            sim: SimConfig {
                jitter_ns: DEFAULT_JITTER_NS,
                ..SimConfig::default()
            },
            repetitions: DEFAULT_REPETITIONS,
            confidence: 0.95,
            format: OutputFormat::Csv,
            seed: 1,
            trace: false,
        }
    }
}

impl ExperimentConfig {
    pub fn paper_scale(mut self) -> Self {
        self.sim.traffic.total_bytes = PAPER_SCALE_BYTES;
        self.repetitions = PAPER_SCALE_REPETITIONS;
        self
    }

    pub fn check(&self) -> Result<(), HarnessError> {
        if !(self.confidence > 0.0 && self.confidence < 1.0) {
            return Err(HarnessError::Config(format!(
                "confidence level {} is not in (0, 1)",
                self.confidence
            )));
        }
        if self.repetitions == 0 {
            return Err(HarnessError::Config("repetitions must be at least 1".into()));
        }
        if self.scenarios.is_empty() {
            return Err(HarnessError::Config("no scenario selected".into()));
        }
        self.sim.check().map_err(HarnessError::Config)
    }

    pub fn load_repository(&self) -> Result<Repository, HarnessError> {
        let repo = match &self.repo_path {
            None => evaluation_repository(),
            Some(path) => {
                let file = std::fs::File::open(path).map_err(|e| HarnessError::Io(path.clone(), e))?;
                Repository::load(std::io::BufReader::new(file))?
            }
        };
        let violations = repo.validate();
        if violations.is_empty() {
            Ok(repo)
        } else {
            Err(HarnessError::InvalidRepository(violations))
        }
    }
}

pub const METRIC_RTT: &str = "rtt_ns";
pub const METRIC_COMPLETION: &str = "completion_ns";
pub const METRIC_THROUGHPUT: &str = "throughput_bps";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricRow {
    pub metric: String,
    #[serde(flatten)]
    pub summary: Summary,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesPoint {
    pub second: u64,
    #[serde(flatten)]
    pub summary: Summary,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub scenario: Scenario,
    pub metrics: Vec<MetricRow>,
    /// Mean transfer packets handled per service function.
    pub sf_packet_counts: BTreeMap<String, f64>,
    pub delivered_packets: f64,
    pub mac_mismatches: u64,
    pub transfer_bytes_per_s: Vec<SeriesPoint>,
    pub throughput_bps_per_s: Vec<SeriesPoint>,
}

impl ScenarioReport {
    pub fn metric(&self, name: &str) -> Option<&Summary> {
        self.metrics.iter().find(|m| m.metric == name).map(|m| &m.summary)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Delta {
    pub metric: String,
    pub partial_minus_full: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Confirmed,
    Tied,
    Violated,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Outcome::Confirmed => "confirmed",
            Outcome::Tied => "tied",
            Outcome::Violated => "violated",
        })
    }
}

/// Expected relation between the partial and full scenario means of one metric.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrderingCheck {
    pub name: String,
    pub metric: String,
    /// `true` when partial is expected to be smaller than full.
    pub partial_lower: bool,
    pub partial: f64,
    pub full: f64,
    pub outcome: Outcome,
    /// Repetitions in which the expected strict relation held.
    pub repetitions_confirmed: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub seed: u64,
    pub repetitions: u32,
    pub confidence: f64,
    pub scenarios: Vec<ScenarioReport>,
    pub deltas: Vec<Delta>,
    pub orderings: Vec<OrderingCheck>,
    #[serde(skip)]
    pub traces: BTreeMap<Scenario, RunTraces>,
}

impl Report {
    pub fn scenario(&self, scenario: Scenario) -> Option<&ScenarioReport> {
        self.scenarios.iter().find(|s| s.scenario == scenario)
    }

    pub fn any_violated(&self) -> bool {
        self.orderings.iter().any(|o| o.outcome == Outcome::Violated)
    }
}

struct RepSample {
    rtt_mean_ns: f64,
    completion_ns: f64,
    throughput_bps: f64,
    metrics: Metrics,
}

fn rep_sample(metrics: Metrics) -> Result<RepSample, HarnessError> {
    let rtt_mean_ns = metrics
        .mean_rtt_ns()
        .ok_or_else(|| HarnessError::EmptyMetric(METRIC_RTT.into()))?;
    Ok(RepSample {
        rtt_mean_ns,
        completion_ns: metrics.completion_ns as f64,
        throughput_bps: metrics.mean_throughput_bps(),
        metrics,
    })
}

type RepResult = Result<(Vec<RepSample>, Option<Vec<RunTraces>>), HarnessError>;

/// Runs every scenario `repetitions` times with seeds `seed + i`.
///
/// Repetitions run in parallel; results are aggregated in repetition order so
/// the report does not depend on scheduling.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Report, HarnessError> {
    cfg.check()?;
    let repo = cfg.load_repository()?;
    let mut scenarios = cfg.scenarios.clone();
    scenarios.sort();
    scenarios.dedup();

    let per_rep: Vec<RepResult> = (0..cfg.repetitions)
        .into_par_iter()
        .map(|i| {
            let sim = SimConfig {
                rng_seed: cfg.seed.wrapping_add(i as u64),
                record_trace: cfg.trace && i == 0,
                ..cfg.sim.clone()
            };
            let mut samples = Vec::with_capacity(scenarios.len());
            let mut traces = Vec::new();
            for &scenario in &scenarios {
                let (metrics, t) = run_simulation_traced(&repo, &sim, scenario)?;
                samples.push(rep_sample(metrics)?);
                traces.push(t);
            }
            Ok((samples, sim.record_trace.then_some(traces)))
        })
        .collect();

    let mut columns: Vec<Vec<RepSample>> = scenarios.iter().map(|_| Vec::new()).collect();
    let mut traces = BTreeMap::new();
    for rep in per_rep {
        let (samples, rep_traces) = rep?;
        if let Some(rep_traces) = rep_traces {
            traces.extend(scenarios.iter().copied().zip(rep_traces));
        }
        for (col, s) in columns.iter_mut().zip(samples) {
            col.push(s);
        }
    }

    let level = cfg.confidence;
    let mut reports = Vec::new();
    for (&scenario, col) in scenarios.iter().zip(&columns) {
        reports.push(aggregate(scenario, col, level)?);
    }

    let mut report = Report {
        seed: cfg.seed,
        repetitions: cfg.repetitions,
        confidence: level,
        scenarios: reports,
        deltas: Vec::new(),
        orderings: Vec::new(),
        traces,
    };
    let partial = scenarios.iter().position(|s| *s == Scenario::Partial);
    let full = scenarios.iter().position(|s| *s == Scenario::Full);
    if let (Some(p), Some(f)) = (partial, full) {
        compare(&mut report, &columns[p], &columns[f]);
    }
    Ok(report)
}

fn aggregate(scenario: Scenario, col: &[RepSample], level: f64) -> Result<ScenarioReport, HarnessError> {
    let pick = |f: fn(&RepSample) -> f64| col.iter().map(f).collect::<Vec<_>>();
    let metrics = [
        (METRIC_RTT, pick(|s| s.rtt_mean_ns)),
        (METRIC_COMPLETION, pick(|s| s.completion_ns)),
        (METRIC_THROUGHPUT, pick(|s| s.throughput_bps)),
    ]
    .into_iter()
    .map(|(name, values)| {
        Ok(MetricRow {
            metric: name.to_string(),
            summary: summarize(&values, level)?,
        })
    })
    .collect::<Result<Vec<_>, HarnessError>>()?;

    let n = col.len() as f64;
    let mut sf_packet_counts = BTreeMap::new();
    for s in col {
        for (sf, count) in &s.metrics.sf_packet_counts {
            *sf_packet_counts.entry(sf.clone()).or_insert(0.0) += *count as f64;
        }
    }
    sf_packet_counts.values_mut().for_each(|v| *v /= n);
    let delivered_packets = col.iter().map(|s| s.metrics.packets.delivered as f64).sum::<f64>() / n;
    let mac_mismatches = col.iter().map(|s| s.metrics.packets.mac_mismatches).sum();

    Ok(ScenarioReport {
        scenario,
        metrics,
        sf_packet_counts,
        delivered_packets,
        mac_mismatches,
        transfer_bytes_per_s: series(col, |m| &m.transfer_bytes_per_s, level)?,
        throughput_bps_per_s: series(col, |m| &m.throughput_bps_per_s, level)?,
    })
}

/// Per-second bins across repetitions; a repetition that finished earlier contributes zeros.
fn series(col: &[RepSample], get: fn(&Metrics) -> &Vec<u64>, level: f64) -> Result<Vec<SeriesPoint>, HarnessError> {
    let len = col.iter().map(|s| get(&s.metrics).len()).max().unwrap_or(0);
    (0..len)
        .map(|sec| {
            let values: Vec<f64> = col
                .iter()
                .map(|s| get(&s.metrics).get(sec).copied().unwrap_or(0) as f64)
                .collect();
            Ok(SeriesPoint {
                second: sec as u64,
                summary: summarize(&values, level)?,
            })
        })
        .collect()
}

fn compare(report: &mut Report, partial: &[RepSample], full: &[RepSample]) {
    let summaries = report.scenarios.clone();
    type Check = (&'static str, &'static str, bool, fn(&RepSample) -> f64);
    let checks: [Check; 3] = [
        ("rtt_reduced", METRIC_RTT, true, |s| s.rtt_mean_ns),
        ("transfer_faster", METRIC_COMPLETION, true, |s| s.completion_ns),
        ("throughput_higher", METRIC_THROUGHPUT, false, |s| s.throughput_bps),
    ];
    let mean_of = |scenario: Scenario, metric: &str| {
        summaries
            .iter()
            .find(|s| s.scenario == scenario)
            .and_then(|s| s.metric(metric))
            .map(|s| s.mean)
            .unwrap_or(f64::NAN)
    };
    let holds = |lower: bool, p: f64, f: f64| if lower { p < f } else { p > f };

    for (name, metric, partial_lower, get) in checks {
        let p = mean_of(Scenario::Partial, metric);
        let f = mean_of(Scenario::Full, metric);
        let outcome = if holds(partial_lower, p, f) {
            Outcome::Confirmed
        } else if p == f {
            Outcome::Tied
        } else {
            Outcome::Violated
        };
        let repetitions_confirmed = partial
            .iter()
            .zip(full)
            .filter(|(a, b)| holds(partial_lower, get(a), get(b)))
            .count() as u32;
        report.deltas.push(Delta {
            metric: metric.to_string(),
            partial_minus_full: p - f,
        });
        report.orderings.push(OrderingCheck {
            name: name.to_string(),
            metric: metric.to_string(),
            partial_lower,
            partial: p,
            full: f,
            outcome,
            repetitions_confirmed,
        });
    }
}
