// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

//! Report serialization: summary table, comparisons, per-second series and traces.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::experiment::{OutputFormat, Report, METRIC_RTT};
use crate::HarnessError;

/// One line of the summary table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CsvRow {
    pub scenario: String,
    pub metric: String,
    pub mean: f64,
    pub std: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    pub n: usize,
}

pub fn summary_rows(report: &Report) -> Vec<CsvRow> {
    report
        .scenarios
        .iter()
        .flat_map(|s| {
            s.metrics.iter().map(|m| CsvRow {
                scenario: s.scenario.to_string(),
                metric: m.metric.clone(),
                mean: m.summary.mean,
                std: m.summary.std,
                ci_lo: m.summary.ci_lo,
                ci_hi: m.summary.ci_hi,
                n: m.summary.n,
            })
        })
        .collect()
}

/// Rejects reports that would produce a misleading table.
pub fn check_report(report: &Report) -> Result<(), HarnessError> {
    if report.scenarios.is_empty() {
        return Err(HarnessError::EmptyMetric("no scenarios".into()));
    }
    for s in &report.scenarios {
        match s.metric(METRIC_RTT) {
            Some(rtt) if rtt.n > 0 => {}
            _ => return Err(HarnessError::EmptyMetric(format!("{} for scenario {}", METRIC_RTT, s.scenario))),
        }
    }
    Ok(())
}

fn csv_err(e: csv::Error) -> HarnessError {
    HarnessError::Csv(e.to_string())
}

fn write_csv<T: Serialize>(rows: impl IntoIterator<Item = T>, sink: &mut dyn Write) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_writer(sink);
    for row in rows {
        w.serialize(row).map_err(csv_err)?;
    }
    w.flush().map_err(|e| HarnessError::Csv(e.to_string()))
}

/// Writes the summary table (`Csv`) or the whole report as JSON (`Text`).
pub fn emit_report(report: &Report, format: OutputFormat, sink: &mut dyn Write) -> Result<(), HarnessError> {
    check_report(report)?;
    match format {
        OutputFormat::Csv => write_csv(summary_rows(report), sink),
        OutputFormat::Text => {
            let text = serde_json::to_string_pretty(report).expect("report serializes");
            sink.write_all(text.as_bytes())
                .and_then(|_| sink.write_all(b"\n"))
                .map_err(|e| HarnessError::Io(PathBuf::from("<sink>"), e))
        }
    }
}

pub fn parse_report_csv(text: &str) -> Result<Vec<CsvRow>, HarnessError> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<Result<Vec<CsvRow>, _>>()
        .map_err(csv_err)
}

#[derive(Serialize)]
struct OrderingRow<'a> {
    ordering: &'a str,
    metric: &'a str,
    partial: f64,
    full: f64,
    delta: f64,
    outcome: String,
    repetitions_confirmed: u32,
    repetitions: u32,
}

#[derive(Serialize)]
struct SfCountRow<'a> {
    scenario: String,
    sf: &'a str,
    mean_packets: f64,
}

#[derive(Serialize)]
struct SeriesRow {
    second: u64,
    mean: f64,
    std: f64,
    ci_lo: f64,
    ci_hi: f64,
    n: usize,
}

fn create(dir: &Path, name: &str) -> Result<(std::io::BufWriter<std::fs::File>, PathBuf), HarnessError> {
    let path = dir.join(name);
    let file = std::fs::File::create(&path).map_err(|e| HarnessError::Io(path.clone(), e))?;
    Ok((std::io::BufWriter::new(file), path))
}

/// Writes every report artifact into `dir` and returns the file paths in write order.
pub fn write_report_files(report: &Report, format: OutputFormat, dir: &Path) -> Result<Vec<PathBuf>, HarnessError> {
    check_report(report)?;
    std::fs::create_dir_all(dir).map_err(|e| HarnessError::Io(dir.to_path_buf(), e))?;
    let mut written = Vec::new();

    let main_name = match format {
        OutputFormat::Csv => "report.csv",
        OutputFormat::Text => "report.json",
    };
    let (mut w, path) = create(dir, main_name)?;
    emit_report(report, format, &mut w)?;
    w.flush().map_err(|e| HarnessError::Io(path.clone(), e))?;
    written.push(path);

    if format == OutputFormat::Csv {
        if !report.orderings.is_empty() {
            let (mut w, path) = create(dir, "orderings.csv")?;
            let rows = report.orderings.iter().map(|o| OrderingRow {
                ordering: &o.name,
                metric: &o.metric,
                partial: o.partial,
                full: o.full,
                delta: o.partial - o.full,
                outcome: o.outcome.to_string(),
                repetitions_confirmed: o.repetitions_confirmed,
                repetitions: report.repetitions,
            });
            write_csv(rows, &mut w)?;
            written.push(path);
        }
        let (mut w, path) = create(dir, "sf_packet_counts.csv")?;
        let rows = report.scenarios.iter().flat_map(|s| {
            s.sf_packet_counts.iter().map(|(sf, mean)| SfCountRow {
                scenario: s.scenario.to_string(),
                sf,
                mean_packets: *mean,
            })
        });
        write_csv(rows, &mut w)?;
        written.push(path);
    }

    for s in &report.scenarios {
        for (kind, points) in [("transfer", &s.transfer_bytes_per_s), ("throughput", &s.throughput_bps_per_s)] {
            let (mut w, path) = create(dir, &format!("series_{}_{}.csv", s.scenario, kind))?;
            let rows = points.iter().map(|p| SeriesRow {
                second: p.second,
                mean: p.summary.mean,
                std: p.summary.std,
                ci_lo: p.summary.ci_lo,
                ci_hi: p.summary.ci_hi,
                n: p.summary.n,
            });
            write_csv(rows, &mut w)?;
            written.push(path);
        }
    }

    for (scenario, traces) in &report.traces {
        for (phase, trace) in [("transfer", &traces.transfer), ("ping", &traces.ping)] {
            let (mut w, path) = create(dir, &format!("trace_{scenario}_{phase}.csv"))?;
            w.write_all(trace.to_csv().as_bytes())
                .and_then(|_| w.flush())
                .map_err(|e| HarnessError::Io(path.clone(), e))?;
            written.push(path);
        }
    }
    Ok(written)
}
