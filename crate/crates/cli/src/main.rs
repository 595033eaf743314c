// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sfc_sym_cli::experiment::{ExperimentConfig, OutputFormat, DEFAULT_JITTER_NS, DEFAULT_REPETITIONS};
use sfc_sym_cli::{emit_report, run_experiment, write_report_files, HarnessError};
use sfc_sym_core::intent::{intent_pipeline, parse_blueprints, ResourcePolicy};
use sfc_sym_core::model::Repository;
use sfc_sym_core::scenario::{evaluation_repository, BLUEPRINT_CATALOG};
use sfc_sym_core::sim::Scenario;

const EXIT_VIOLATED: u8 = 2;
const EXIT_ERROR: u8 = 1;

#[derive(Parser)]
#[command(name = "sfc-sym", version, about = "Symmetry-aware service function chaining experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScenarioArg {
    Both,
    Partial,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run repeated partial/full symmetry simulations and write a report.
    Run {
        /// Repository JSON; defaults to the bundled three-forwarder scenario.
        #[arg(long)]
        repo: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "both")]
        scenario: ScenarioArg,
        /// Repetitions per scenario [default: 20, or 100 with --paper-scale].
        #[arg(long)]
        reps: Option<u32>,
        #[arg(long, env = "SFC_SYM_SEED", default_value_t = 1)]
        seed: u64,
        /// Override every service function's processing delay.
        #[arg(long)]
        sf_delay_us: Option<u64>,
        /// Upper bound of the uniform per-packet processing jitter; 0 is fully deterministic.
        #[arg(long, default_value_t = DEFAULT_JITTER_NS / 1000)]
        jitter_us: u64,
        /// Delay of each forwarder-to-function and forwarder-to-endpoint attachment.
        #[arg(long, default_value_t = 100)]
        attach_delay_us: u64,
        /// Bytes sent by the bulk transfer.
        #[arg(long)]
        transfer_bytes: Option<u64>,
        #[arg(long, default_value_t = 0.95)]
        confidence: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        /// Output directory; without it the summary is printed to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// 1 GB transfers and 100 repetitions.
        #[arg(long)]
        paper_scale: bool,
        /// Also write event traces of the first repetition.
        #[arg(long)]
        trace: bool,
    },
    /// Load and validate a repository file.
    Validate {
        #[arg(long)]
        repo: PathBuf,
    },
    /// Turn an intent into a deployment command and print it.
    Intent {
        #[arg(long)]
        file: PathBuf,
        /// Blueprint catalog JSON; defaults to the bundled catalog.
        #[arg(long)]
        blueprints: Option<PathBuf>,
        /// Repository JSON; defaults to the bundled scenario.
        #[arg(long)]
        repo: Option<PathBuf>,
    },
}

fn read(path: &PathBuf) -> Result<String, HarnessError> {
    std::fs::read_to_string(path).map_err(|e| HarnessError::Io(path.clone(), e))
}

fn load_repo(path: &PathBuf) -> Result<Repository, HarnessError> {
    Ok(Repository::from_json_str(&read(path)?)?)
}

fn run(cli: Cli) -> Result<ExitCode, HarnessError> {
    match cli.command {
        Command::Run {
            repo,
            scenario,
            reps,
            seed,
            sf_delay_us,
            jitter_us,
            attach_delay_us,
            transfer_bytes,
            confidence,
            format,
            out,
            paper_scale,
            trace,
        } => {
            let mut cfg = ExperimentConfig::default();
            if paper_scale {
                cfg = cfg.paper_scale();
            }
            cfg.repo_path = repo;
            cfg.scenarios = match scenario {
                ScenarioArg::Both => Scenario::BOTH.to_vec(),
                ScenarioArg::Partial => vec![Scenario::Partial],
                ScenarioArg::Full => vec![Scenario::Full],
            };
            cfg.repetitions = reps.unwrap_or(if paper_scale { cfg.repetitions } else { DEFAULT_REPETITIONS });
            cfg.seed = seed;
            cfg.sim.sf_processing_delay_ns = sf_delay_us.map(|us| us * 1000);
            cfg.sim.jitter_ns = jitter_us * 1000;
            cfg.sim.attachment_delay_ns = attach_delay_us * 1000;
            if let Some(bytes) = transfer_bytes {
                cfg.sim.traffic.total_bytes = bytes;
            }
            cfg.confidence = confidence;
            cfg.format = match format {
                FormatArg::Csv => OutputFormat::Csv,
                FormatArg::Text => OutputFormat::Text,
            };
            cfg.trace = trace;

            let report = run_experiment(&cfg)?;
            match &out {
                Some(dir) => {
                    for path in write_report_files(&report, cfg.format, dir)? {
                        eprintln!("wrote {}", path.display());
                    }
                }
                None => emit_report(&report, cfg.format, &mut std::io::stdout().lock())?,
            }
            for o in &report.orderings {
                eprintln!(
                    "{}: {} (partial {} vs full {}, {}/{} repetitions)",
                    o.name, o.outcome, o.partial, o.full, o.repetitions_confirmed, report.repetitions
                );
            }
            Ok(if report.any_violated() {
                ExitCode::from(EXIT_VIOLATED)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Validate { repo } => {
            let r = load_repo(&repo)?;
            println!(
                "ok: {} forwarders, {} endpoints, {} links, {} functions, {} chains, {} flows",
                r.topology.sffs.len(),
                r.topology.endpoints.len(),
                r.topology.links.len(),
                r.sfs.len(),
                r.chains.len(),
                r.flows.len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Intent { file, blueprints, repo } => {
            let text = read(&file)?;
            let catalog = match &blueprints {
                Some(path) => parse_blueprints(&read(path)?)?,
                None => parse_blueprints(BLUEPRINT_CATALOG)?,
            };
            let repo = match &repo {
                Some(path) => load_repo(path)?,
                None => evaluation_repository(),
            };
            let flows: Vec<_> = repo.flows.iter().map(|f| f.tuple).collect();
            let cmd = intent_pipeline(&text, &catalog, &repo, &ResourcePolicy::default(), &flows)?;
            print!("{cmd}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    tracing_subscriber::fmt()
        .with_env_filter(tracing_subscriber::EnvFilter::from_default_env())
        .with_writer(std::io::stderr)
        .init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
