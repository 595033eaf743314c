// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

//! Discrete-event model of the chain's data plane.
//!
//! Forwarders hold flow tables that start empty and punt misses to the
//! controller ([`crate::path::handle_packet_in`]). Service functions are
//! FIFO servers; links and attachments are FIFO serializers with a
//! propagation delay. Time is integer nanoseconds and same-time events run in
//! scheduling order, so equal inputs give identical runs.

mod config;
mod engine;
mod flow_table;
mod metrics;
mod packet;
mod queue;
mod service;

use thiserror::Error;

use crate::model::{FlowSpec, Violation};
use crate::path::{PathError, RuleError};

pub use config::{Scenario, SimConfig, TrafficConfig};
pub use engine::{
    measure_rtt, probe_flow, run_simulation, run_simulation_traced, transfer_flow, RunOutcome,
    RunTraces, SfCounts, Simulator,
};
pub use flow_table::{FlowTable, InstallOutcome};
pub use metrics::{Metrics, PacketCounters, Trace, TraceEvent, TraceKind, NS_PER_S};
pub use packet::{classify, Packet};
pub use queue::{EventQueue, SimTime};
pub use service::SfServer;

#[derive(Debug, Error)]
pub enum SimError {
    #[error("invalid simulation config: {0}")]
    Config(String),
    #[error("invalid repository: {0:?}")]
    InvalidRepository(Vec<Violation>),
    #[error("no {0} flow registered")]
    NoFlow(&'static str),
    #[error("flow {0} is undeliverable")]
    Undeliverable(FlowSpec),
    #[error("no endpoint with address {0}")]
    UnknownEndpoint(std::net::IpAddr),
    #[error("unknown forwarder {0}")]
    UnknownForwarder(String),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Rule(RuleError),
}
