// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

//! Forward and symmetry-aware reverse service paths, and their compilation
//! into MAC-rewrite flow rules.

mod controller;
mod hops;
mod reverse;
mod route;
mod rules;

use thiserror::Error;

use crate::model::{LookupError, SfcId};

pub use controller::{handle_packet_in, PacketIn};
pub use hops::{compute_forward_path, compute_reverse_path, Hop, HopPath};
pub use reverse::compute_reverse_sf_sequence;
pub use route::{shortest_route, RouteStep};
pub use rules::{generate_flow_rules, Action, FlowRule, RuleError, RuleMatch, INSTALLED_RULE_PRIORITY};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error(transparent)]
    Lookup(#[from] LookupError),
    #[error("service function {0:?} is unavailable")]
    UnavailableSf(String),
    #[error("no route from {from} to {to}")]
    NoRoute { from: String, to: String },
    #[error("no endpoint with address {0}")]
    UnknownEndpoint(std::net::IpAddr),
    #[error("sfc {sfc_id} path enters {sff} on port {port} twice")]
    ConflictingHops { sfc_id: SfcId, sff: String, port: u16 },
}
