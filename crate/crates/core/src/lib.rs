// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

//! # Symmetry-aware service function chaining
//!
//! Reply traffic of a chain only needs to cross the service functions that
//! keep per-flow state. This crate computes such partially symmetric reverse
//! paths, steers traffic along them by rewriting destination MACs at each
//! forwarder, and simulates the resulting data plane so partial and full
//! symmetry can be compared.
//!
//! - [`model`]: addresses, flows, topology and the repository file format.
//! - [`path`]: forward/reverse paths, MAC-rewrite rule generation, packet-in handling.
//! - [`sim`]: deterministic discrete-event data plane with RTT/transfer/throughput metrics.
//! - [`intent`]: intent parsing, blueprint mapping, sizing, chain composition, deployment.

pub mod intent;
pub mod model;
pub mod path;
pub mod scenario;
pub mod sim;
