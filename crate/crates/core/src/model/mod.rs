// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

//! Domain types: addresses, flows, topology, and the repository.

mod flow;
mod mac;
mod repository;
mod topology;

pub use flow::{Direction, FiveTuple, FlowSpec, Protocol, SfcId};
pub use mac::{MacAddress, MacParseError};
pub use repository::{
    LoadError, LookupError, Repository, RepositoryDocument, ServiceChain, ServiceFunction,
    Violation,
};
pub use topology::{Adjacency, Endpoint, Forwarder, Link, PortNo, PortRef, Topology};
