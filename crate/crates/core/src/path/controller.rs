// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use tracing::debug;

use super::{compute_forward_path, compute_reverse_path, generate_flow_rules, FlowRule, PathError};
use crate::model::{FiveTuple, MacAddress, PortNo, Repository};

/// What a forwarder reports to the controller on a table miss.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PacketIn {
    pub sff_id: String,
    pub in_port: PortNo,
    pub header: FiveTuple,
    pub eth_dst: MacAddress,
}

/// Controller reaction to a table miss.
///
/// A header belonging to a registered flow (either direction) yields the rules
/// for both directions across every forwarder involved: forward rules first,
/// then reverse. Unknown headers yield nothing, so the packet is dropped.
pub fn handle_packet_in(repo: &Repository, event: &PacketIn) -> Result<Vec<FlowRule>, PathError> {
    let Some((flow, direction)) = repo.classify(&event.header) else {
        debug!(sff = %event.sff_id, port = event.in_port, header = %event.header, "packet-in for unknown flow");
        return Ok(Vec::new());
    };
    debug!(sff = %event.sff_id, flow = %flow, %direction, "packet-in");
    let chain = repo.chain(flow.sfc_id)?;
    let forward = compute_forward_path(chain, flow, &repo.topology, &repo.sfs)?;
    let reverse = compute_reverse_path(chain, flow, &repo.topology, &repo.sfs)?;
    let mut rules = generate_flow_rules(&forward, flow);
    rules.extend(generate_flow_rules(&reverse, flow));
    Ok(rules)
}
