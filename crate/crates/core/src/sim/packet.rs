// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use super::SimTime;
use crate::model::{Direction, FiveTuple, MacAddress, Repository, SfcId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packet {
    pub eth_src: MacAddress,
    pub eth_dst: MacAddress,
    pub header: FiveTuple,
    /// Bytes on the wire; always positive.
    pub payload_size: u32,
    pub seq: u64,
    pub created_at: SimTime,
    /// Forwarder traversals so far; guards against steering loops.
    pub hops: u32,
}

/// Ingress classification: binds a packet to its chain and direction.
pub fn classify(pkt: &Packet, repo: &Repository) -> Option<(SfcId, Direction)> {
    repo.classify(&pkt.header).map(|(f, d)| (f.sfc_id, d))
}
