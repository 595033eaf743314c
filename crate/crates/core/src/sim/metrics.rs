// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::SimTime;

pub const NS_PER_S: u64 = 1_000_000_000;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PacketCounters {
    pub injected: u64,
    pub delivered: u64,
    pub dropped: u64,
    /// Deliveries whose destination MAC was not the receiving endpoint's own.
    pub mac_mismatches: u64,
    pub packet_ins: u64,
}

/// Results of one simulation run, as seen at the receiving endpoint.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metrics {
    pub rtt_samples_ns: Vec<u64>,
    /// Bytes delivered in each simulated second.
    pub transfer_bytes_per_s: Vec<u64>,
    pub throughput_bps_per_s: Vec<u64>,
    pub completion_ns: u64,
    /// Transfer packets processed per service function.
    pub sf_packet_counts: BTreeMap<String, u64>,
    pub packets: PacketCounters,
}

impl Metrics {
    /// Builds the per-second series from (delivery time, bytes) records.
    pub fn bin_deliveries(deliveries: &[(SimTime, u64)]) -> (Vec<u64>, Vec<u64>) {
        let Some(last) = deliveries.iter().map(|(t, _)| *t).max() else {
            return (Vec::new(), Vec::new());
        };
        let mut transfer = vec![0u64; (last / NS_PER_S) as usize + 1];
        for (t, bytes) in deliveries {
            transfer[(t / NS_PER_S) as usize] += bytes;
        }
        let throughput = transfer.iter().map(|b| b * 8).collect();
        (transfer, throughput)
    }

    pub fn delivered_bytes(&self) -> u64 {
        self.transfer_bytes_per_s.iter().sum()
    }

    /// Delivered bits over the whole transfer duration.
    pub fn mean_throughput_bps(&self) -> f64 {
        if self.completion_ns == 0 {
            return 0.0;
        }
        self.delivered_bytes() as f64 * 8.0 * NS_PER_S as f64 / self.completion_ns as f64
    }

    pub fn mean_rtt_ns(&self) -> Option<f64> {
        if self.rtt_samples_ns.is_empty() {
            return None;
        }
        Some(self.rtt_samples_ns.iter().map(|&s| s as f64).sum::<f64>() / self.rtt_samples_ns.len() as f64)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("metrics serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// One trace record. Serialized as `time_ns,event_kind,node_id,packet_seq`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEvent {
    pub time_ns: SimTime,
    pub kind: TraceKind,
    pub node: String,
    pub seq: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceKind {
    Inject,
    SffReceive,
    PacketIn,
    RulesInstalled,
    SfEnter,
    SfLeave,
    Deliver,
    Drop,
}

impl TraceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TraceKind::Inject => "inject",
            TraceKind::SffReceive => "sff_rx",
            TraceKind::PacketIn => "packet_in",
            TraceKind::RulesInstalled => "rules_installed",
            TraceKind::SfEnter => "sf_enter",
            TraceKind::SfLeave => "sf_leave",
            TraceKind::Deliver => "deliver",
            TraceKind::Drop => "drop",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace {
    pub events: Vec<TraceEvent>,
}

impl Trace {
    pub fn push(&mut self, time_ns: SimTime, kind: TraceKind, node: &str, seq: u64) {
        self.events.push(TraceEvent {
            time_ns,
            kind,
            node: node.to_string(),
            seq,
        });
    }

    /// Service functions entered by packet `seq`, in order.
    pub fn sf_visits(&self, seq: u64) -> Vec<&str> {
        self.events
            .iter()
            .filter(|e| e.seq == seq && e.kind == TraceKind::SfEnter)
            .map(|e| e.node.as_str())
            .collect()
    }

    pub fn seqs_delivered_to(&self, node: &str) -> Vec<u64> {
        self.events
            .iter()
            .filter(|e| e.kind == TraceKind::Deliver && e.node == node)
            .map(|e| e.seq)
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("time_ns,event_kind,node_id,packet_seq\n");
        for e in &self.events {
            let _ = writeln!(out, "{},{},{},{}", e.time_ns, e.kind.as_str(), e.node, e.seq);
        }
        out
    }
}
