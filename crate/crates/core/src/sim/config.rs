// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use serde::{Deserialize, Serialize};

use crate::model::{Direction, Repository};

/// Which symmetry policy the reply traffic follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scenario {
    /// Per-function symmetry flags from the repository.
    Partial,
    /// Every function requires symmetry.
    Full,
}

impl Scenario {
    pub const BOTH: [Scenario; 2] = [Scenario::Partial, Scenario::Full];

    pub fn apply(self, repo: &Repository) -> Repository {
        match self {
            Scenario::Partial => repo.clone(),
            Scenario::Full => repo.with_uniform_symmetry(true),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Scenario::Partial => "partial",
            Scenario::Full => "full",
        }
    }
}

impl std::fmt::Display for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrafficConfig {
    pub total_bytes: u64,
    pub payload_size: u32,
    pub offered_rate_bps: u64,
    /// `Reverse` sends from the flow's destination back to its source.
    pub direction: Direction,
}

impl Default for TrafficConfig {
    fn default() -> Self {
        Self {
            total_bytes: 10_000_000,
            payload_size: 1024,
            offered_rate_bps: 1_000_000_000,
            direction: Direction::Reverse,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimConfig {
    /// Overrides every function's processing delay when set.
    pub sf_processing_delay_ns: Option<u64>,
    /// Uniform random extra processing time per packet, `0..=jitter_ns`.
    /// Zero gives the fully deterministic mode.
    pub jitter_ns: u64,
    /// One-way delay of each forwarder-to-function and forwarder-to-endpoint attachment.
    pub attachment_delay_ns: u64,
    /// `0` means unlimited.
    pub attachment_capacity_bps: u64,
    pub packet_in_latency_ns: u64,
    pub traffic: TrafficConfig,
    pub rtt_probes: u32,
    pub probe_size: u32,
    pub repetitions: u32,
    pub rng_seed: u64,
    pub record_trace: bool,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            sf_processing_delay_ns: None,
            jitter_ns: 0,
            attachment_delay_ns: 100_000,
            attachment_capacity_bps: 0,
            packet_in_latency_ns: 0,
            traffic: TrafficConfig::default(),
            rtt_probes: 100,
            probe_size: 64,
            repetitions: 1,
            rng_seed: 0,
            record_trace: false,
        }
    }
}

impl SimConfig {
    pub fn check(&self) -> Result<(), String> {
        if self.repetitions == 0 {
            return Err("repetitions must be at least 1".into());
        }
        if self.traffic.offered_rate_bps == 0 {
            return Err("offered rate must be positive".into());
        }
        if self.traffic.payload_size == 0 || self.probe_size == 0 {
            return Err("packet sizes must be positive".into());
        }
        Ok(())
    }
}
