// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use serde::{Deserialize, Serialize};

use super::{Blueprint, IntentRequest};

/// Linear sizing: one CPU unit per `cpu_capacity_bps` of SLA bandwidth,
/// fixed memory per role.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResourcePolicy {
    pub cpu_capacity_bps: u64,
    pub memory_mb_per_role: u64,
}

impl Default for ResourcePolicy {
    fn default() -> Self {
        Self {
            cpu_capacity_bps: 1_000_000_000,
            memory_mb_per_role: 512,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleResources {
    pub role: String,
    pub cpu_units: u64,
    pub memory_mb: u64,
    pub bandwidth_bps: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResourceAllocation {
    pub roles: Vec<RoleResources>,
}

pub fn compute_resources(intent: &IntentRequest, bp: &Blueprint, policy: &ResourcePolicy) -> ResourceAllocation {
    let bandwidth = intent.sla.bandwidth_bps;
    let cpu_units = bandwidth.div_ceil(policy.cpu_capacity_bps.max(1));
    ResourceAllocation {
        roles: bp
            .sf_roles
            .iter()
            .map(|r| RoleResources {
                role: r.role.clone(),
                cpu_units,
                memory_mb: policy.memory_mb_per_role,
                bandwidth_bps: bandwidth,
            })
            .collect(),
    }
}
