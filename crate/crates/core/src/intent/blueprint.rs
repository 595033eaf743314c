// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use serde::{Deserialize, Serialize};

use super::{IntentError, IntentRequest};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoleSpec {
    pub role: String,
    pub requires_symmetry: bool,
}

/// A chain template: ordered functional roles plus the SLA range it serves.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Blueprint {
    pub id: String,
    pub sf_roles: Vec<RoleSpec>,
    /// Intents tolerating at most this latency are served.
    pub max_latency_ms: f64,
    /// Intents asking for at least this bandwidth are served.
    pub min_bandwidth_bps: u64,
}

impl Blueprint {
    /// Why this blueprint rejects `intent`, or `None` when it admits it.
    pub fn rejection(&self, intent: &IntentRequest) -> Option<String> {
        let mut reasons = Vec::new();
        if intent.sla.latency_ms > self.max_latency_ms {
            reasons.push(format!("latency {} ms > {} ms", intent.sla.latency_ms, self.max_latency_ms));
        }
        if intent.sla.bandwidth_bps < self.min_bandwidth_bps {
            reasons.push(format!("bandwidth {} bps < {} bps", intent.sla.bandwidth_bps, self.min_bandwidth_bps));
        }
        (!reasons.is_empty()).then(|| format!("{}: {}", self.id, reasons.join(", ")))
    }

    pub fn admits(&self, intent: &IntentRequest) -> bool {
        self.rejection(intent).is_none()
    }
}

pub fn parse_blueprints(text: &str) -> Result<Vec<Blueprint>, IntentError> {
    let catalog: Vec<Blueprint> = serde_json::from_str(text).map_err(|e| IntentError::Malformed {
        line: e.line(),
        message: e.to_string(),
    })?;
    if let Some(bp) = catalog.iter().find(|b| b.sf_roles.is_empty()) {
        return Err(IntentError::EmptyBlueprint(bp.id.clone()));
    }
    Ok(catalog)
}

/// First blueprint, in catalog order, that admits the intent.
pub fn map_intent_to_blueprint<'c>(intent: &IntentRequest, catalog: &'c [Blueprint]) -> Result<&'c Blueprint, IntentError> {
    let mut rejected = Vec::new();
    for bp in catalog {
        match bp.rejection(intent) {
            None => return Ok(bp),
            Some(reason) => rejected.push(reason),
        }
    }
    Err(IntentError::NoMatchingBlueprint(rejected))
}
