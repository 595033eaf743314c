// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use std::fmt;

use serde::{Deserialize, Serialize};

use super::IntentError;

/// Service-level objectives attached to an intent. Units: bits/s,
/// milliseconds, and abstract currency units.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sla {
    pub bandwidth_bps: u64,
    pub latency_ms: f64,
    pub cost: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntentRequest {
    pub label: String,
    pub validity_days: u32,
    pub sla: Sla,
}

const LABEL: &str = "Intent Label";
const VALIDITY: &str = "Intent validity";
const SLA_KEY: &str = "SLA";

/// Parses the line-oriented `Key: value` intent format:
///
/// ```text
/// Intent Label: added-value-service1
/// Intent validity: 30 days
/// SLA: Bandwidth:100000000;Latency: 20; Cost: 150;
/// ```
///
/// Keys are matched case-insensitively; blank lines are ignored.
pub fn parse_intent(text: &str) -> Result<IntentRequest, IntentError> {
    let mut label = None;
    let mut validity = None;
    let mut sla = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let malformed = |msg: &str| IntentError::Malformed {
            line: line_no,
            message: msg.to_string(),
        };
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| malformed("expected `Key: value`"))?;
        let (key, value) = (key.trim(), value.trim());
        if key.eq_ignore_ascii_case(LABEL) {
            if value.is_empty() {
                return Err(malformed("empty label"));
            }
            label = Some(value.to_string());
        } else if key.eq_ignore_ascii_case(VALIDITY) {
            validity = Some(parse_validity(value).ok_or_else(|| malformed("validity must be `<n> days` with n > 0"))?);
        } else if key.eq_ignore_ascii_case(SLA_KEY) {
            sla = Some(parse_sla(value).map_err(|m| malformed(&m))?);
        } else {
            return Err(malformed(&format!("unknown key {key:?}")));
        }
    }
    Ok(IntentRequest {
        label: label.ok_or(IntentError::MissingKey(LABEL))?,
        validity_days: validity.ok_or(IntentError::MissingKey(VALIDITY))?,
        sla: sla.ok_or(IntentError::MissingKey(SLA_KEY))?,
    })
}

fn parse_validity(value: &str) -> Option<u32> {
    let mut parts = value.split_whitespace();
    let n: u32 = parts.next()?.parse().ok()?;
    match parts.next() {
        None => {}
        Some(unit) if unit.eq_ignore_ascii_case("days") || unit.eq_ignore_ascii_case("day") => {}
        Some(_) => return None,
    }
    if parts.next().is_some() || n == 0 {
        return None;
    }
    Some(n)
}

fn parse_sla(value: &str) -> Result<Sla, String> {
    let mut bandwidth = None;
    let mut latency = None;
    let mut cost = None;
    for field in value.split(';').map(str::trim).filter(|f| !f.is_empty()) {
        let (name, v) = field
            .split_once(':')
            .ok_or_else(|| format!("SLA field {field:?} is not `Name: value`"))?;
        let (name, v) = (name.trim(), v.trim());
        let number = |v: &str| -> Result<f64, String> {
            let x: f64 = v.parse().map_err(|_| format!("SLA {name} value {v:?} is not a number"))?;
            if !x.is_finite() || x < 0.0 {
                return Err(format!("SLA {name} must be a non-negative number"));
            }
            Ok(x)
        };
        if name.eq_ignore_ascii_case("bandwidth") {
            bandwidth = Some(v.parse::<u64>().map_err(|_| format!("SLA Bandwidth {v:?} is not a whole number of bits/s"))?);
        } else if name.eq_ignore_ascii_case("latency") {
            latency = Some(number(v)?);
        } else if name.eq_ignore_ascii_case("cost") {
            cost = Some(number(v)?);
        } else {
            return Err(format!("unknown SLA field {name:?}"));
        }
    }
    Ok(Sla {
        bandwidth_bps: bandwidth.ok_or("SLA is missing Bandwidth")?,
        latency_ms: latency.ok_or("SLA is missing Latency")?,
        cost: cost.ok_or("SLA is missing Cost")?,
    })
}

impl fmt::Display for IntentRequest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{LABEL}: {}", self.label)?;
        writeln!(f, "{VALIDITY}: {} days", self.validity_days)?;
        writeln!(
            f,
            "{SLA_KEY}: Bandwidth:{};Latency: {}; Cost: {};",
            self.sla.bandwidth_bps, self.sla.latency_ms, self.sla.cost
        )
    }
}
