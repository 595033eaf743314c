// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use std::fmt;
use std::net::IpAddr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::HopPath;
use crate::model::{Direction, FiveTuple, FlowSpec, MacAddress, PortNo, Protocol};

/// Priority of every controller-installed steering rule. Priority 0 is the
/// table-miss entry that punts to the controller.
pub const INSTALLED_RULE_PRIORITY: u16 = 100;

/// Match fields. `None` is a wildcard.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RuleMatch {
    pub in_port: Option<PortNo>,
    pub eth_dst: Option<MacAddress>,
    pub src_ip: Option<IpAddr>,
    pub dst_ip: Option<IpAddr>,
    pub src_port: Option<u16>,
    pub dst_port: Option<u16>,
    pub protocol: Option<Protocol>,
}

impl RuleMatch {
    pub fn exact(in_port: PortNo, tuple: &FiveTuple) -> Self {
        Self {
            in_port: Some(in_port),
            eth_dst: None,
            src_ip: Some(tuple.src_ip),
            dst_ip: Some(tuple.dst_ip),
            src_port: Some(tuple.src_port),
            dst_port: Some(tuple.dst_port),
            protocol: Some(tuple.protocol),
        }
    }

    /// Number of populated (non-wildcard) fields.
    pub fn specificity(&self) -> usize {
        [
            self.in_port.is_some(),
            self.eth_dst.is_some(),
            self.src_ip.is_some(),
            self.dst_ip.is_some(),
            self.src_port.is_some(),
            self.dst_port.is_some(),
            self.protocol.is_some(),
        ]
        .into_iter()
        .filter(|b| *b)
        .count()
    }

    pub fn matches(&self, in_port: PortNo, eth_dst: MacAddress, header: &FiveTuple) -> bool {
        fn ok<T: PartialEq>(want: &Option<T>, got: &T) -> bool {
            want.as_ref().is_none_or(|w| w == got)
        }
        ok(&self.in_port, &in_port)
            && ok(&self.eth_dst, &eth_dst)
            && ok(&self.src_ip, &header.src_ip)
            && ok(&self.dst_ip, &header.dst_ip)
            && ok(&self.src_port, &header.src_port)
            && ok(&self.dst_port, &header.dst_port)
            && ok(&self.protocol, &header.protocol)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Action {
    SetEthDst(MacAddress),
    Output(PortNo),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlowRule {
    pub sff_id: String,
    pub priority: u16,
    #[serde(rename = "match")]
    pub matcher: RuleMatch,
    pub actions: Vec<Action>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RuleError {
    #[error("rule on {0} must end with exactly one output action")]
    Output(String),
    #[error("rule on {0} uses priority 0, reserved for table miss")]
    ReservedPriority(String),
}

impl FlowRule {
    /// The output port, when the action list is well formed.
    pub fn output(&self) -> Option<PortNo> {
        match self.actions.last() {
            Some(Action::Output(p)) => Some(*p),
            _ => None,
        }
    }

    pub fn check(&self) -> Result<(), RuleError> {
        let outputs = self
            .actions
            .iter()
            .filter(|a| matches!(a, Action::Output(_)))
            .count();
        if outputs != 1 || self.output().is_none() {
            return Err(RuleError::Output(self.sff_id.clone()));
        }
        if self.priority == 0 {
            return Err(RuleError::ReservedPriority(self.sff_id.clone()));
        }
        Ok(())
    }
}

impl fmt::Display for FlowRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rule {} priority={} match=", self.sff_id, self.priority)?;
        let m = &self.matcher;
        let mut fields = Vec::new();
        if let Some(v) = m.in_port {
            fields.push(format!("in_port:{v}"));
        }
        if let Some(v) = m.eth_dst {
            fields.push(format!("eth_dst:{v}"));
        }
        if let Some(v) = m.protocol {
            fields.push(format!("proto:{v}"));
        }
        if let Some(v) = m.src_ip {
            fields.push(format!("src_ip:{v}"));
        }
        if let Some(v) = m.src_port {
            fields.push(format!("src_port:{v}"));
        }
        if let Some(v) = m.dst_ip {
            fields.push(format!("dst_ip:{v}"));
        }
        if let Some(v) = m.dst_port {
            fields.push(format!("dst_port:{v}"));
        }
        if fields.is_empty() {
            fields.push("*".to_string());
        }
        write!(f, "{} actions=", fields.join(","))?;
        let actions: Vec<String> = self
            .actions
            .iter()
            .map(|a| match a {
                Action::SetEthDst(mac) => format!("set_eth_dst:{mac}"),
                Action::Output(p) => format!("output:{p}"),
            })
            .collect();
        f.write_str(&actions.join(","))
    }
}

/// One steering rule per hop. Reverse paths match the swapped tuple.
pub fn generate_flow_rules(path: &HopPath, flow: &FlowSpec) -> Vec<FlowRule> {
    let tuple = match path.direction {
        Direction::Forward => flow.tuple,
        Direction::Reverse => flow.tuple.reversed(),
    };
    let last = path.hops.len().saturating_sub(1);
    path.hops
        .iter()
        .enumerate()
        .map(|(i, hop)| {
            let mac = if i == last {
                path.terminal_restore_mac
            } else {
                hop.next_mac
            };
            FlowRule {
                sff_id: hop.sff.clone(),
                priority: INSTALLED_RULE_PRIORITY,
                matcher: RuleMatch::exact(hop.ingress_port, &tuple),
                actions: vec![Action::SetEthDst(mac), Action::Output(hop.egress_port)],
            }
        })
        .collect()
}
