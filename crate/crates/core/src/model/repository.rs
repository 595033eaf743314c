// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

//! The administrator-populated store of forwarders, service functions, chains
//! and flows that the controller consults on every packet-in.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::Read;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{FlowSpec, MacAddress, PortNo, PortRef, SfcId, Topology};

fn default_true() -> bool {
    true
}

fn is_true(b: &bool) -> bool {
    *b
}

/// A service function instance attached to one forwarder through two ports.
///
/// Forward traffic enters on `in_port` and leaves on `out_port`; reverse
/// traffic uses the same two interfaces the other way round.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ServiceFunction {
    pub id: String,
    pub mac: MacAddress,
    #[serde(rename = "sff")]
    pub sff_id: String,
    pub in_port: PortNo,
    pub out_port: PortNo,
    #[serde(default = "default_true")]
    pub requires_symmetry: bool,
    #[serde(default)]
    pub processing_delay_us: u64,
    #[serde(default = "default_true", skip_serializing_if = "is_true")]
    pub available: bool,
    /// Functional role (firewall, url-filter, ...), used when composing chains from blueprints.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub role: Option<String>,
}

impl ServiceFunction {
    pub fn in_ref(&self) -> PortRef {
        PortRef::new(self.sff_id.clone(), self.in_port)
    }

    pub fn out_ref(&self) -> PortRef {
        PortRef::new(self.sff_id.clone(), self.out_port)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ServiceChain {
    pub sfc_id: SfcId,
    /// Service function ids in forward order.
    #[serde(rename = "sfs")]
    pub sf_sequence: Vec<String>,
}

impl ServiceChain {
    pub fn new(sfc_id: SfcId, sfs: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Self {
            sfc_id,
            sf_sequence: sfs.into_iter().map(Into::into).collect(),
        }
    }
}

/// A broken invariant, reported as data by [`Repository::validate`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub rule: &'static str,
    pub subject: String,
}

impl Violation {
    fn new(rule: &'static str, subject: impl Into<String>) -> Self {
        Self {
            rule,
            subject: subject.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.rule, self.subject)
    }
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("read error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate {kind} id {id:?}")]
    DuplicateId { kind: &'static str, id: String },
    #[error("invalid repository: {}", join(.0))]
    Invalid(Vec<Violation>),
}

fn join(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LookupError {
    #[error("unknown sfc id {0}")]
    UnknownSfc(SfcId),
    #[error("unknown service function {0:?}")]
    UnknownSf(String),
}

/// On-disk layout of a repository document.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepositoryDocument {
    #[serde(default)]
    pub topology: Topology,
    #[serde(default)]
    pub sfs: Vec<ServiceFunction>,
    #[serde(default)]
    pub chains: Vec<ServiceChain>,
    #[serde(default)]
    pub flows: Vec<FlowSpec>,
}

/// Immutable snapshot of the controller's knowledge. Updates build a new value.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Repository {
    pub topology: Topology,
    pub sfs: BTreeMap<String, ServiceFunction>,
    pub chains: BTreeMap<SfcId, ServiceChain>,
    pub flows: Vec<FlowSpec>,
}

impl Repository {
    /// Reads and validates a repository document.
    pub fn load(mut source: impl Read) -> Result<Self, LoadError> {
        let mut text = String::new();
        source.read_to_string(&mut text)?;
        Self::from_json_str(&text)
    }

    pub fn from_json_str(text: &str) -> Result<Self, LoadError> {
        if text.trim().is_empty() {
            return Ok(Self::default());
        }
        let doc: RepositoryDocument = serde_json::from_str(text).map_err(|e| LoadError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Self::from_document(doc)
    }

    pub fn from_document(doc: RepositoryDocument) -> Result<Self, LoadError> {
        let mut sfs = BTreeMap::new();
        for sf in doc.sfs {
            if sfs.contains_key(&sf.id) {
                return Err(LoadError::DuplicateId {
                    kind: "service function",
                    id: sf.id,
                });
            }
            sfs.insert(sf.id.clone(), sf);
        }
        let mut chains = BTreeMap::new();
        for chain in doc.chains {
            if chains.contains_key(&chain.sfc_id) {
                return Err(LoadError::DuplicateId {
                    kind: "sfc",
                    id: chain.sfc_id.to_string(),
                });
            }
            chains.insert(chain.sfc_id, chain);
        }
        let mut seen = BTreeSet::new();
        for sff in &doc.topology.sffs {
            if !seen.insert(sff.id.as_str()) {
                return Err(LoadError::DuplicateId {
                    kind: "sff",
                    id: sff.id.clone(),
                });
            }
        }
        let mut seen = BTreeSet::new();
        for ep in &doc.topology.endpoints {
            if !seen.insert(ep.id.as_str()) || sfs.contains_key(&ep.id) {
                return Err(LoadError::DuplicateId {
                    kind: "endpoint",
                    id: ep.id.clone(),
                });
            }
        }
        let repo = Self {
            topology: doc.topology,
            sfs,
            chains,
            flows: doc.flows,
        };
        let violations = repo.validate();
        if violations.is_empty() {
            Ok(repo)
        } else {
            Err(LoadError::Invalid(violations))
        }
    }

    pub fn to_document(&self) -> RepositoryDocument {
        RepositoryDocument {
            topology: self.topology.clone(),
            sfs: self.sfs.values().cloned().collect(),
            chains: self.chains.values().cloned().collect(),
            flows: self.flows.clone(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("repository serializes")
    }

    pub fn chain(&self, sfc_id: SfcId) -> Result<&ServiceChain, LookupError> {
        self.chains.get(&sfc_id).ok_or(LookupError::UnknownSfc(sfc_id))
    }

    pub fn sf(&self, id: &str) -> Result<&ServiceFunction, LookupError> {
        self.sfs
            .get(id)
            .ok_or_else(|| LookupError::UnknownSf(id.to_string()))
    }

    /// A copy with the chain (and flows bound to it) removed.
    pub fn without_chain(&self, sfc_id: SfcId) -> Self {
        let mut next = self.clone();
        next.chains.remove(&sfc_id);
        next.flows.retain(|f| f.sfc_id != sfc_id);
        next
    }

    /// A copy with every service function's symmetry flag forced to `requires`.
    pub fn with_uniform_symmetry(&self, requires: bool) -> Self {
        let mut next = self.clone();
        for sf in next.sfs.values_mut() {
            sf.requires_symmetry = requires;
        }
        next
    }

    /// Number of chains each service function appears in.
    pub fn chain_load(&self) -> BTreeMap<&str, usize> {
        let mut load: BTreeMap<&str, usize> = self.sfs.keys().map(|k| (k.as_str(), 0)).collect();
        for chain in self.chains.values() {
            for id in &chain.sf_sequence {
                if let Some(n) = load.get_mut(id.as_str()) {
                    *n += 1;
                }
            }
        }
        load
    }

    /// Checks every structural and referential invariant. Empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let topo = &self.topology;

        let mut sff_ids = BTreeSet::new();
        for sff in &topo.sffs {
            if !sff_ids.insert(sff.id.as_str()) {
                out.push(Violation::new("duplicate-sff", &sff.id));
            }
            let mut ports = BTreeSet::new();
            for p in &sff.ports {
                if !ports.insert(*p) {
                    out.push(Violation::new("duplicate-port", PortRef::new(sff.id.clone(), *p).to_string()));
                }
            }
        }

        // Every forwarder port carries at most one attachment.
        let mut attached: BTreeMap<PortRef, String> = BTreeMap::new();
        let mut attach = |port: PortRef, owner: String, out: &mut Vec<Violation>| {
            if !topo.sff(&port.sff).is_some() {
                out.push(Violation::new("unknown-sff", format!("{owner} -> {}", port.sff)));
                return;
            }
            if !topo.has_port(&port) {
                out.push(Violation::new("unknown-port", format!("{owner} -> {port}")));
                return;
            }
            if let Some(prev) = attached.get(&port) {
                out.push(Violation::new("port-conflict", format!("{port} used by {prev} and {owner}")));
            } else {
                attached.insert(port, owner);
            }
        };

        let mut endpoint_ids = BTreeSet::new();
        let mut ips = BTreeSet::new();
        for ep in &topo.endpoints {
            if !endpoint_ids.insert(ep.id.as_str()) {
                out.push(Violation::new("duplicate-endpoint", &ep.id));
            }
            if let Some(ip) = ep.ip {
                if !ips.insert(ip) {
                    out.push(Violation::new("duplicate-endpoint-ip", ip.to_string()));
                }
            }
            attach(ep.attachment(), format!("endpoint {}", ep.id), &mut out);
        }
        for (idx, link) in topo.links.iter().enumerate() {
            attach(link.a.clone(), format!("link #{idx}"), &mut out);
            attach(link.b.clone(), format!("link #{idx}"), &mut out);
        }
        for sf in self.sfs.values() {
            if sf.in_port == sf.out_port {
                out.push(Violation::new("same-in-out-port", &sf.id));
                continue;
            }
            attach(sf.in_ref(), format!("sf {}", sf.id), &mut out);
            attach(sf.out_ref(), format!("sf {}", sf.id), &mut out);
        }

        let mut macs: BTreeMap<MacAddress, &str> = BTreeMap::new();
        let owners = self
            .sfs
            .values()
            .map(|sf| (sf.mac, sf.id.as_str()))
            .chain(topo.endpoints.iter().map(|e| (e.mac, e.id.as_str())));
        for (mac, owner) in owners {
            if let Some(prev) = macs.insert(mac, owner) {
                out.push(Violation::new("duplicate-mac", format!("{mac} ({prev}, {owner})")));
            }
        }

        if !topo.is_connected() {
            out.push(Violation::new("disconnected-topology", "sffs"));
        }

        for (key, chain) in &self.chains {
            if *key != chain.sfc_id {
                out.push(Violation::new("chain-id-mismatch", key.to_string()));
            }
            if chain.sf_sequence.is_empty() {
                out.push(Violation::new("empty-chain", chain.sfc_id.to_string()));
            }
            let mut seen = BTreeSet::new();
            for id in &chain.sf_sequence {
                if !self.sfs.contains_key(id) {
                    out.push(Violation::new("unknown-sf", id));
                }
                if !seen.insert(id.as_str()) {
                    out.push(Violation::new(
                        "duplicate-sf-in-chain",
                        format!("{id} in sfc {}", chain.sfc_id),
                    ));
                }
            }
        }

        for flow in &self.flows {
            if !self.chains.contains_key(&flow.sfc_id) {
                out.push(Violation::new("unknown-sfc", format!("{} ({})", flow.sfc_id, flow.tuple)));
            }
            for ip in [flow.tuple.src_ip, flow.tuple.dst_ip] {
                if topo.endpoint_by_ip(ip).is_none() {
                    out.push(Violation::new("unknown-endpoint-ip", ip.to_string()));
                }
            }
        }

        out
    }
}

impl Repository {
    /// Binds a header to a registered flow: forward when it equals the flow's
    /// tuple, reverse when it equals the swapped tuple.
    pub fn classify(&self, header: &super::FiveTuple) -> Option<(&FlowSpec, super::Direction)> {
        self.flows.iter().find_map(|f| {
            if f.tuple == *header {
                Some((f, super::Direction::Forward))
            } else if f.tuple.reversed() == *header {
                Some((f, super::Direction::Reverse))
            } else {
                None
            }
        })
    }
}
