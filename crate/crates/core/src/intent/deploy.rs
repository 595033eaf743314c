// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use std::fmt;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::{Blueprint, IntentError, IntentRequest, ResourceAllocation};
use crate::model::{FiveTuple, FlowSpec, MacAddress, Repository, ServiceChain, SfcId};
use crate::path::{compute_forward_path, compute_reverse_path, generate_flow_rules, FlowRule};

/// Attributes of one chain function as read from the catalog at build time.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SfSnapshot {
    pub id: String,
    pub role: String,
    pub requires_symmetry: bool,
    pub mac: MacAddress,
    pub sff: String,
}

/// Everything the operations layer needs to instantiate one intent.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeploymentCommand {
    pub intent_label: String,
    pub blueprint_id: String,
    pub chain: ServiceChain,
    pub allocation: ResourceAllocation,
    pub sf_attributes: Vec<SfSnapshot>,
    pub flows: Vec<FlowSpec>,
}

pub fn build_deployment_command(
    intent: &IntentRequest,
    bp: &Blueprint,
    alloc: &ResourceAllocation,
    chain: &ServiceChain,
    repo: &Repository,
    flows: &[FiveTuple],
) -> Result<DeploymentCommand, IntentError> {
    if chain.sf_sequence.len() != bp.sf_roles.len() || alloc.roles.len() != bp.sf_roles.len() {
        return Err(IntentError::Consistency(format!(
            "blueprint {} has {} roles, chain has {} functions, allocation has {} roles",
            bp.id,
            bp.sf_roles.len(),
            chain.sf_sequence.len(),
            alloc.roles.len()
        )));
    }
    let mut sf_attributes = Vec::with_capacity(chain.sf_sequence.len());
    for id in &chain.sf_sequence {
        let sf = repo
            .sfs
            .get(id)
            .ok_or_else(|| IntentError::Consistency(format!("chain references unknown function {id}")))?;
        let role = sf
            .role
            .clone()
            .ok_or_else(|| IntentError::Consistency(format!("function {id} has no role attribute")))?;
        sf_attributes.push(SfSnapshot {
            id: id.clone(),
            role,
            requires_symmetry: sf.requires_symmetry,
            mac: sf.mac,
            sff: sf.sff_id.clone(),
        });
    }
    for (snap, want) in sf_attributes.iter().zip(&bp.sf_roles) {
        if snap.role != want.role {
            return Err(IntentError::Consistency(format!(
                "function {} has role {} where blueprint {} expects {}",
                snap.id, snap.role, bp.id, want.role
            )));
        }
    }
    Ok(DeploymentCommand {
        intent_label: intent.label.clone(),
        blueprint_id: bp.id.clone(),
        chain: chain.clone(),
        allocation: alloc.clone(),
        sf_attributes,
        flows: flows
            .iter()
            .map(|t| FlowSpec {
                tuple: *t,
                sfc_id: chain.sfc_id,
            })
            .collect(),
    })
}

impl fmt::Display for DeploymentCommand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "deployment intent={} blueprint={}", self.intent_label, self.blueprint_id)?;
        writeln!(f, "chain sfc={} sfs={}", self.chain.sfc_id, self.chain.sf_sequence.join(","))?;
        for r in &self.allocation.roles {
            writeln!(
                f,
                "resources role={} cpu_units={} memory_mb={} bandwidth_bps={}",
                r.role, r.cpu_units, r.memory_mb, r.bandwidth_bps
            )?;
        }
        for s in &self.sf_attributes {
            writeln!(
                f,
                "sf id={} role={} requires_symmetry={} mac={} sff={}",
                s.id, s.role, s.requires_symmetry, s.mac, s.sff
            )?;
        }
        for flow in &self.flows {
            writeln!(f, "flow {}", flow.tuple)?;
        }
        Ok(())
    }
}

/// A southbound request (orchestrator, VIM, SDN controller) recorded instead of sent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SouthboundCall {
    pub target: String,
    pub operation: String,
    pub detail: String,
}

/// Append-only record of southbound calls. Appends are serialized.
#[derive(Debug, Default)]
pub struct AuditLog {
    calls: Mutex<Vec<SouthboundCall>>,
}

impl AuditLog {
    pub fn append(&self, target: &str, operation: &str, detail: String) {
        self.calls.lock().expect("audit log poisoned").push(SouthboundCall {
            target: target.to_string(),
            operation: operation.to_string(),
            detail,
        });
    }

    pub fn snapshot(&self) -> Vec<SouthboundCall> {
        self.calls.lock().expect("audit log poisoned").clone()
    }

    pub fn len(&self) -> usize {
        self.calls.lock().expect("audit log poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Result of executing a deployment command.
#[derive(Clone, Debug, PartialEq)]
pub struct Deployment {
    pub repository: Repository,
    /// False when the command was already in effect.
    pub registered: bool,
    pub rules: Vec<FlowRule>,
}

/// The lower layer: registers chains and flows, derives steering rules, and
/// records what it would ask of the orchestration stack.
#[derive(Debug, Default)]
pub struct OperationsLayer {
    pub audit: AuditLog,
}

impl OperationsLayer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn execute(&self, repo: &Repository, cmd: &DeploymentCommand) -> Result<Deployment, IntentError> {
        for snap in &cmd.sf_attributes {
            let sf = repo
                .sfs
                .get(&snap.id)
                .ok_or_else(|| IntentError::Consistency(format!("function {} no longer exists", snap.id)))?;
            if sf.requires_symmetry != snap.requires_symmetry {
                return Err(IntentError::Consistency(format!(
                    "symmetry flag of {} changed since the command was built",
                    snap.id
                )));
            }
        }

        let already = match repo.chains.get(&cmd.chain.sfc_id) {
            Some(existing) if *existing == cmd.chain => {
                cmd.flows.iter().all(|f| repo.flows.contains(f))
            }
            Some(_) => {
                return Err(IntentError::Consistency(format!(
                    "sfc id {} is taken by another chain",
                    cmd.chain.sfc_id
                )))
            }
            None => false,
        };
        if already {
            return Ok(Deployment {
                repository: repo.clone(),
                registered: false,
                rules: Vec::new(),
            });
        }

        let mut next = repo.clone();
        next.chains.insert(cmd.chain.sfc_id, cmd.chain.clone());
        for flow in &cmd.flows {
            if next.flows.contains(flow) {
                continue;
            }
            if let Some((other, _)) = next.classify(&flow.tuple) {
                return Err(IntentError::Consistency(format!(
                    "flow {} already bound to sfc {}",
                    flow.tuple, other.sfc_id
                )));
            }
            next.flows.push(*flow);
        }
        let violations = next.validate();
        if !violations.is_empty() {
            return Err(IntentError::InvalidRepository(violations));
        }

        let mut rules = Vec::new();
        for flow in &cmd.flows {
            let forward = compute_forward_path(&cmd.chain, flow, &next.topology, &next.sfs)?;
            let reverse = compute_reverse_path(&cmd.chain, flow, &next.topology, &next.sfs)?;
            rules.extend(generate_flow_rules(&forward, flow));
            rules.extend(generate_flow_rules(&reverse, flow));
        }

        self.audit.append(
            "nfvo",
            "instantiate",
            format!("intent={} sfs={}", cmd.intent_label, cmd.chain.sf_sequence.join(",")),
        );
        for r in &cmd.allocation.roles {
            self.audit.append(
                "vim",
                "reserve",
                format!("role={} cpu_units={} memory_mb={}", r.role, r.cpu_units, r.memory_mb),
            );
        }
        self.audit.append(
            "sdn-c",
            "register-chain",
            format!("sfc={} flows={} rules={}", cmd.chain.sfc_id, cmd.flows.len(), rules.len()),
        );
        Ok(Deployment {
            repository: next,
            registered: true,
            rules,
        })
    }

    /// Removes a chain and its flows.
    pub fn deregister(&self, repo: &Repository, sfc_id: SfcId) -> Repository {
        if repo.chains.contains_key(&sfc_id) {
            self.audit.append("sdn-c", "deregister-chain", format!("sfc={sfc_id}"));
        }
        repo.without_chain(sfc_id)
    }
}
