// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

//! Service abstraction layer: intent text in, deployment command out.
//!
//! The pipeline is parse → blueprint mapping → resource sizing → chain
//! composition → command. [`OperationsLayer`] then registers the chain and
//! derives its steering rules.

mod blueprint;
mod compose;
mod deploy;
mod parse;
mod resources;

use thiserror::Error;

use crate::model::{FiveTuple, Repository, Violation};
use crate::path::PathError;

pub use blueprint::{map_intent_to_blueprint, parse_blueprints, Blueprint, RoleSpec};
pub use compose::{compose_sfc_instance, next_free_sfc_id};
pub use deploy::{
    build_deployment_command, AuditLog, Deployment, DeploymentCommand, OperationsLayer,
    SfSnapshot, SouthboundCall,
};
pub use parse::{parse_intent, IntentRequest, Sla};
pub use resources::{compute_resources, ResourceAllocation, ResourcePolicy, RoleResources};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IntentError {
    #[error("missing key {0:?}")]
    MissingKey(&'static str),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("blueprint {0} has no roles")]
    EmptyBlueprint(String),
    #[error("no blueprint admits the intent ({})", .0.join("; "))]
    NoMatchingBlueprint(Vec<String>),
    #[error("no available function for role {0:?}")]
    NoInstanceForRole(String),
    #[error("no free sfc id")]
    SfcIdsExhausted,
    #[error("inconsistent deployment: {0}")]
    Consistency(String),
    #[error("deployment would break the repository: {0:?}")]
    InvalidRepository(Vec<Violation>),
    #[error(transparent)]
    Path(#[from] PathError),
}

/// Runs the whole workflow on intent text.
pub fn intent_pipeline(
    text: &str,
    catalog: &[Blueprint],
    repo: &Repository,
    policy: &ResourcePolicy,
    flows: &[FiveTuple],
) -> Result<DeploymentCommand, IntentError> {
    let intent = parse_intent(text)?;
    let bp = map_intent_to_blueprint(&intent, catalog)?;
    let alloc = compute_resources(&intent, bp, policy);
    let chain = compose_sfc_instance(bp, repo)?;
    build_deployment_command(&intent, bp, &alloc, &chain, repo, flows)
}
