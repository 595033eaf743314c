// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use super::{Blueprint, IntentError, RoleSpec};
use crate::model::{Repository, ServiceChain, ServiceFunction, SfcId};

fn fills(sf: &ServiceFunction, role: &RoleSpec) -> bool {
    sf.available
        && sf.role.as_deref() == Some(role.role.as_str())
        && sf.requires_symmetry == role.requires_symmetry
}

/// Smallest chain identifier not yet in use.
pub fn next_free_sfc_id(repo: &Repository) -> Option<SfcId> {
    (1..=SfcId::MAX).find(|id| !repo.chains.contains_key(id))
}

/// Binds each blueprint role to a concrete function: the available match
/// used by the fewest chains, ties to the smallest id. A function fills at
/// most one role of the chain.
pub fn compose_sfc_instance(bp: &Blueprint, repo: &Repository) -> Result<ServiceChain, IntentError> {
    let load = repo.chain_load();
    let mut picked: Vec<String> = Vec::with_capacity(bp.sf_roles.len());
    for role in &bp.sf_roles {
        let best = repo
            .sfs
            .values()
            .filter(|sf| fills(sf, role) && !picked.contains(&sf.id))
            .min_by_key(|sf| (load.get(sf.id.as_str()).copied().unwrap_or(0), sf.id.as_str()))
            .ok_or_else(|| IntentError::NoInstanceForRole(role.role.clone()))?;
        picked.push(best.id.clone());
    }
    let sfc_id = next_free_sfc_id(repo).ok_or(IntentError::SfcIdsExhausted)?;
    Ok(ServiceChain::new(sfc_id, picked))
}
