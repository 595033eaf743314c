// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use std::collections::BTreeMap;

use super::PathError;
use crate::model::{LookupError, ServiceChain, ServiceFunction};

/// Service functions the reply traffic must cross, in reply order.
///
/// Walks the chain from its last function to its first and keeps only those
/// that require symmetry. A kept function that is unavailable is an error;
/// skipped functions are never inspected beyond their flag.
pub fn compute_reverse_sf_sequence(
    chain: &ServiceChain,
    catalog: &BTreeMap<String, ServiceFunction>,
) -> Result<Vec<String>, PathError> {
    let mut reverse = Vec::new();
    for id in chain.sf_sequence.iter().rev() {
        let sf = catalog
            .get(id)
            .ok_or_else(|| LookupError::UnknownSf(id.clone()))?;
        if !sf.requires_symmetry {
            continue;
        }
        if !sf.available {
            return Err(PathError::UnavailableSf(id.clone()));
        }
        reverse.push(id.clone());
    }
    Ok(reverse)
}
