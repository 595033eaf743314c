// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

//! Shipped evaluation fixtures: a three-forwarder line with the chain
//! `SF2 -> SF1 -> SF3`, where only `SF3` (a firewall) requires symmetry.

use crate::model::Repository;

pub const EVALUATION_REPOSITORY: &str = include_str!("../data/evaluation_repository.json");
pub const BLUEPRINT_CATALOG: &str = include_str!("../data/blueprints.json");
pub const SAMPLE_INTENT: &str = include_str!("../data/sample.intent");

pub fn evaluation_repository() -> Repository {
    Repository::from_json_str(EVALUATION_REPOSITORY).expect("shipped repository is valid")
}
