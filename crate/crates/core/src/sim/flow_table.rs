// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use std::cmp::Reverse;

use crate::model::{FiveTuple, MacAddress, PortNo};
use crate::path::{FlowRule, RuleError};

#[derive(Clone, Debug)]
struct Entry {
    rule: FlowRule,
    installed: u64,
}

impl Entry {
    fn key(&self) -> (Reverse<u16>, Reverse<usize>, u64) {
        (
            Reverse(self.rule.priority),
            Reverse(self.rule.matcher.specificity()),
            self.installed,
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstallOutcome {
    Added,
    Unchanged,
    /// Same match and priority, new actions.
    Modified,
}

/// A forwarder's rule table. A miss means the packet goes to the controller.
///
/// Lookup order: highest priority, then most populated match fields, then
/// earliest installation.
#[derive(Clone, Debug, Default)]
pub struct FlowTable {
    // kept sorted by Entry::key
    entries: Vec<Entry>,
    next_install: u64,
}

impl FlowTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn rules(&self) -> impl Iterator<Item = &FlowRule> {
        self.entries.iter().map(|e| &e.rule)
    }

    pub fn install(&mut self, rule: FlowRule) -> Result<InstallOutcome, RuleError> {
        rule.check()?;
        if let Some(e) = self
            .entries
            .iter_mut()
            .find(|e| e.rule.priority == rule.priority && e.rule.matcher == rule.matcher)
        {
            if e.rule.actions == rule.actions {
                return Ok(InstallOutcome::Unchanged);
            }
            e.rule.actions = rule.actions;
            return Ok(InstallOutcome::Modified);
        }
        let entry = Entry {
            rule,
            installed: self.next_install,
        };
        self.next_install += 1;
        let at = self.entries.partition_point(|e| e.key() < entry.key());
        self.entries.insert(at, entry);
        Ok(InstallOutcome::Added)
    }

    pub fn lookup(&self, in_port: PortNo, eth_dst: MacAddress, header: &FiveTuple) -> Option<&FlowRule> {
        self.entries
            .iter()
            .find(|e| e.rule.matcher.matches(in_port, eth_dst, header))
            .map(|e| &e.rule)
    }
}
