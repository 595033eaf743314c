// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use super::{Packet, SimTime};

/// A service function as a single FIFO server that forwards packets untouched.
#[derive(Clone, Debug)]
pub struct SfServer {
    pub sf_id: String,
    pub processing_delay_ns: u64,
    busy_until: SimTime,
    processed: u64,
}

impl SfServer {
    pub fn new(sf_id: impl Into<String>, processing_delay_ns: u64) -> Self {
        Self {
            sf_id: sf_id.into(),
            processing_delay_ns,
            busy_until: 0,
            processed: 0,
        }
    }

    pub fn processed(&self) -> u64 {
        self.processed
    }

    /// Accepts `pkt` at `now`; returns it with the time it leaves the function.
    pub fn transit(&mut self, pkt: Packet, now: SimTime, extra_ns: u64) -> (Packet, SimTime) {
        let start = now.max(self.busy_until);
        let ready_at = start + self.processing_delay_ns + extra_ns;
        self.busy_until = ready_at;
        self.processed += 1;
        (pkt, ready_at)
    }
}
