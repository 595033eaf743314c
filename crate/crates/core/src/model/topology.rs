// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::net::IpAddr;

use serde::{Deserialize, Serialize};

use super::MacAddress;

pub type PortNo = u16;

/// A port on a service function forwarder.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PortRef {
    pub sff: String,
    pub port: PortNo,
}

impl PortRef {
    pub fn new(sff: impl Into<String>, port: PortNo) -> Self {
        Self {
            sff: sff.into(),
            port,
        }
    }
}

impl fmt::Display for PortRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.sff, self.port)
    }
}

/// A service function forwarder. Its flow table lives in the simulator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Forwarder {
    pub id: String,
    pub ports: Vec<PortNo>,
}

/// A traffic source or sink (client, server) hanging off one forwarder port.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Endpoint {
    pub id: String,
    pub mac: MacAddress,
    pub sff: String,
    pub port: PortNo,
    /// Address used to bind flow tuples to this endpoint.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ip: Option<IpAddr>,
}

impl Endpoint {
    pub fn attachment(&self) -> PortRef {
        PortRef::new(self.sff.clone(), self.port)
    }
}

/// A bidirectional forwarder-to-forwarder link.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Link {
    pub a: PortRef,
    pub b: PortRef,
    pub delay_us: u64,
    /// Serialization rate in bits per second; `0` means unlimited.
    pub capacity_bps: u64,
}

impl Link {
    /// The far end of the link as seen from `sff`, if the link touches it.
    pub fn peer_of(&self, sff: &str) -> Option<(&PortRef, &PortRef)> {
        if self.a.sff == sff {
            Some((&self.a, &self.b))
        } else if self.b.sff == sff {
            Some((&self.b, &self.a))
        } else {
            None
        }
    }
}

/// One step between adjacent forwarders: leave on `local_port`, arrive on `remote_port`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Adjacency {
    pub neighbor: String,
    pub local_port: PortNo,
    pub remote_port: PortNo,
    pub link: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Topology {
    #[serde(default)]
    pub sffs: Vec<Forwarder>,
    #[serde(default)]
    pub endpoints: Vec<Endpoint>,
    #[serde(default)]
    pub links: Vec<Link>,
}

impl Topology {
    pub fn sff(&self, id: &str) -> Option<&Forwarder> {
        self.sffs.iter().find(|s| s.id == id)
    }

    pub fn has_port(&self, port: &PortRef) -> bool {
        self.sff(&port.sff)
            .is_some_and(|s| s.ports.contains(&port.port))
    }

    pub fn endpoint(&self, id: &str) -> Option<&Endpoint> {
        self.endpoints.iter().find(|e| e.id == id)
    }

    pub fn endpoint_by_ip(&self, ip: IpAddr) -> Option<&Endpoint> {
        self.endpoints.iter().find(|e| e.ip == Some(ip))
    }

    /// Forwarder adjacency, each list sorted by (neighbor id, local port).
    pub fn adjacency(&self) -> BTreeMap<&str, Vec<Adjacency>> {
        let mut adj: BTreeMap<&str, Vec<Adjacency>> = BTreeMap::new();
        for sff in &self.sffs {
            adj.entry(sff.id.as_str()).or_default();
        }
        for (idx, link) in self.links.iter().enumerate() {
            for (near, far) in [(&link.a, &link.b), (&link.b, &link.a)] {
                adj.entry(near.sff.as_str()).or_default().push(Adjacency {
                    neighbor: far.sff.clone(),
                    local_port: near.port,
                    remote_port: far.port,
                    link: idx,
                });
            }
        }
        for list in adj.values_mut() {
            list.sort();
        }
        adj
    }

    /// True when every forwarder is reachable from every other one.
    pub fn is_connected(&self) -> bool {
        let Some(first) = self.sffs.first() else {
            return true;
        };
        let adj = self.adjacency();
        let mut seen = BTreeSet::from([first.id.as_str()]);
        let mut queue = VecDeque::from([first.id.as_str()]);
        while let Some(cur) = queue.pop_front() {
            for a in adj.get(cur).into_iter().flatten() {
                if let Some(known) = adj.get_key_value(a.neighbor.as_str()).map(|(k, _)| *k) {
                    if seen.insert(known) {
                        queue.push_back(known);
                    }
                }
            }
        }
        self.sffs.iter().all(|s| seen.contains(s.id.as_str()))
    }
}
