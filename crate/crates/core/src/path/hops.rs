// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{compute_reverse_sf_sequence, shortest_route, PathError};
use crate::model::{
    Direction, Endpoint, FlowSpec, LookupError, MacAddress, PortNo, ServiceChain,
    ServiceFunction, SfcId, Topology,
};

/// A single forwarding decision: packets entering `sff` on `ingress_port` get
/// their destination MAC set to `next_mac` and leave on `egress_port`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hop {
    pub sff: String,
    pub ingress_port: PortNo,
    pub next_mac: MacAddress,
    pub egress_port: PortNo,
}

/// The concrete forwarder-level realization of one direction of a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopPath {
    pub direction: Direction,
    pub sfc_id: SfcId,
    pub hops: Vec<Hop>,
    /// MAC of the final destination, written back by the last forwarder.
    pub terminal_restore_mac: MacAddress,
    /// Service functions crossed, in traversal order.
    pub sf_visits: Vec<String>,
    pub origin: String,
    pub destination: String,
}

impl fmt::Display for HopPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "path sfc={} direction={} origin={} destination={} restore={} sfs=[{}]",
            self.sfc_id,
            self.direction,
            self.origin,
            self.destination,
            self.terminal_restore_mac,
            self.sf_visits.join(",")
        )?;
        for h in &self.hops {
            writeln!(
                f,
                "hop {} in={} set_eth_dst={} out={}",
                h.sff, h.ingress_port, h.next_mac, h.egress_port
            )?;
        }
        Ok(())
    }
}

fn endpoint(topo: &Topology, ip: std::net::IpAddr) -> Result<&Endpoint, PathError> {
    topo.endpoint_by_ip(ip).ok_or(PathError::UnknownEndpoint(ip))
}

/// A stop along the path: a service function interface pair, entered on
/// `enter` and left on `exit`.
struct Visit<'a> {
    sf: &'a ServiceFunction,
    enter: PortNo,
    exit: PortNo,
}

fn assemble(
    direction: Direction,
    sfc_id: SfcId,
    topo: &Topology,
    origin: &Endpoint,
    visits: &[Visit<'_>],
    destination: &Endpoint,
) -> Result<HopPath, PathError> {
    let mut hops = Vec::new();
    let mut at_sff = origin.sff.as_str();
    let mut at_port = origin.port;

    let targets = visits
        .iter()
        .map(|v| (v.sf.sff_id.as_str(), v.enter, v.sf.mac, Some(v.exit)))
        .chain(std::iter::once((
            destination.sff.as_str(),
            destination.port,
            destination.mac,
            None,
        )));
    for (sff, port, mac, exit) in targets {
        for step in shortest_route(topo, at_sff, sff)? {
            hops.push(Hop {
                sff: step.from.clone(),
                ingress_port: at_port,
                next_mac: mac,
                egress_port: step.egress_port,
            });
            at_port = step.ingress_port;
        }
        hops.push(Hop {
            sff: sff.to_string(),
            ingress_port: at_port,
            next_mac: mac,
            egress_port: port,
        });
        at_sff = sff;
        if let Some(exit) = exit {
            at_port = exit;
        }
    }

    let mut entered = BTreeSet::new();
    for h in &hops {
        if !entered.insert((h.sff.as_str(), h.ingress_port)) {
            return Err(PathError::ConflictingHops {
                sfc_id,
                sff: h.sff.clone(),
                port: h.ingress_port,
            });
        }
    }

    Ok(HopPath {
        direction,
        sfc_id,
        hops,
        terminal_restore_mac: destination.mac,
        sf_visits: visits.iter().map(|v| v.sf.id.clone()).collect(),
        origin: origin.id.clone(),
        destination: destination.id.clone(),
    })
}

/// Path from the flow's source to its destination through every chain
/// function, each entered on its `in_port` and left on its `out_port`.
pub fn compute_forward_path(
    chain: &ServiceChain,
    flow: &FlowSpec,
    topo: &Topology,
    catalog: &BTreeMap<String, ServiceFunction>,
) -> Result<HopPath, PathError> {
    let visits = chain
        .sf_sequence
        .iter()
        .map(|id| {
            let sf = catalog
                .get(id)
                .ok_or_else(|| LookupError::UnknownSf(id.clone()))?;
            if !sf.available {
                return Err(PathError::UnavailableSf(id.clone()));
            }
            Ok(Visit {
                sf,
                enter: sf.in_port,
                exit: sf.out_port,
            })
        })
        .collect::<Result<Vec<_>, PathError>>()?;
    let origin = endpoint(topo, flow.tuple.src_ip)?;
    let destination = endpoint(topo, flow.tuple.dst_ip)?;
    assemble(Direction::Forward, chain.sfc_id, topo, origin, &visits, destination)
}

/// Path for the reply traffic of `flow` (destination back to source) through
/// only the symmetry-requiring functions, in reverse order. Each is entered on
/// its `out_port` and left on its `in_port`.
pub fn compute_reverse_path(
    chain: &ServiceChain,
    flow: &FlowSpec,
    topo: &Topology,
    catalog: &BTreeMap<String, ServiceFunction>,
) -> Result<HopPath, PathError> {
    let sequence = compute_reverse_sf_sequence(chain, catalog)?;
    let visits: Vec<Visit<'_>> = sequence
        .iter()
        .map(|id| {
            let sf = &catalog[id];
            Visit {
                sf,
                enter: sf.out_port,
                exit: sf.in_port,
            }
        })
        .collect();
    let origin = endpoint(topo, flow.tuple.dst_ip)?;
    let destination = endpoint(topo, flow.tuple.src_ip)?;
    assemble(Direction::Reverse, chain.sfc_id, topo, origin, &visits, destination)
}
