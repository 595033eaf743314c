// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::net::IpAddr;

use rand::seq::SliceRandom;
use rand::Rng;
use sfc_sym_core::model::{
    Endpoint, FiveTuple, FlowSpec, Forwarder, Link, MacAddress, PortRef, Protocol, Repository,
    ServiceChain, ServiceFunction, Topology,
};

/// Random connected topology with `n_sfs` functions, a client and a server,
/// one chain over a random ordering of all functions, and one UDP flow.
pub fn random_repository(rng: &mut impl Rng, n_sffs: usize, n_sfs: usize) -> Repository {
    let ids: Vec<String> = (0..n_sffs).map(|i| format!("s{i}")).collect();
    let mut next_port: BTreeMap<String, u16> = ids.iter().map(|id| (id.clone(), 1)).collect();
    let mut take = |sff: &str| {
        let p = next_port.get_mut(sff).unwrap();
        *p += 1;
        *p - 1
    };

    let mut links = Vec::new();
    let mut connect = |a: &str, b: &str, take: &mut dyn FnMut(&str) -> u16| {
        links.push(Link {
            a: PortRef::new(a, take(a)),
            b: PortRef::new(b, take(b)),
            delay_us: 10,
            capacity_bps: 0,
        });
    };
    // spanning tree, then a few chords
    for i in 1..n_sffs {
        let j = rng.gen_range(0..i);
        connect(&ids[i], &ids[j], &mut take);
    }
    for _ in 0..rng.gen_range(0..=n_sffs) {
        let a = rng.gen_range(0..n_sffs);
        let b = rng.gen_range(0..n_sffs);
        if a != b {
            connect(&ids[a], &ids[b], &mut take);
        }
    }

    let mut sfs = BTreeMap::new();
    for k in 0..n_sfs {
        let sff = ids.choose(rng).unwrap().clone();
        let in_port = take(&sff);
        let out_port = take(&sff);
        let id = format!("F{k}");
        sfs.insert(
            id.clone(),
            ServiceFunction {
                id,
                mac: MacAddress([2, 0, 0, 0, 1, k as u8]),
                sff_id: sff,
                in_port,
                out_port,
                requires_symmetry: rng.gen_bool(0.5),
                processing_delay_us: 0,
                available: true,
                role: None,
            },
        );
    }

    let client_ip: IpAddr = [10, 0, 0, 1].into();
    let server_ip: IpAddr = [10, 0, 0, 2].into();
    let mut endpoints = Vec::new();
    for (n, (id, ip)) in [("client", client_ip), ("server", server_ip)].into_iter().enumerate() {
        let sff = ids.choose(rng).unwrap().clone();
        let port = take(&sff);
        endpoints.push(Endpoint {
            id: id.into(),
            mac: MacAddress([0, 0, 0, 0, 0, n as u8 + 1]),
            sff,
            port,
            ip: Some(ip),
        });
    }

    let sffs = ids
        .iter()
        .map(|id| Forwarder {
            id: id.clone(),
            ports: (1..next_port[id]).collect(),
        })
        .collect();

    let mut order: Vec<String> = sfs.keys().cloned().collect();
    order.shuffle(rng);
    let flow = FlowSpec {
        tuple: FiveTuple {
            src_ip: client_ip,
            dst_ip: server_ip,
            src_port: 40000,
            dst_port: 5201,
            protocol: Protocol::Udp,
        },
        sfc_id: 1,
    };
    let repo = Repository {
        topology: Topology {
            sffs,
            endpoints,
            links,
        },
        sfs,
        chains: BTreeMap::from([(1, ServiceChain::new(1, order))]),
        flows: vec![flow],
    };
    assert!(repo.validate().is_empty(), "{:?}", repo.validate());
    repo
}
