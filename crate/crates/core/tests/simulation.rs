// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use std::net::IpAddr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sfc_sym_core::model::{Direction, FiveTuple, MacAddress, Protocol, Repository};
use sfc_sym_core::path::{Action, FlowRule, RuleMatch};
use sfc_sym_core::scenario::evaluation_repository;
use sfc_sym_core::sim::{
    classify, measure_rtt, run_simulation, run_simulation_traced, FlowTable, Metrics, Packet,
    Scenario, SimConfig, SimError, Simulator, TrafficConfig, TraceKind,
};

const MS: u64 = 1_000_000;

fn deterministic_cfg() -> SimConfig {
    SimConfig {
        sf_processing_delay_ns: Some(MS),
        attachment_delay_ns: 100_000,
        traffic: TrafficConfig {
            total_bytes: 200 * 1024,
            ..TrafficConfig::default()
        },
        rtt_probes: 20,
        ..SimConfig::default()
    }
}

fn packet(header: FiveTuple) -> Packet {
    Packet {
        eth_src: MacAddress::default(),
        eth_dst: MacAddress::default(),
        header,
        payload_size: 64,
        seq: 0,
        created_at: 0,
        hops: 0,
    }
}

#[test]
fn classifier() {
    let repo = evaluation_repository();
    let udp = repo.flows[0].tuple;
    assert_eq!(classify(&packet(udp), &repo), Some((1, Direction::Forward)));
    assert_eq!(classify(&packet(udp.reversed()), &repo), Some((1, Direction::Reverse)));
    let mut other = udp;
    other.src_port = 1;
    assert_eq!(classify(&packet(other), &repo), None);
}

// -- flow table against a linear scan ----------------------------------------

fn oracle<'a>(rules: &'a [(FlowRule, usize)], port: u16, mac: MacAddress, h: &FiveTuple) -> Option<&'a FlowRule> {
    let mut best: Option<&(FlowRule, usize)> = None;
    for cand in rules {
        let m = &cand.0.matcher;
        let hit = m.in_port.is_none_or(|p| p == port)
            && m.eth_dst.is_none_or(|x| x == mac)
            && m.src_ip.is_none_or(|x| x == h.src_ip)
            && m.dst_ip.is_none_or(|x| x == h.dst_ip)
            && m.src_port.is_none_or(|x| x == h.src_port)
            && m.dst_port.is_none_or(|x| x == h.dst_port)
            && m.protocol.is_none_or(|x| x == h.protocol);
        if !hit {
            continue;
        }
        let fields = |r: &FlowRule| {
            let m = &r.matcher;
            [m.in_port.is_some(), m.eth_dst.is_some(), m.src_ip.is_some(), m.dst_ip.is_some(),
             m.src_port.is_some(), m.dst_port.is_some(), m.protocol.is_some()]
                .iter()
                .filter(|b| **b)
                .count()
        };
        best = match best {
            None => Some(cand),
            Some(b) => {
                let better = cand.0.priority > b.0.priority
                    || (cand.0.priority == b.0.priority && fields(&cand.0) > fields(&b.0));
                if better { Some(cand) } else { Some(b) }
            }
        };
    }
    best.map(|(r, _)| r)
}

fn random_tuple(rng: &mut impl Rng) -> FiveTuple {
    let ip = |rng: &mut dyn rand::RngCore| -> IpAddr { [10, 0, 0, rng.gen_range(1..=3)].into() };
    FiveTuple {
        src_ip: ip(rng),
        dst_ip: ip(rng),
        src_port: rng.gen_range(1..=3),
        dst_port: rng.gen_range(1..=3),
        protocol: [Protocol::Udp, Protocol::Tcp, Protocol::Icmp][rng.gen_range(0..3)],
    }
}

fn maybe<T>(rng: &mut impl Rng, v: T) -> Option<T> {
    rng.gen_bool(0.5).then_some(v)
}

#[test]
fn flow_table_matches_linear_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let started = std::time::Instant::now();
    let mut agree = 0;
    for _ in 0..10_000 {
        let mut table = FlowTable::new();
        let mut installed: Vec<(FlowRule, usize)> = Vec::new();
        for i in 0..rng.gen_range(0..12) {
            let t = random_tuple(&mut rng);
            let (port, last_octet) = (rng.gen_range(1..=3), rng.gen_range(1..=2));
            let rule = FlowRule {
                sff_id: "s".into(),
                priority: rng.gen_range(1..=3),
                matcher: RuleMatch {
                    in_port: maybe(&mut rng, port),
                    eth_dst: maybe(&mut rng, MacAddress([0, 0, 0, 0, 0, last_octet])),
                    src_ip: maybe(&mut rng, t.src_ip),
                    dst_ip: maybe(&mut rng, t.dst_ip),
                    src_port: maybe(&mut rng, t.src_port),
                    dst_port: maybe(&mut rng, t.dst_port),
                    protocol: maybe(&mut rng, t.protocol),
                },
                actions: vec![Action::Output(i as u16)],
            };
            // a repeated (priority, match) modifies in place; mirror that
            let same = installed
                .iter_mut()
                .find(|(r, _)| r.priority == rule.priority && r.matcher == rule.matcher);
            match same {
                Some((r, _)) => r.actions = rule.actions.clone(),
                None => installed.push((rule.clone(), i)),
            }
            table.install(rule).unwrap();
        }
        let h = random_tuple(&mut rng);
        let port = rng.gen_range(1..=3);
        let mac = MacAddress([0, 0, 0, 0, 0, rng.gen_range(1..=2)]);
        assert_eq!(table.lookup(port, mac, &h), oracle(&installed, port, mac, &h));
        agree += 1;
    }
    assert_eq!(agree, 10_000);
    assert!(started.elapsed().as_secs_f64() < 5.0);
}

// -- timing --------------------------------------------------------------------

/// Hand count on the shipped layout (client-sff1-sff2-sff3-server, SF2 on
/// sff1, SF1 on sff2, SF3 on sff3). A function visit costs two attachment
/// traversals plus processing; the inter-forwarder route is the same in both
/// directions and scenarios.
fn analytic_rtt(d_sf: u64, attach: u64, link: u64, link_ser: u64, reverse_sfs: u64) -> u64 {
    let forward = 2 * attach + 3 * (2 * attach + d_sf) + 2 * (link + link_ser);
    let reverse = 2 * attach + reverse_sfs * (2 * attach + d_sf) + 2 * (link + link_ser);
    forward + reverse
}

#[test]
fn rtt_matches_hand_count() {
    let repo = evaluation_repository();
    let cfg = deterministic_cfg();
    // 64-byte probe on a 1 Gb/s link: 512 ns serialization
    let partial = measure_rtt(&repo, &cfg, Scenario::Partial, 100).unwrap();
    let full = measure_rtt(&repo, &cfg, Scenario::Full, 100).unwrap();
    assert_eq!(partial.len(), 100);
    assert!(partial.iter().all(|&s| s == analytic_rtt(MS, 100_000, 100_000, 512, 1)));
    assert!(full.iter().all(|&s| s == analytic_rtt(MS, 100_000, 100_000, 512, 3)));
    for (p, f) in partial.iter().zip(&full) {
        // two skipped functions, each processing plus both attachment legs
        assert_eq!(f - p, 2 * (MS + 2 * 100_000));
    }
}

fn zero_delay_repo() -> Repository {
    let mut repo = evaluation_repository();
    for l in &mut repo.topology.links {
        l.delay_us = 0;
        l.capacity_bps = 0;
    }
    repo
}

#[test]
fn zero_delay_network() {
    let repo = zero_delay_repo();
    let cfg = SimConfig {
        sf_processing_delay_ns: Some(0),
        attachment_delay_ns: 0,
        rtt_probes: 10,
        ..deterministic_cfg()
    };
    let m = run_simulation(&repo, &cfg, Scenario::Full).unwrap();
    assert_eq!(m.rtt_samples_ns, vec![0; 10]);
    // last datagram leaves at (N-1) * 1024 * 8 ns at 1 Gb/s and arrives instantly
    let n = cfg.traffic.total_bytes / 1024;
    assert_eq!(m.completion_ns, (n - 1) * 1024 * 8);
}

#[test]
fn transfer_metrics_invariants() {
    let repo = evaluation_repository();
    let cfg = deterministic_cfg();
    for scenario in Scenario::BOTH {
        let m = run_simulation(&repo, &cfg, scenario).unwrap();
        assert_eq!(m.delivered_bytes(), cfg.traffic.total_bytes);
        for (t, b) in m.throughput_bps_per_s.iter().zip(&m.transfer_bytes_per_s) {
            assert_eq!(*t, 8 * b);
        }
        let c = &m.packets;
        assert_eq!(c.injected, c.delivered + c.dropped);
        assert_eq!(c.dropped, 0);
        assert_eq!(c.mac_mismatches, 0);
        assert_eq!(c.packet_ins, 1);
    }
}

#[test]
fn partial_is_faster_and_lighter() {
    let repo = evaluation_repository();
    let cfg = SimConfig {
        jitter_ns: 20_000,
        rng_seed: 5,
        ..deterministic_cfg()
    };
    let p = run_simulation(&repo, &cfg, Scenario::Partial).unwrap();
    let f = run_simulation(&repo, &cfg, Scenario::Full).unwrap();
    assert!(p.mean_rtt_ns().unwrap() < f.mean_rtt_ns().unwrap());
    assert!(p.completion_ns < f.completion_ns);
    assert!(p.mean_throughput_bps() > f.mean_throughput_bps());

    let datagrams = p.packets.delivered;
    assert_eq!(p.sf_packet_counts["SF1"], 0);
    assert_eq!(p.sf_packet_counts["SF2"], 0);
    assert_eq!(p.sf_packet_counts["SF3"], datagrams);
    assert!(f.sf_packet_counts.values().all(|&c| c == datagrams));
    let total = |m: &Metrics| m.sf_packet_counts.values().sum::<u64>();
    assert!(total(&p) < total(&f));
}

#[test]
fn traces_follow_the_paths() {
    let repo = evaluation_repository();
    let cfg = SimConfig {
        record_trace: true,
        ..deterministic_cfg()
    };
    for (scenario, reply) in [(Scenario::Partial, vec!["SF3"]), (Scenario::Full, vec!["SF3", "SF1", "SF2"])] {
        let (m, traces) = run_simulation_traced(&repo, &cfg, scenario).unwrap();
        let to_server = traces.ping.seqs_delivered_to("server");
        let to_client = traces.ping.seqs_delivered_to("client");
        assert_eq!(to_server.len(), cfg.rtt_probes as usize);
        assert_eq!(to_client.len(), cfg.rtt_probes as usize);
        for seq in to_server {
            assert_eq!(traces.ping.sf_visits(seq), ["SF2", "SF1", "SF3"]);
        }
        for seq in to_client {
            assert_eq!(traces.ping.sf_visits(seq), reply);
        }
        let delivered = traces.transfer.seqs_delivered_to("client");
        assert_eq!(delivered.len() as u64, m.packets.delivered);
        for seq in delivered {
            assert_eq!(traces.transfer.sf_visits(seq), reply);
        }
        let csv = traces.transfer.to_csv();
        assert!(csv.starts_with("time_ns,event_kind,node_id,packet_seq\n0,inject,server,0\n"));
        assert!(traces.transfer.events.iter().any(|e| e.kind == TraceKind::PacketIn));
    }
}

#[test]
fn runs_are_deterministic() {
    let repo = evaluation_repository();
    let cfg = SimConfig {
        jitter_ns: 50_000,
        rng_seed: 1234,
        ..deterministic_cfg()
    };
    let a = run_simulation(&repo, &cfg, Scenario::Partial).unwrap().to_json();
    let b = run_simulation(&repo, &cfg, Scenario::Partial).unwrap().to_json();
    assert_eq!(a, b);
    let other = SimConfig { rng_seed: 1235, ..cfg };
    assert_ne!(run_simulation(&repo, &other, Scenario::Partial).unwrap().to_json(), a);
}

#[test]
fn packet_in_latency_delays_only_the_first_packet() {
    let repo = evaluation_repository();
    let base = deterministic_cfg();
    let slow = SimConfig {
        packet_in_latency_ns: 5 * MS,
        ..base.clone()
    };
    let a = measure_rtt(&repo, &base, Scenario::Partial, 3).unwrap();
    let b = measure_rtt(&repo, &slow, Scenario::Partial, 3).unwrap();
    assert_eq!(b[0], a[0] + 5 * MS);
    assert_eq!(&b[1..], &a[1..]);
}

#[test]
fn unknown_flow_is_dropped_and_counted() {
    let repo = evaluation_repository();
    let cfg = deterministic_cfg();
    let mut stranger = repo.flows[0];
    stranger.tuple.src_port = 7;
    let out = Simulator::new(&repo, &cfg, 0).unwrap().run_transfer(&stranger);
    assert!(matches!(out, Err(SimError::Undeliverable(f)) if f == stranger));
}

#[test]
fn missing_flows_are_errors() {
    let mut repo = evaluation_repository();
    repo.flows.retain(|f| f.tuple.protocol != Protocol::Icmp);
    let err = run_simulation(&repo, &deterministic_cfg(), Scenario::Partial).unwrap_err();
    assert!(matches!(err, SimError::NoFlow(_)));
    let bad = SimConfig {
        traffic: TrafficConfig {
            offered_rate_bps: 0,
            ..TrafficConfig::default()
        },
        ..deterministic_cfg()
    };
    assert!(matches!(
        run_simulation(&evaluation_repository(), &bad, Scenario::Partial),
        Err(SimError::Config(_))
    ));
}
