// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

//! Acceptance checks. Each criterion writes one `PASS` or `FAIL` line to
//! stderr, bypassing the test harness's output capture.

use std::collections::BTreeMap;
use std::io::Write;
use std::net::IpAddr;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sfc_sym_cli::experiment::{ExperimentConfig, Outcome};
use sfc_sym_cli::{compute_confidence_interval, run_experiment};
use sfc_sym_core::intent::{intent_pipeline, parse_blueprints, OperationsLayer, ResourcePolicy};
use sfc_sym_core::model::{FiveTuple, MacAddress, Protocol, ServiceChain, ServiceFunction};
use sfc_sym_core::path::{compute_reverse_sf_sequence, Action, FlowRule, RuleMatch};
use sfc_sym_core::scenario::{evaluation_repository, BLUEPRINT_CATALOG, SAMPLE_INTENT};
use sfc_sym_core::sim::{
    measure_rtt, probe_flow, run_simulation, transfer_flow, FlowTable, Scenario, SimConfig, Simulator,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if $cond {
        } else {
            return Err(format!($($msg)+));
        }
    };
}

const MS: u64 = 1_000_000;

/// Shipped scenario settings without jitter.
fn deterministic() -> SimConfig {
    SimConfig {
        sf_processing_delay_ns: Some(MS),
        attachment_delay_ns: 100_000,
        jitter_ns: 0,
        ..SimConfig::default()
    }
}

// 1 -----------------------------------------------------------------------------

fn reverse_oracle(chain: &[String], flags: &BTreeMap<String, bool>) -> Vec<String> {
    let mut kept: Vec<String> = chain.iter().filter(|id| flags[*id]).cloned().collect();
    kept.reverse();
    kept
}

fn reverse_path_oracle() -> Check {
    let started = Instant::now();
    let mut cases = 0;
    for seed in [7u64, 1009, 65_537] {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..1000 {
            let len = rng.gen_range(0..=8);
            let mut catalog = BTreeMap::new();
            let mut flags = BTreeMap::new();
            let mut ids = Vec::new();
            for i in 0..len {
                let id = format!("F{i}");
                let sym = rng.gen_bool(0.5);
                catalog.insert(
                    id.clone(),
                    ServiceFunction {
                        id: id.clone(),
                        mac: MacAddress([2, 0, 0, 0, 0, i as u8]),
                        sff_id: "s".into(),
                        in_port: 1,
                        out_port: 2,
                        requires_symmetry: sym,
                        processing_delay_us: 0,
                        available: true,
                        role: None,
                    },
                );
                flags.insert(id.clone(), sym);
                ids.push(id);
            }
            let chain = ServiceChain::new(1, ids.clone());
            let got = compute_reverse_sf_sequence(&chain, &catalog).map_err(|e| e.to_string())?;
            ensure!(got == reverse_oracle(&ids, &flags), "chain {ids:?}: {got:?}");
            cases += 1;
        }
    }
    let secs = started.elapsed().as_secs_f64();
    ensure!(secs < 1.0, "took {secs:.3} s");
    Ok(format!("{cases} chains agree, {secs:.3} s"))
}

// 2 -----------------------------------------------------------------------------

/// Function visits per packet, read back from an emitted trace CSV.
fn visits_from_csv(csv: &str) -> (BTreeMap<u64, Vec<String>>, BTreeMap<u64, String>) {
    let mut visits: BTreeMap<u64, Vec<String>> = BTreeMap::new();
    let mut delivered = BTreeMap::new();
    for line in csv.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let seq: u64 = f[3].parse().unwrap();
        match f[1] {
            "sf_enter" => visits.entry(seq).or_default().push(f[2].to_string()),
            "deliver" => {
                delivered.insert(seq, f[2].to_string());
            }
            _ => {}
        }
    }
    (visits, delivered)
}

fn scenario_fidelity() -> Check {
    let cfg = ExperimentConfig {
        repetitions: 1,
        trace: true,
        sim: SimConfig {
            rtt_probes: 10,
            ..deterministic()
        },
        ..ExperimentConfig::default()
    };
    let report = run_experiment(&cfg).map_err(|e| e.to_string())?;
    let expect = [
        (Scenario::Partial, vec!["SF3"]),
        (Scenario::Full, vec!["SF3", "SF1", "SF2"]),
    ];
    let mut checked = 0;
    for (scenario, reply) in expect {
        let traces = &report.traces[&scenario];
        let (visits, delivered) = visits_from_csv(&traces.ping.to_csv());
        for (seq, node) in &delivered {
            let got: Vec<&str> = visits.get(seq).map(|v| v.iter().map(String::as_str).collect()).unwrap_or_default();
            let want = if node == "server" { vec!["SF2", "SF1", "SF3"] } else { reply.clone() };
            ensure!(got == want, "{scenario} packet {seq} to {node}: {got:?}");
            checked += 1;
        }
        let (visits, delivered) = visits_from_csv(&traces.transfer.to_csv());
        for seq in delivered.keys() {
            let got: Vec<&str> = visits.get(seq).map(|v| v.iter().map(String::as_str).collect()).unwrap_or_default();
            ensure!(got == reply, "{scenario} transfer packet {seq}: {got:?}");
            checked += 1;
        }
    }
    ensure!(checked > 20, "only {checked} packets traced");
    Ok(format!("{checked} traced packets: forward SF2->SF1->SF3, partial reply SF3, full reply SF3->SF1->SF2"))
}

// 3 -----------------------------------------------------------------------------

fn rtt_ordering_and_delta() -> Check {
    let cfg = ExperimentConfig {
        repetitions: 20,
        sim: SimConfig {
            sf_processing_delay_ns: Some(MS),
            traffic: sfc_sym_core::sim::TrafficConfig {
                total_bytes: 1_000_000,
                ..Default::default()
            },
            ..ExperimentConfig::default().sim
        },
        ..ExperimentConfig::default()
    };
    ensure!(cfg.sim.jitter_ns > 0, "experiment should use jitter");
    let report = run_experiment(&cfg).map_err(|e| e.to_string())?;
    let rtt = report.orderings.iter().find(|o| o.metric == "rtt_ns").ok_or("no rtt ordering")?;
    ensure!(rtt.repetitions_confirmed == 20, "only {}/20 repetitions", rtt.repetitions_confirmed);

    // hand count: each skipped function costs its processing delay plus the
    // forwarder-to-function and function-to-forwarder legs
    let repo = evaluation_repository();
    let cfg = deterministic();
    let skipped: Vec<_> = repo.chain(1).unwrap().sf_sequence.iter().filter(|id| !repo.sfs[*id].requires_symmetry).collect();
    ensure!(skipped.len() == 2, "expected two skipped functions, got {skipped:?}");
    let oracle = skipped.len() as u64 * (MS + 2 * cfg.attachment_delay_ns);
    let partial = measure_rtt(&repo, &cfg, Scenario::Partial, 50).map_err(|e| e.to_string())?;
    let full = measure_rtt(&repo, &cfg, Scenario::Full, 50).map_err(|e| e.to_string())?;
    for (p, f) in partial.iter().zip(&full) {
        ensure!(f - p == oracle, "delta {} ns, oracle {oracle} ns", f - p);
    }
    Ok(format!("20/20 repetitions partial < full; deterministic delta {oracle} ns exact"))
}

// 4 -----------------------------------------------------------------------------

fn transfer_ordering() -> Check {
    let repo = evaluation_repository();
    let mut detail = Vec::new();
    for jitter in [0, 10_000] {
        let cfg = SimConfig {
            jitter_ns: jitter,
            rng_seed: 5,
            ..deterministic()
        };
        ensure!(cfg.traffic.total_bytes == 10_000_000 && cfg.traffic.payload_size == 1024, "wrong traffic");
        let p = run_simulation(&repo, &cfg, Scenario::Partial).map_err(|e| e.to_string())?;
        let f = run_simulation(&repo, &cfg, Scenario::Full).map_err(|e| e.to_string())?;
        ensure!(p.delivered_bytes() >= 10_000_000 && p.delivered_bytes() == f.delivered_bytes(), "bytes lost");
        ensure!(p.completion_ns < f.completion_ns, "completion {} vs {}", p.completion_ns, f.completion_ns);
        let (tp, tf) = (p.mean_throughput_bps(), f.mean_throughput_bps());
        ensure!(tp > tf, "throughput {tp} vs {tf}");
        detail.push(format!("jitter {jitter} ns: {} < {} ns", p.completion_ns, f.completion_ns));
    }
    Ok(detail.join("; "))
}

// 5 -----------------------------------------------------------------------------

fn load_reduction() -> Check {
    let repo = evaluation_repository();
    let cfg = deterministic();
    let p = run_simulation(&repo, &cfg, Scenario::Partial).map_err(|e| e.to_string())?;
    let f = run_simulation(&repo, &cfg, Scenario::Full).map_err(|e| e.to_string())?;
    let c = &p.sf_packet_counts;
    ensure!(c["SF1"] == 0 && c["SF2"] == 0, "partial counts {c:?}");
    ensure!(c["SF3"] == p.packets.delivered, "SF3 {} vs delivered {}", c["SF3"], p.packets.delivered);
    let (lp, lf): (u64, u64) = (c.values().sum(), f.sf_packet_counts.values().sum());
    ensure!(lp < lf, "total load {lp} vs {lf}");
    Ok(format!("partial SF1=0 SF2=0 SF3={}; total {lp} < {lf}", c["SF3"]))
}

// 6 -----------------------------------------------------------------------------

fn mac_restore() -> Check {
    let base = evaluation_repository();
    let cfg = SimConfig {
        jitter_ns: 10_000,
        rng_seed: 3,
        ..deterministic()
    };
    let mut delivered = 0;
    for scenario in Scenario::BOTH {
        let repo = scenario.apply(&base);
        let transfer = Simulator::new(&repo, &cfg, 1)
            .and_then(|s| s.run_transfer(&transfer_flow(&repo)?))
            .map_err(|e| e.to_string())?;
        let ping = Simulator::new(&repo, &cfg, 2)
            .and_then(|s| s.run_ping(&probe_flow(&repo)?, 100))
            .map_err(|e| e.to_string())?;
        for c in [&transfer.counters, &ping.counters] {
            ensure!(c.delivered > 0 && c.delivered == c.injected, "{scenario}: {c:?}");
            ensure!(c.mac_mismatches == 0, "{scenario}: {} packets with a foreign MAC", c.mac_mismatches);
            delivered += c.delivered;
        }
    }
    Ok(format!("{delivered} deliveries, all to the endpoint's own MAC"))
}

// 7 -----------------------------------------------------------------------------

fn scan_oracle<'a>(rules: &'a [FlowRule], port: u16, mac: MacAddress, h: &FiveTuple) -> Option<&'a FlowRule> {
    let specificity = |m: &RuleMatch| {
        [m.in_port.is_some(), m.eth_dst.is_some(), m.src_ip.is_some(), m.dst_ip.is_some(),
         m.src_port.is_some(), m.dst_port.is_some(), m.protocol.is_some()]
            .into_iter()
            .filter(|b| *b)
            .count()
    };
    rules
        .iter()
        .filter(|r| {
            let m = &r.matcher;
            m.in_port.is_none_or(|p| p == port)
                && m.eth_dst.is_none_or(|x| x == mac)
                && m.src_ip.is_none_or(|x| x == h.src_ip)
                && m.dst_ip.is_none_or(|x| x == h.dst_ip)
                && m.src_port.is_none_or(|x| x == h.src_port)
                && m.dst_port.is_none_or(|x| x == h.dst_port)
                && m.protocol.is_none_or(|x| x == h.protocol)
        })
        // max_by_key keeps the last maximum, so scan in reverse to keep the earliest
        .rev()
        .max_by_key(|r| (r.priority, specificity(&r.matcher)))
}

fn tuple(rng: &mut ChaCha8Rng) -> FiveTuple {
    let mut ip = || -> IpAddr { [10, 0, 0, rng.gen_range(1..=3)].into() };
    let (src_ip, dst_ip) = (ip(), ip());
    FiveTuple {
        src_ip,
        dst_ip,
        src_port: rng.gen_range(1..=3),
        dst_port: rng.gen_range(1..=3),
        protocol: [Protocol::Udp, Protocol::Tcp, Protocol::Icmp][rng.gen_range(0..3)],
    }
}

fn flow_table_oracle() -> Check {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut hits = 0;
    for _ in 0..10_000 {
        let mut table = FlowTable::new();
        let mut scan: Vec<FlowRule> = Vec::new();
        for i in 0..rng.gen_range(0..12u16) {
            let t = tuple(&mut rng);
            let mask: [bool; 7] = std::array::from_fn(|_| rng.gen_bool(0.5));
            let rule = FlowRule {
                sff_id: "s".into(),
                priority: rng.gen_range(1..=3),
                matcher: RuleMatch {
                    in_port: mask[0].then(|| (i % 3) + 1),
                    eth_dst: mask[1].then_some(MacAddress([0, 0, 0, 0, 0, 1 + (i % 2) as u8])),
                    src_ip: mask[2].then_some(t.src_ip),
                    dst_ip: mask[3].then_some(t.dst_ip),
                    src_port: mask[4].then_some(t.src_port),
                    dst_port: mask[5].then_some(t.dst_port),
                    protocol: mask[6].then_some(t.protocol),
                },
                actions: vec![Action::Output(100 + i)],
            };
            match scan.iter_mut().find(|r| r.priority == rule.priority && r.matcher == rule.matcher) {
                Some(r) => r.actions = rule.actions.clone(),
                None => scan.push(rule.clone()),
            }
            table.install(rule).map_err(|e| e.to_string())?;
        }
        let h = tuple(&mut rng);
        let port = rng.gen_range(1..=3);
        let mac = MacAddress([0, 0, 0, 0, 0, rng.gen_range(1..=2)]);
        let got = table.lookup(port, mac, &h);
        let want = scan_oracle(&scan, port, mac, &h);
        ensure!(got == want, "disagreement: table {got:?}, oracle {want:?}");
        hits += usize::from(got.is_some());
    }
    let secs = started.elapsed().as_secs_f64();
    ensure!(secs < 5.0, "took {secs:.2} s");
    ensure!(hits > 1000, "only {hits} pairs matched any rule");
    Ok(format!("10000/10000 agree ({hits} with a match), {secs:.2} s"))
}

// 8 -----------------------------------------------------------------------------

fn intent_pipeline_check() -> Check {
    let repo = evaluation_repository();
    let catalog = parse_blueprints(BLUEPRINT_CATALOG).map_err(|e| e.to_string())?;
    let cmd = intent_pipeline(SAMPLE_INTENT, &catalog, &repo, &ResourcePolicy::default(), &[])
        .map_err(|e| e.to_string())?;
    ensure!(cmd.chain.sf_sequence == ["SF2", "SF1", "SF3"], "chain {:?}", cmd.chain.sf_sequence);
    let sf3 = cmd.sf_attributes.iter().find(|s| s.id == "SF3").ok_or("SF3 missing")?;
    ensure!(sf3.requires_symmetry, "SF3 not symmetric");
    let ops = OperationsLayer::new();
    let first = ops.execute(&repo, &cmd).map_err(|e| e.to_string())?;
    let calls = ops.audit.len();
    let second = ops.execute(&first.repository, &cmd).map_err(|e| e.to_string())?;
    ensure!(first.registered && !second.registered, "second execution registered again");
    ensure!(second.repository == first.repository && ops.audit.len() == calls, "second execution changed state");
    Ok(format!("chain sfc={} [SF2,SF1,SF3], SF3 symmetric, re-execution no-op", cmd.chain.sfc_id))
}

// 9 -----------------------------------------------------------------------------

fn closed_form(data: &[f64], t: f64) -> (f64, f64) {
    let n = data.len() as f64;
    let mean = data.iter().sum::<f64>() / n;
    let s = (data.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0)).sqrt();
    (mean - t * s / n.sqrt(), mean + t * s / n.sqrt())
}

fn statistics() -> Check {
    let one_to_ten: Vec<f64> = (1..=10).map(f64::from).collect();
    // two-sided quantiles from printed t tables
    let cases: [(&[f64], f64, f64); 3] = [
        (&one_to_ten, 0.95, 2.2621571628540993),
        (&[2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0], 0.95, 2.3646242515927844),
        (&[10.0, 12.0, 9.0, 11.0, 13.0], 0.99, 4.604094871415897),
    ];
    let rel = |a: f64, b: f64| ((a - b) / b).abs();
    for (data, level, t) in cases {
        let (lo, hi) = compute_confidence_interval(data, level).map_err(|e| e.to_string())?;
        let (olo, ohi) = closed_form(data, t);
        ensure!(rel(lo, olo) < 1e-9 && rel(hi, ohi) < 1e-9, "{data:?}: ({lo}, {hi}) vs ({olo}, {ohi})");
    }
    for c in [0.0, 1.5, 7.3e6] {
        ensure!(compute_confidence_interval(&[c; 12], 0.95) == Ok((c, c)), "constant {c}");
    }
    ensure!(compute_confidence_interval(&[4.0], 0.95) == Ok((4.0, 4.0)), "single sample");
    ensure!(compute_confidence_interval(&[], 0.95).is_err(), "empty accepted");
    Ok("3 datasets within 1e-9, degenerate cases exact".into())
}

// 10 ----------------------------------------------------------------------------

fn run_cli(out: &Path, seed: &str) -> Result<f64, String> {
    let started = Instant::now();
    let status = Command::new(env!("CARGO_BIN_EXE_sfc-sym"))
        .args(["run", "--scenario", "both", "--seed", seed, "--out"])
        .arg(out)
        .stderr(std::process::Stdio::null())
        .status()
        .map_err(|e| e.to_string())?;
    ensure!(status.code() == Some(0), "exit status {status}");
    Ok(started.elapsed().as_secs_f64())
}

fn read_dir(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().to_string_lossy().into_owned(), std::fs::read(e.path()).unwrap())
        })
        .collect()
}

fn determinism() -> Check {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let (a, b) = (tmp.path().join("a"), tmp.path().join("b"));
    let secs = run_cli(&a, "42")?;
    run_cli(&b, "42")?;
    let (fa, fb) = (read_dir(&a), read_dir(&b));
    ensure!(fa.len() >= 3, "only {} report files", fa.len());
    ensure!(fa == fb, "report files differ");
    ensure!(secs < 60.0, "default run took {secs:.1} s");
    Ok(format!("{} files byte-identical; default run {secs:.1} s", fa.len()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("reverse-path oracle equivalence", reverse_path_oracle),
        ("scenario traversal fidelity", scenario_fidelity),
        ("RTT ordering and analytic delta", rtt_ordering_and_delta),
        ("transfer and throughput ordering", transfer_ordering),
        ("load reduction", load_reduction),
        ("MAC restore", mac_restore),
        ("flow-table oracle", flow_table_oracle),
        ("intent pipeline", intent_pipeline_check),
        ("statistics", statistics),
        ("determinism", determinism),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr().lock();
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => writeln!(err, "PASS {:>2} {name}: {detail}", i + 1).unwrap(),
            Err(why) => {
                writeln!(err, "FAIL {:>2} {name}: {why}", i + 1).unwrap();
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn zero_delay_orderings_are_tied() {
    let mut repo = evaluation_repository();
    for l in &mut repo.topology.links {
        l.delay_us = 0;
        l.capacity_bps = 0;
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("repo.json");
    std::fs::write(&path, repo.to_json_string()).unwrap();
    let cfg = ExperimentConfig {
        repo_path: Some(path),
        repetitions: 3,
        sim: SimConfig {
            sf_processing_delay_ns: Some(0),
            attachment_delay_ns: 0,
            jitter_ns: 0,
            rtt_probes: 5,
            traffic: sfc_sym_core::sim::TrafficConfig {
                total_bytes: 100 * 1024,
                ..Default::default()
            },
            ..SimConfig::default()
        },
        ..ExperimentConfig::default()
    };
    let report = run_experiment(&cfg).unwrap();
    assert_eq!(report.orderings.len(), 3);
    assert!(report.orderings.iter().all(|o| o.outcome == Outcome::Tied));
    assert!(report.deltas.iter().all(|d| d.partial_minus_full == 0.0));
}
