// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tracing::trace;

use super::{
    classify, EventQueue, FlowTable, Metrics, Packet, PacketCounters, Scenario, SfServer,
    SimConfig, SimError, SimTime, Trace, TraceKind,
};
use crate::model::{Direction, FiveTuple, FlowSpec, PortNo, PortRef, Protocol, Repository};
use crate::path::{handle_packet_in, Action, PacketIn};

const MAX_SFF_HOPS: u32 = 64;

/// Where a forwarder port leads.
#[derive(Clone, Debug)]
enum Attachment {
    Endpoint(usize),
    /// Port wired to the function's forward-entry interface.
    SfIn(String),
    /// Port wired to the function's forward-exit interface.
    SfOut(String),
    Link {
        far: PortRef,
        delay_ns: u64,
        capacity_bps: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Toward {
    AwayFromSff,
    IntoSff,
}

enum Event {
    NextDatagram,
    Inject { endpoint: usize, pkt: Packet },
    ArriveSff { sff: String, port: PortNo, pkt: Packet, resumed: bool },
    ArriveSf { sf: String, exit: PortNo, pkt: Packet },
    LeaveSf { sf: String, exit: PortNo, pkt: Packet },
    ArriveEndpoint { endpoint: usize, pkt: Packet },
    Install { sff: String, port: PortNo, pkt: Packet, rules: Vec<crate::path::FlowRule> },
}

/// What the traffic source does.
#[derive(Clone, Debug)]
enum Workload {
    Transfer {
        header: FiveTuple,
        source: usize,
        sink: usize,
        sent_bytes: u64,
        deliveries: Vec<(SimTime, u64)>,
    },
    Ping {
        request: FiveTuple,
        client: usize,
        server: usize,
        remaining: u32,
        samples: Vec<u64>,
    },
}

/// Per-function transit counts split by traffic direction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SfCounts {
    pub forward: u64,
    pub reverse: u64,
}

/// Raw result of one simulator instance.
#[derive(Clone, Debug, Default)]
pub struct RunOutcome {
    pub deliveries: Vec<(SimTime, u64)>,
    pub rtt_samples_ns: Vec<u64>,
    pub counters: PacketCounters,
    pub sf_counts: BTreeMap<String, SfCounts>,
    pub trace: Trace,
}

/// A single data-plane instance on one timeline. Flow tables start empty;
/// every forwarder punts misses to the controller.
pub struct Simulator<'r> {
    repo: &'r Repository,
    cfg: &'r SimConfig,
    attachments: HashMap<PortRef, Attachment>,
    tables: BTreeMap<String, FlowTable>,
    servers: BTreeMap<String, SfServer>,
    channel_busy: HashMap<(PortRef, Toward), SimTime>,
    queue: EventQueue<Event>,
    rng: ChaCha8Rng,
    next_seq: u64,
    out: RunOutcome,
}

impl<'r> Simulator<'r> {
    /// `repo` must already reflect the scenario's symmetry flags.
    pub fn new(repo: &'r Repository, cfg: &'r SimConfig, rng_stream: u64) -> Result<Self, SimError> {
        cfg.check().map_err(SimError::Config)?;
        let violations = repo.validate();
        if !violations.is_empty() {
            return Err(SimError::InvalidRepository(violations));
        }
        let mut attachments = HashMap::new();
        for (i, ep) in repo.topology.endpoints.iter().enumerate() {
            attachments.insert(ep.attachment(), Attachment::Endpoint(i));
        }
        for link in &repo.topology.links {
            for (near, far) in [(&link.a, &link.b), (&link.b, &link.a)] {
                attachments.insert(
                    near.clone(),
                    Attachment::Link {
                        far: far.clone(),
                        delay_ns: link.delay_us * 1_000,
                        capacity_bps: link.capacity_bps,
                    },
                );
            }
        }
        let mut servers = BTreeMap::new();
        for sf in repo.sfs.values() {
            attachments.insert(sf.in_ref(), Attachment::SfIn(sf.id.clone()));
            attachments.insert(sf.out_ref(), Attachment::SfOut(sf.id.clone()));
            let delay = cfg
                .sf_processing_delay_ns
                .unwrap_or(sf.processing_delay_us * 1_000);
            servers.insert(sf.id.clone(), SfServer::new(sf.id.clone(), delay));
        }
        let tables = repo
            .topology
            .sffs
            .iter()
            .map(|s| (s.id.clone(), FlowTable::new()))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
        rng.set_stream(rng_stream);
        Ok(Self {
            repo,
            cfg,
            attachments,
            tables,
            servers,
            channel_busy: HashMap::new(),
            queue: EventQueue::default(),
            rng,
            next_seq: 0,
            out: RunOutcome::default(),
        })
    }

    pub fn table(&self, sff: &str) -> Option<&FlowTable> {
        self.tables.get(sff)
    }

    fn endpoint_index(&self, ip: std::net::IpAddr) -> Result<usize, SimError> {
        self.repo
            .topology
            .endpoints
            .iter()
            .position(|e| e.ip == Some(ip))
            .ok_or(SimError::UnknownEndpoint(ip))
    }

    /// Streams `cfg.traffic` for `flow` in the configured direction.
    pub fn run_transfer(mut self, flow: &FlowSpec) -> Result<RunOutcome, SimError> {
        let header = match self.cfg.traffic.direction {
            Direction::Forward => flow.tuple,
            Direction::Reverse => flow.tuple.reversed(),
        };
        let workload = Workload::Transfer {
            header,
            source: self.endpoint_index(header.src_ip)?,
            sink: self.endpoint_index(header.dst_ip)?,
            sent_bytes: 0,
            deliveries: Vec::new(),
        };
        self.queue.schedule(0, Event::NextDatagram);
        let mut workload = workload;
        self.run(&mut workload)?;
        if let Workload::Transfer { deliveries, .. } = workload {
            self.out.deliveries = deliveries;
        }
        if self.out.counters.delivered == 0 && self.out.counters.injected > 0 {
            return Err(SimError::Undeliverable(*flow));
        }
        Ok(self.out)
    }

    /// Sends `n` sequential request/reply probes on `flow` (request in the
    /// flow's forward direction) and records each round trip.
    pub fn run_ping(mut self, flow: &FlowSpec, n: u32) -> Result<RunOutcome, SimError> {
        if n == 0 {
            return Err(SimError::Config("at least one probe is required".into()));
        }
        let client = self.endpoint_index(flow.tuple.src_ip)?;
        let server = self.endpoint_index(flow.tuple.dst_ip)?;
        let mut workload = Workload::Ping {
            request: flow.tuple,
            client,
            server,
            remaining: n - 1,
            samples: Vec::new(),
        };
        let first = self.new_packet(client, flow.tuple, self.cfg.probe_size, 0);
        self.queue.schedule(0, Event::Inject { endpoint: client, pkt: first });
        self.run(&mut workload)?;
        if self.out.counters.dropped > 0 {
            return Err(SimError::Undeliverable(*flow));
        }
        if let Workload::Ping { samples, .. } = workload {
            self.out.rtt_samples_ns = samples;
        }
        Ok(self.out)
    }

    fn new_packet(&mut self, from: usize, header: FiveTuple, size: u32, now: SimTime) -> Packet {
        let eps = &self.repo.topology.endpoints;
        let src = &eps[from];
        let dst_mac = eps
            .iter()
            .find(|e| e.ip == Some(header.dst_ip))
            .map(|e| e.mac)
            .unwrap_or_default();
        let seq = self.next_seq;
        self.next_seq += 1;
        Packet {
            eth_src: src.mac,
            eth_dst: dst_mac,
            header,
            payload_size: size,
            seq,
            created_at: now,
            hops: 0,
        }
    }

    fn record(&mut self, now: SimTime, kind: TraceKind, node: &str, seq: u64) {
        if self.cfg.record_trace {
            self.out.trace.push(now, kind, node, seq);
        }
    }

    /// Occupies a one-way channel and returns the arrival time at its far end.
    fn transmit(&mut self, key: (PortRef, Toward), now: SimTime, bytes: u32, delay_ns: u64, capacity_bps: u64) -> SimTime {
        let serialization = if capacity_bps == 0 {
            0
        } else {
            (u128::from(bytes) * 8 * 1_000_000_000).div_ceil(u128::from(capacity_bps)) as u64
        };
        let busy = self.channel_busy.entry(key).or_insert(0);
        let start = now.max(*busy);
        *busy = start + serialization;
        start + serialization + delay_ns
    }

    fn drop_packet(&mut self, now: SimTime, node: &str, pkt: &Packet) {
        trace!(node, seq = pkt.seq, "drop");
        self.record(now, TraceKind::Drop, node, pkt.seq);
        self.out.counters.dropped += 1;
    }

    fn run(&mut self, workload: &mut Workload) -> Result<(), SimError> {
        while let Some((now, event)) = self.queue.pop() {
            match event {
                Event::NextDatagram => self.next_datagram(now, workload),
                Event::Inject { endpoint, pkt } => self.inject(now, endpoint, pkt),
                Event::ArriveSff { sff, port, pkt, resumed } => {
                    self.at_sff(now, &sff, port, pkt, resumed)?
                }
                Event::ArriveSf { sf, exit, pkt } => self.at_sf(now, sf, exit, pkt),
                Event::LeaveSf { sf, exit, pkt } => {
                    self.record(now, TraceKind::SfLeave, &sf, pkt.seq);
                    let sff = self.repo.sfs[&sf].sff_id.clone();
                    let port = PortRef::new(sff.clone(), exit);
                    let at = self.transmit(
                        (port, Toward::IntoSff),
                        now,
                        pkt.payload_size,
                        self.cfg.attachment_delay_ns,
                        self.cfg.attachment_capacity_bps,
                    );
                    self.queue.schedule(at, Event::ArriveSff { sff, port: exit, pkt, resumed: false });
                }
                Event::ArriveEndpoint { endpoint, pkt } => self.at_endpoint(now, endpoint, pkt, workload),
                Event::Install { sff, port, pkt, rules } => {
                    for rule in rules {
                        let table = self
                            .tables
                            .get_mut(&rule.sff_id)
                            .ok_or_else(|| SimError::UnknownForwarder(rule.sff_id.clone()))?;
                        table.install(rule).map_err(SimError::Rule)?;
                    }
                    self.record(now, TraceKind::RulesInstalled, &sff, pkt.seq);
                    self.at_sff(now, &sff, port, pkt, true)?;
                }
            }
        }
        Ok(())
    }

    fn next_datagram(&mut self, now: SimTime, workload: &mut Workload) {
        let Workload::Transfer { header, source, sent_bytes, .. } = workload else {
            return;
        };
        let traffic = &self.cfg.traffic;
        let left = traffic.total_bytes - *sent_bytes;
        if left == 0 {
            return;
        }
        let size = left.min(u64::from(traffic.payload_size)) as u32;
        let (header, source) = (*header, *source);
        *sent_bytes += u64::from(size);
        let pkt = self.new_packet(source, header, size, now);
        self.inject(now, source, pkt);
        if *sent_bytes < traffic.total_bytes {
            let next = (u128::from(*sent_bytes) * 8 * 1_000_000_000 / u128::from(traffic.offered_rate_bps)) as u64;
            self.queue.schedule(next, Event::NextDatagram);
        }
    }

    fn inject(&mut self, now: SimTime, endpoint: usize, pkt: Packet) {
        let ep = &self.repo.topology.endpoints[endpoint];
        let (sff, port) = (ep.sff.clone(), ep.port);
        self.record(now, TraceKind::Inject, &ep.id.clone(), pkt.seq);
        self.out.counters.injected += 1;
        let at = self.transmit(
            (PortRef::new(sff.clone(), port), Toward::IntoSff),
            now,
            pkt.payload_size,
            self.cfg.attachment_delay_ns,
            self.cfg.attachment_capacity_bps,
        );
        self.queue.schedule(at, Event::ArriveSff { sff, port, pkt, resumed: false });
    }

    fn at_sff(&mut self, now: SimTime, sff: &str, port: PortNo, mut pkt: Packet, resumed: bool) -> Result<(), SimError> {
        self.record(now, TraceKind::SffReceive, sff, pkt.seq);
        let table = self
            .tables
            .get(sff)
            .ok_or_else(|| SimError::UnknownForwarder(sff.to_string()))?;
        let Some(rule) = table.lookup(port, pkt.eth_dst, &pkt.header) else {
            if resumed {
                // controller answered but did not cover this port
                self.drop_packet(now, sff, &pkt);
                return Ok(());
            }
            self.record(now, TraceKind::PacketIn, sff, pkt.seq);
            self.out.counters.packet_ins += 1;
            let event = PacketIn {
                sff_id: sff.to_string(),
                in_port: port,
                header: pkt.header,
                eth_dst: pkt.eth_dst,
            };
            let rules = handle_packet_in(self.repo, &event)?;
            if rules.is_empty() {
                self.drop_packet(now, sff, &pkt);
            } else {
                self.queue.schedule(
                    now + self.cfg.packet_in_latency_ns,
                    Event::Install {
                        sff: sff.to_string(),
                        port,
                        pkt,
                        rules,
                    },
                );
            }
            return Ok(());
        };
        let actions = rule.actions.clone();
        pkt.hops += 1;
        if pkt.hops > MAX_SFF_HOPS {
            self.drop_packet(now, sff, &pkt);
            return Ok(());
        }
        for action in actions {
            match action {
                Action::SetEthDst(mac) => pkt.eth_dst = mac,
                Action::Output(out) => {
                    self.egress(now, sff, out, pkt);
                    break;
                }
            }
        }
        Ok(())
    }

    fn egress(&mut self, now: SimTime, sff: &str, port: PortNo, pkt: Packet) {
        let here = PortRef::new(sff, port);
        let Some(attachment) = self.attachments.get(&here).cloned() else {
            self.drop_packet(now, sff, &pkt);
            return;
        };
        let (attach_delay, attach_cap) = (self.cfg.attachment_delay_ns, self.cfg.attachment_capacity_bps);
        let key = (here, Toward::AwayFromSff);
        let size = pkt.payload_size;
        match attachment {
            Attachment::Endpoint(endpoint) => {
                let at = self.transmit(key, now, size, attach_delay, attach_cap);
                self.queue.schedule(at, Event::ArriveEndpoint { endpoint, pkt });
            }
            Attachment::SfIn(sf) => {
                let at = self.transmit(key, now, size, attach_delay, attach_cap);
                let exit = self.repo.sfs[&sf].out_port;
                self.queue.schedule(at, Event::ArriveSf { sf, exit, pkt });
            }
            Attachment::SfOut(sf) => {
                let at = self.transmit(key, now, size, attach_delay, attach_cap);
                let exit = self.repo.sfs[&sf].in_port;
                self.queue.schedule(at, Event::ArriveSf { sf, exit, pkt });
            }
            Attachment::Link { far, delay_ns, capacity_bps } => {
                let at = self.transmit(key, now, size, delay_ns, capacity_bps);
                self.queue.schedule(
                    at,
                    Event::ArriveSff {
                        sff: far.sff,
                        port: far.port,
                        pkt,
                        resumed: false,
                    },
                );
            }
        }
    }

    fn at_sf(&mut self, now: SimTime, sf: String, exit: PortNo, pkt: Packet) {
        self.record(now, TraceKind::SfEnter, &sf, pkt.seq);
        let counts = self.out.sf_counts.entry(sf.clone()).or_default();
        match classify(&pkt, self.repo) {
            Some((_, Direction::Reverse)) => counts.reverse += 1,
            _ => counts.forward += 1,
        }
        let jitter = if self.cfg.jitter_ns > 0 {
            self.rng.gen_range(0..=self.cfg.jitter_ns)
        } else {
            0
        };
        let server = self.servers.get_mut(&sf).expect("server per function");
        let (pkt, ready_at) = server.transit(pkt, now, jitter);
        self.queue.schedule(ready_at, Event::LeaveSf { sf, exit, pkt });
    }

    fn at_endpoint(&mut self, now: SimTime, endpoint: usize, pkt: Packet, workload: &mut Workload) {
        let ep = &self.repo.topology.endpoints[endpoint];
        let ep_id = ep.id.clone();
        if pkt.eth_dst != ep.mac {
            self.out.counters.mac_mismatches += 1;
        }
        self.record(now, TraceKind::Deliver, &ep_id, pkt.seq);
        self.out.counters.delivered += 1;
        match workload {
            Workload::Transfer { sink, deliveries, .. } => {
                if *sink == endpoint {
                    deliveries.push((now, u64::from(pkt.payload_size)));
                }
            }
            Workload::Ping { request, client, server, remaining, samples } => {
                let (request, client, server) = (*request, *client, *server);
                if endpoint == server && pkt.header == request {
                    let mut reply = self.new_packet(server, request.reversed(), pkt.payload_size, now);
                    reply.created_at = pkt.created_at;
                    self.inject(now, server, reply);
                } else if endpoint == client && pkt.header == request.reversed() {
                    samples.push(now - pkt.created_at);
                    if *remaining > 0 {
                        *remaining -= 1;
                        let probe = self.new_packet(client, request, self.cfg.probe_size, now);
                        self.queue.schedule(now, Event::Inject { endpoint: client, pkt: probe });
                    }
                }
            }
        }
    }
}

/// Flow carrying the bulk transfer: the first non-ICMP registered flow.
pub fn transfer_flow(repo: &Repository) -> Result<FlowSpec, SimError> {
    repo.flows
        .iter()
        .find(|f| f.tuple.protocol != Protocol::Icmp)
        .copied()
        .ok_or(SimError::NoFlow("transfer"))
}

/// Probe flow: an ICMP flow on the transfer flow's chain, else any ICMP flow.
pub fn probe_flow(repo: &Repository) -> Result<FlowSpec, SimError> {
    let chain = transfer_flow(repo).ok().map(|f| f.sfc_id);
    let icmp = || repo.flows.iter().filter(|f| f.tuple.protocol == Protocol::Icmp);
    icmp()
        .find(|f| Some(f.sfc_id) == chain)
        .or_else(|| icmp().next())
        .copied()
        .ok_or(SimError::NoFlow("icmp probe"))
}

const TRANSFER_STREAM: u64 = 1;
const PING_STREAM: u64 = 2;

/// Round-trip samples for `n_probes` sequential probes on an otherwise idle network.
pub fn measure_rtt(repo: &Repository, cfg: &SimConfig, scenario: Scenario, n_probes: u32) -> Result<Vec<u64>, SimError> {
    let repo = scenario.apply(repo);
    let flow = probe_flow(&repo)?;
    Ok(Simulator::new(&repo, cfg, PING_STREAM)?.run_ping(&flow, n_probes)?.rtt_samples_ns)
}

/// Traces of the two phases of a run.
#[derive(Clone, Debug, Default)]
pub struct RunTraces {
    pub transfer: Trace,
    pub ping: Trace,
}

/// Bulk transfer plus RTT probes for one scenario.
pub fn run_simulation(repo: &Repository, cfg: &SimConfig, scenario: Scenario) -> Result<Metrics, SimError> {
    run_simulation_traced(repo, cfg, scenario).map(|(m, _)| m)
}

pub fn run_simulation_traced(
    repo: &Repository,
    cfg: &SimConfig,
    scenario: Scenario,
) -> Result<(Metrics, RunTraces), SimError> {
    let repo = scenario.apply(repo);
    let flow = transfer_flow(&repo)?;
    let transfer = Simulator::new(&repo, cfg, TRANSFER_STREAM)?.run_transfer(&flow)?;
    let probe = probe_flow(&repo)?;
    let ping = Simulator::new(&repo, cfg, PING_STREAM)?.run_ping(&probe, cfg.rtt_probes)?;

    let (transfer_series, throughput_series) = Metrics::bin_deliveries(&transfer.deliveries);
    let completion_ns = transfer.deliveries.iter().map(|(t, _)| *t).max().unwrap_or(0);
    let sf_packet_counts = repo
        .sfs
        .keys()
        .map(|id| {
            let c = transfer.sf_counts.get(id).copied().unwrap_or_default();
            (id.clone(), c.forward + c.reverse)
        })
        .collect();
    let metrics = Metrics {
        rtt_samples_ns: ping.rtt_samples_ns,
        transfer_bytes_per_s: transfer_series,
        throughput_bps_per_s: throughput_series,
        completion_ns,
        sf_packet_counts,
        packets: transfer.counters,
    };
    Ok((
        metrics,
        RunTraces {
            transfer: transfer.trace,
            ping: ping.trace,
        },
    ))
}
