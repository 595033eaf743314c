// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

use std::collections::{BTreeMap, VecDeque};

use super::PathError;
use crate::model::{PortNo, Topology};

/// One forwarder-to-forwarder move along a route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouteStep {
    pub from: String,
    pub egress_port: PortNo,
    pub to: String,
    pub ingress_port: PortNo,
}

/// Shortest hop-count route between two forwarders.
///
/// Among equal-length routes the one whose forwarder-id sequence is
/// lexicographically smallest wins; parallel links are broken by the lowest
/// local port. An empty route means `from == to`.
pub fn shortest_route(topo: &Topology, from: &str, to: &str) -> Result<Vec<RouteStep>, PathError> {
    let no_route = || PathError::NoRoute {
        from: from.to_string(),
        to: to.to_string(),
    };
    let adj = topo.adjacency();
    if !adj.contains_key(from) || !adj.contains_key(to) {
        return Err(no_route());
    }

    // distances to the destination
    let mut dist: BTreeMap<&str, usize> = BTreeMap::from([(to, 0)]);
    let mut queue = VecDeque::from([to]);
    while let Some(cur) = queue.pop_front() {
        let d = dist[cur];
        for a in adj.get(cur).into_iter().flatten() {
            let Some((name, _)) = adj.get_key_value(a.neighbor.as_str()) else {
                continue;
            };
            if !dist.contains_key(name) {
                dist.insert(name, d + 1);
                queue.push_back(name);
            }
        }
    }
    let Some(&route_len) = dist.get(from) else {
        return Err(no_route());
    };

    let mut steps = Vec::with_capacity(route_len);
    let mut cur = from;
    while cur != to {
        let want = dist[cur] - 1;
        // adjacency lists are sorted by (neighbor, local port)
        let next = adj[cur]
            .iter()
            .find(|a| dist.get(a.neighbor.as_str()) == Some(&want))
            .ok_or_else(no_route)?;
        steps.push(RouteStep {
            from: cur.to_string(),
            egress_port: next.local_port,
            to: next.neighbor.clone(),
            ingress_port: next.remote_port,
        });
        cur = adj.get_key_value(next.neighbor.as_str()).map(|(k, _)| *k).ok_or_else(no_route)?;
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Forwarder, Link, PortRef};

    fn topo(links: &[(&str, u16, &str, u16)], sffs: &[&str]) -> Topology {
        Topology {
            sffs: sffs
                .iter()
                .map(|id| Forwarder {
                    id: id.to_string(),
                    ports: (1..=16).collect(),
                })
                .collect(),
            endpoints: vec![],
            links: links
                .iter()
                .map(|(a, pa, b, pb)| Link {
                    a: PortRef::new(*a, *pa),
                    b: PortRef::new(*b, *pb),
                    delay_us: 1,
                    capacity_bps: 0,
                })
                .collect(),
        }
    }

    #[test]
    fn same_forwarder_is_empty_route() {
        let t = topo(&[], &["a"]);
        assert!(shortest_route(&t, "a", "a").unwrap().is_empty());
    }

    #[test]
    fn tie_break_prefers_smaller_ids() {
        // a -> {c, b} -> d, both two hops
        let t = topo(
            &[("a", 1, "c", 1), ("a", 2, "b", 1), ("c", 2, "d", 1), ("b", 2, "d", 2)],
            &["a", "b", "c", "d"],
        );
        let r = shortest_route(&t, "a", "d").unwrap();
        let via: Vec<&str> = r.iter().map(|s| s.to.as_str()).collect();
        assert_eq!(via, ["b", "d"]);
        assert_eq!(r[0].egress_port, 2);
        assert_eq!(r[1].ingress_port, 2);
    }

    #[test]
    fn parallel_links_use_lowest_port() {
        let t = topo(&[("a", 5, "b", 5), ("a", 3, "b", 7)], &["a", "b"]);
        let r = shortest_route(&t, "a", "b").unwrap();
        assert_eq!((r[0].egress_port, r[0].ingress_port), (3, 7));
    }

    #[test]
    fn disconnected_is_no_route() {
        let t = topo(&[("a", 1, "b", 1)], &["a", "b", "c"]);
        assert!(matches!(shortest_route(&t, "a", "c"), Err(PathError::NoRoute { .. })));
        assert!(matches!(shortest_route(&t, "a", "zz"), Err(PathError::NoRoute { .. })));
    }
}
