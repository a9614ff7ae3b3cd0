//! Small deterministic graph generators for examples and tests.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Star on `n` nodes: node 0 is the hub, nodes `1..n` are leaves.
pub fn star(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (0, i))).expect("star is simple")
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("complete graph is simple")
}

/// Path `0 - 1 - .. - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

/// Cycle on `n >= 3` nodes.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a simple cycle needs at least 3 nodes");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

/// G(n, p): every pair is an edge independently with probability `p`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("G(n,p) is simple")
}

/// Barabási–Albert preferential attachment.
///
/// Starts from a clique on `m + 1` nodes; every later node attaches to `m`
/// distinct existing nodes chosen with probability proportional to degree.
/// The result is connected with `m(m+1)/2 + (n - m - 1)m` edges.
pub fn preferential_attachment(n: usize, m: usize, seed: u64) -> Graph {
    assert!(m >= 1 && n > m, "need 1 <= m < n");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    // every edge endpoint appears once per incident edge
    let mut endpoints = Vec::new();
    for u in 0..=m {
        for v in u + 1..=m {
            edges.push((u, v));
            endpoints.extend([u, v]);
        }
    }
    let mut targets = Vec::with_capacity(m);
    for new in m + 1..n {
        targets.clear();
        while targets.len() < m {
            let t = endpoints[rng.random_range(0..endpoints.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((t, new));
            endpoints.extend([t, new]);
        }
    }
    Graph::from_edges(n, edges).expect("preferential attachment is simple")
}

/// Connected G(n, m)-like graph: a random spanning tree plus extra random edges.
pub fn random_connected(n: usize, extra_edges: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = std::collections::BTreeSet::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        edges.insert((u, v));
    }
    let max_edges = n * n.saturating_sub(1) / 2;
    let target = (edges.len() + extra_edges).min(max_edges);
    while edges.len() < target {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    Graph::from_edges(n, edges).expect("edges are simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preferential_attachment_shape() {
        let g = preferential_attachment(500, 2, 7);
        assert_eq!(g.node_count(), 500);
        assert_eq!(g.edge_count(), 3 + 497 * 2);
        assert!(g.is_connected());
        assert!(g.max_degree() > 20);
    }

    #[test]
    fn random_connected_is_connected() {
        let g = random_connected(200, 401, 1);
        assert_eq!(g.edge_count(), 600);
        assert!(g.is_connected());
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(erdos_renyi(30, 0.2, 5), erdos_renyi(30, 0.2, 5));
        assert_eq!(preferential_attachment(50, 3, 9), preferential_attachment(50, 3, 9));
    }
}
