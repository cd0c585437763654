//! Seeded random graphs and brute-force oracles shared by the integration
//! tests. Nothing here calls into the crate's algorithms.

#![allow(dead_code)]

use geohull::{Graph, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` with `n` in `1..=max_n` and `p` in `[0.1, 0.7)`.
pub fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.random_range(1..=max_n);
    let p = rng.random_range(0.1..0.7);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// A random spanning tree plus `G(n, p)` noise, so always connected.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.random_range(1..=max_n);
    let p = rng.random_range(0.0..0.5);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vertex> {
    let p = rng.random_range(0.0..0.6);
    (0..n).filter(|_| rng.random_bool(p)).collect()
}

/// Exhaustive search for an induced cycle on at least four vertices.
pub fn has_induced_cycle(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 20);
    (0u32..1 << n).filter(|m| m.count_ones() >= 4).any(|mask| {
        let inside = |v: usize| mask >> v & 1 == 1;
        let members: Vec<_> = (0..n).filter(|&v| inside(v)).collect();
        if !members
            .iter()
            .all(|&v| g.neighbors(v).iter().filter(|&&w| inside(w)).count() == 2)
        {
            return false;
        }
        // A 2-regular induced subgraph is a single cycle iff it is connected.
        let mut seen = vec![members[0]];
        let mut stack = vec![members[0]];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if inside(w) && !seen.contains(&w) {
                    seen.push(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == members.len()
    })
}
