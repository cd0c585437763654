//! Simplicial vertices, perfect elimination orderings, chordality.

use fixedbitset::FixedBitSet;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::{Error, Result};

/// A permutation of a graph's vertices, read as an elimination order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrdering(Vec<Vertex>);

impl EliminationOrdering {
    /// Validates that `order` is a permutation of `0..vertex_count`.
    pub fn new(vertex_count: usize, order: Vec<Vertex>) -> Result<Self> {
        if order.len() != vertex_count {
            return Err(Error::InvalidOrdering(format!(
                "{} entries for {vertex_count} vertices",
                order.len()
            )));
        }
        let mut seen = vec![false; vertex_count];
        for &v in &order {
            if v >= vertex_count {
                return Err(Error::InvalidOrdering(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidOrdering(format!("vertex {v} repeated")));
            }
        }
        Ok(EliminationOrdering(order))
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl std::fmt::Display for EliminationOrdering {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Vertices whose open neighborhood is a clique.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    let mut out = VertexSet::empty(g.vertex_count());
    for v in g.vertices() {
        if g.is_clique_bits(g.adjacency_bits(v)) {
            out.insert(v);
        }
    }
    out
}

/// Whether each vertex's later neighbors in `order` form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &EliminationOrdering) -> Result<bool> {
    if order.0.len() != g.vertex_count() {
        return Err(Error::InvalidOrdering(format!(
            "ordering has {} entries, graph has {} vertices",
            order.0.len(),
            g.vertex_count()
        )));
    }
    let mut remaining = FixedBitSet::with_capacity(g.vertex_count());
    remaining.insert_range(..);
    for &v in order.as_slice() {
        remaining.set(v, false);
        let mut later = g.adjacency_bits(v).clone();
        later.intersect_with(&remaining);
        if !g.is_clique_bits(&later) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Maximum-cardinality search visit order: repeatedly take the unvisited
/// vertex with the most visited neighbors, smallest index on ties. The
/// reverse of this order is a perfect elimination ordering exactly when the
/// graph is chordal.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited[next] = true;
        order.push(next);
        for &w in g.neighbors(next) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// A perfect elimination ordering if `g` is chordal, otherwise `None`.
pub fn chordality(g: &Graph) -> Option<EliminationOrdering> {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    let order = EliminationOrdering(order);
    is_perfect_elimination_ordering(g, &order)
        .expect("MCS yields a permutation")
        .then_some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    chordality(g).is_some()
}
