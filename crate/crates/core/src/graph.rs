//! Immutable simple graphs, vertex sets and hop distances.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::par::Execution;
use crate::{Error, Result};

/// Dense vertex index in `0..vertex_count`.
pub type Vertex = usize;

/// Finite, simple, undirected graph.
///
/// Edges are stored normalized (`u < v`) and sorted, so two graphs built from
/// the same edge set compare equal and serialize identically. Equality
/// ignores vertex names.
#[derive(Clone)]
pub struct Graph {
    edges: Vec<(Vertex, Vertex)>,
    neighbors: Vec<Vec<Vertex>>,
    adjacency: Vec<FixedBitSet>,
    names: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged.
    pub fn new(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "endpoint out of range",
                });
            }
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "self-loop",
                });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();

        let mut neighbors = vec![Vec::new(); vertex_count];
        let mut adjacency = vec![FixedBitSet::with_capacity(vertex_count); vertex_count];
        for &(u, v) in &normalized {
            neighbors[u].push(v);
            neighbors[v].push(u);
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Graph {
            edges: normalized,
            neighbors,
            adjacency,
            names: None,
        })
    }

    /// Attaches printable vertex labels.
    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert_eq!(names.len(), self.vertex_count(), "one name per vertex");
        self.names = Some(names);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edges, `u < v`, in ascending order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].contains(v)
    }

    pub(crate) fn adjacency_bits(&self, v: Vertex) -> &FixedBitSet {
        &self.adjacency[v]
    }

    pub fn name(&self, v: Vertex) -> Option<&str> {
        self.names.as_ref().map(|names| names[v].as_str())
    }

    /// Copy of the graph with one edge removed (labels are kept).
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<Self> {
        let key = (u.min(v), u.max(v));
        if !self.edges.contains(&key) {
            return Err(Error::InvalidEdge {
                u,
                v,
                reason: "no such edge",
            });
        }
        let edges: Vec<_> = self.edges.iter().copied().filter(|&e| e != key).collect();
        let mut g = Graph::new(self.vertex_count(), &edges)?;
        g.names = self.names.clone();
        Ok(g)
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: Vertex) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d| d + 1);
            for &w in &self.neighbors[u] {
                if dist[w].is_none() {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// True for a non-empty graph in which every vertex reaches every other.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.bfs(0).iter().all(Option::is_some)
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.vertex_count() {
            return Err(Error::SetMismatch {
                set: s.universe(),
                graph: self.vertex_count(),
            });
        }
        Ok(())
    }

    /// Whether every two members of `s` are adjacent.
    pub fn is_clique(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(self.is_clique_bits(s.bits()))
    }

    pub(crate) fn is_clique_bits(&self, s: &FixedBitSet) -> bool {
        s.ones().all(|u| {
            let mut others = s.clone();
            others.set(u, false);
            others.is_subset(&self.adjacency[u])
        })
    }

    /// Parses the plain-text graph format: optional `#` comment lines, a
    /// header `<vertex_count> <edge_count>`, then one `<u> <v>` line per edge.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing header line"))?;
        let (vertex_count, edge_count) = parse_pair(header_line, header)?;

        let mut edges = Vec::with_capacity(edge_count);
        for (line, text) in lines.by_ref() {
            if edges.len() == edge_count {
                return Err(Error::parse(line, "more edge lines than declared"));
            }
            edges.push(parse_pair(line, text)?);
        }
        if edges.len() != edge_count {
            return Err(Error::parse(
                header_line,
                format!("declared {edge_count} edges, found {}", edges.len()),
            ));
        }
        Graph::new(vertex_count, &edges)
    }

    /// Serializes in the format accepted by [`Graph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count() == other.vertex_count() && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count())
            .field("edges", &self.edges)
            .finish()
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut fields = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let field = fields
            .next()
            .ok_or_else(|| Error::parse(line, "expected two integers"))?;
        field
            .parse()
            .map_err(|_| Error::parse(line, format!("not a non-negative integer: {field:?}")))
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(Error::parse(line, "expected exactly two integers"));
    }
    Ok(pair)
}

/// Subset of the vertices of a graph with `universe` vertices.
///
/// Iteration and `Display` are in ascending index order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn from_indices(
        universe: usize,
        members: impl IntoIterator<Item = Vertex>,
    ) -> Result<Self> {
        let mut set = VertexSet::empty(universe);
        for v in members {
            if v >= universe {
                return Err(Error::InvalidVertex {
                    vertex: v,
                    vertex_count: universe,
                });
            }
            set.bits.insert(v);
        }
        Ok(set)
    }

    /// Parses comma-separated 0-based indices such as `"0,3,4"`.
    /// An empty (or all-whitespace) string is the empty set.
    pub fn parse(universe: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(VertexSet::empty(universe));
        }
        let members = text
            .split(',')
            .map(|field| {
                let field = field.trim();
                field
                    .parse::<usize>()
                    .map_err(|_| Error::parse(1, format!("not a vertex index: {field:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        VertexSet::from_indices(universe, members)
    }

    pub(crate) fn from_bits(bits: FixedBitSet) -> Self {
        VertexSet { bits }
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    /// Number of vertices of the graph this set belongs to.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.bits.is_full()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.contains(v)
    }

    /// Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: Vertex) -> bool {
        !self.bits.put(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        let had = self.contains(v);
        self.bits.set(v, false);
        had
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSet { bits }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        VertexSet { bits }
    }

    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet { bits }
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// All-pairs hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Result<Self> {
        DistanceMatrix::with_execution(g, Execution::default())
    }

    /// One BFS per source vertex, fanned out according to `exec`.
    pub fn with_execution(g: &Graph, exec: Execution) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = g.vertex_count();
        let rows = exec.map_range(n, |s| g.bfs(s));
        let dist = rows
            .into_iter()
            .flatten()
            .map(|d| d.expect("connected graph"))
            .collect();
        Ok(DistanceMatrix { n, dist })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn eccentricity(&self, v: Vertex) -> u32 {
        self.row(v).iter().copied().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        (0..self.n).map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }

    /// Whether `w` lies on some shortest `u`–`v` path.
    #[inline]
    pub fn is_between(&self, u: Vertex, w: Vertex, v: Vertex) -> bool {
        self.get(u, w) + self.get(w, v) == self.get(u, v)
    }
}

/// Convenience wrapper: builds a [`Graph`] from `(u, v)` pairs.
pub fn build_graph(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
    Graph::new(vertex_count, edges)
}

pub fn distance_matrix(g: &Graph) -> Result<DistanceMatrix> {
    DistanceMatrix::new(g)
}

pub fn eccentricity(g: &Graph, v: Vertex) -> Result<u32> {
    if v >= g.vertex_count() {
        return Err(Error::InvalidVertex {
            vertex: v,
            vertex_count: g.vertex_count(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g.bfs(v).into_iter().flatten().max().unwrap_or(0))
}

pub fn diameter(g: &Graph) -> Result<u32> {
    Ok(DistanceMatrix::new(g)?.diameter())
}
