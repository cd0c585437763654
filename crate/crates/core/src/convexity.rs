//! Geodetic convexity: intervals, hulls and the predicates built on them.
//!
//! A vertex `w` lies in the interval of `{u, v}` iff
//! `dist(u, w) + dist(w, v) == dist(u, v)`. [`Geodesics`] precomputes the
//! distance matrix and every pair interval once, so repeated queries on the
//! same graph (as in the hull-number search) cost only bitset unions.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::graph::{DistanceMatrix, Graph, Vertex, VertexSet};
use crate::par::Execution;
use crate::Result;

/// `{u, v} -> w`: `w` is distinct from `u` and `v` and lies on a shortest
/// `u`–`v` path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalDependency {
    /// Premise, stored with `premise.0 < premise.1`.
    pub premise: (Vertex, Vertex),
    pub consequence: Vertex,
}

impl IntervalDependency {
    pub fn new(u: Vertex, v: Vertex, consequence: Vertex) -> Self {
        IntervalDependency {
            premise: (u.min(v), u.max(v)),
            consequence,
        }
    }
}

impl fmt::Display for IntervalDependency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{},{}}} -> {}",
            self.premise.0, self.premise.1, self.consequence
        )
    }
}

/// Distances and pair intervals of a connected graph.
pub struct Geodesics<'g> {
    graph: &'g Graph,
    dist: DistanceMatrix,
    /// `pair[u * n + v]` is the interval of `{u, v}`.
    pair: Vec<FixedBitSet>,
}

impl<'g> Geodesics<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        Geodesics::with_execution(graph, Execution::default())
    }

    pub fn with_execution(graph: &'g Graph, exec: Execution) -> Result<Self> {
        let dist = DistanceMatrix::with_execution(graph, exec)?;
        let n = graph.vertex_count();
        let rows = exec.map_range(n, |u| {
            (0..n)
                .map(|v| {
                    let mut bits = FixedBitSet::with_capacity(n);
                    for w in 0..n {
                        if dist.is_between(u, w, v) {
                            bits.insert(w);
                        }
                    }
                    bits
                })
                .collect::<Vec<_>>()
        });
        Ok(Geodesics {
            graph,
            dist,
            pair: rows.into_iter().flatten().collect(),
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    #[inline]
    pub(crate) fn pair_bits(&self, u: Vertex, v: Vertex) -> &FixedBitSet {
        &self.pair[u * self.vertex_count() + v]
    }

    /// Interval of the two-element set `{u, v}`.
    pub fn pair_interval(&self, u: Vertex, v: Vertex) -> VertexSet {
        VertexSet::from_bits(self.pair_bits(u, v).clone())
    }

    fn interval_bits(&self, s: &FixedBitSet) -> FixedBitSet {
        let mut out = s.clone();
        let members: Vec<_> = s.ones().collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                out.union_with(self.pair_bits(u, v));
            }
        }
        out
    }

    /// All vertices on shortest paths between members of `s`.
    pub fn interval(&self, s: &VertexSet) -> Result<VertexSet> {
        self.graph.check_set(s)?;
        Ok(VertexSet::from_bits(self.interval_bits(s.bits())))
    }

    /// Least convex superset of `s`, by repeated interval rounds.
    pub fn hull(&self, s: &VertexSet) -> Result<VertexSet> {
        self.graph.check_set(s)?;
        let mut current = s.bits().clone();
        // Each productive round adds a vertex, so at most n rounds.
        for _ in 0..=self.vertex_count() {
            let next = self.interval_bits(&current);
            if next == current {
                break;
            }
            current = next;
        }
        Ok(VertexSet::from_bits(current))
    }

    /// Hull of `closed ∪ added`, where `closed` is already convex.
    ///
    /// Worklist closure: only pairs involving a newly reached vertex can
    /// contribute, since every pair inside `closed` is already saturated.
    pub(crate) fn extend_hull(&self, closed: &FixedBitSet, added: Vertex) -> FixedBitSet {
        let mut hull = closed.clone();
        if hull.contains(added) {
            return hull;
        }
        hull.insert(added);
        let mut pending = vec![added];
        let mut fresh = FixedBitSet::with_capacity(hull.len());
        while let Some(u) = pending.pop() {
            fresh.clear();
            for v in hull.ones() {
                fresh.union_with(self.pair_bits(u, v));
            }
            fresh.difference_with(&hull);
            if !fresh.is_clear() {
                hull.union_with(&fresh);
                pending.extend(fresh.ones());
            }
        }
        hull
    }

    /// Hull computed by the worklist closure, starting from nothing.
    pub(crate) fn hull_incremental(&self, s: &FixedBitSet) -> FixedBitSet {
        s.ones().fold(FixedBitSet::with_capacity(s.len()), |h, v| {
            self.extend_hull(&h, v)
        })
    }

    pub fn is_convex(&self, s: &VertexSet) -> Result<bool> {
        Ok(self.interval(s)? == *s)
    }

    /// Whether no vertex of `s` lies on a shortest path between two vertices
    /// outside `s`; equivalently, the complement of `s` is convex.
    pub fn is_concave(&self, s: &VertexSet) -> Result<bool> {
        self.graph.check_set(s)?;
        let outside: Vec<_> = s.bits().zeroes().collect();
        for (i, &v) in outside.iter().enumerate() {
            for &w in &outside[i + 1..] {
                if !self.pair_bits(v, w).is_disjoint(s.bits()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_hull_set(&self, s: &VertexSet) -> Result<bool> {
        Ok(self.hull(s)?.is_full())
    }

    /// Every binary geodesic dependency, ordered by premise then consequence.
    pub fn interval_dependencies(&self) -> Vec<IntervalDependency> {
        self.dependencies_with(Execution::default())
    }

    pub fn dependencies_with(&self, exec: Execution) -> Vec<IntervalDependency> {
        let n = self.vertex_count();
        exec.map_range(n, |u| {
            let mut deps = Vec::new();
            for v in u + 1..n {
                for w in self.pair_bits(u, v).ones() {
                    if w != u && w != v {
                        deps.push(IntervalDependency::new(u, v, w));
                    }
                }
            }
            deps
        })
        .into_iter()
        .flatten()
        .collect()
    }
}

pub fn interval(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    Geodesics::new(g)?.interval(s)
}

pub fn hull(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    Geodesics::new(g)?.hull(s)
}

pub fn is_convex(g: &Graph, s: &VertexSet) -> Result<bool> {
    Geodesics::new(g)?.is_convex(s)
}

pub fn is_concave(g: &Graph, s: &VertexSet) -> Result<bool> {
    Geodesics::new(g)?.is_concave(s)
}

pub fn is_hull_set(g: &Graph, s: &VertexSet) -> Result<bool> {
    Geodesics::new(g)?.is_hull_set(s)
}

pub fn interval_dependencies(g: &Graph) -> Result<Vec<IntervalDependency>> {
    Ok(Geodesics::new(g)?.interval_dependencies())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fig2;
    use crate::Error;
    use proptest::prelude::*;

    fn set(n: usize, members: &[Vertex]) -> VertexSet {
        VertexSet::from_indices(n, members.iter().copied()).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    // Figure 2 labels.
    const X1: Vertex = 0;
    const X2: Vertex = 1;
    const X3: Vertex = 2;
    const T: Vertex = 3;
    const Z: Vertex = 4;

    #[test]
    fn intervals() {
        let p = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(interval(&p, &set(3, &[0, 2])).unwrap(), VertexSet::full(3));
        let g = fig2();
        assert_eq!(
            interval(&g, &set(5, &[Z, X2])).unwrap(),
            set(5, &[X2, X3, T, Z])
        );
        assert_eq!(interval(&g, &set(5, &[])).unwrap(), set(5, &[]));
        assert_eq!(interval(&g, &set(5, &[T])).unwrap(), set(5, &[T]));
    }

    #[test]
    fn hulls() {
        let g = fig2();
        assert!(hull(&g, &VertexSet::full(5)).unwrap().is_full());
        assert!(hull(&g, &set(5, &[X1, Z])).unwrap().is_full());
        let k5 = complete(5);
        assert_eq!(hull(&k5, &set(5, &[3])).unwrap(), set(5, &[3]));
    }

    #[test]
    fn convex_and_concave() {
        let g = fig2();
        assert!(is_convex(&g, &VertexSet::full(5)).unwrap());
        assert!(!is_convex(&g, &set(5, &[X1, T])).unwrap());
        assert!(is_convex(&g, &set(5, &[X3, T, Z])).unwrap());
        assert!(is_concave(&g, &set(5, &[])).unwrap());
        assert!(!is_concave(&g, &set(5, &[X2])).unwrap());
        assert!(is_concave(&g, &set(5, &[X1])).unwrap());
    }

    #[test]
    fn hull_sets() {
        let g = fig2();
        assert!(is_hull_set(&g, &VertexSet::full(5)).unwrap());
        assert!(is_hull_set(&g, &set(5, &[X1, Z])).unwrap());
        assert!(!is_hull_set(&g, &set(5, &[X2, T])).unwrap());
    }

    #[test]
    fn dependencies() {
        let g = fig2();
        let deps = interval_dependencies(&g).unwrap();
        assert!(deps.contains(&IntervalDependency::new(X1, T, X2)));
        assert!(deps.contains(&IntervalDependency::new(Z, X2, X3)));
        assert!(!deps.contains(&IntervalDependency::new(Z, T, X3)));
        assert!(deps.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(IntervalDependency::new(Z, X2, X3).to_string(), "{1,4} -> 2");
        assert!(interval_dependencies(&complete(6)).unwrap().is_empty());
    }

    #[test]
    fn disconnected_and_mismatched() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            interval(&g, &set(3, &[0])),
            Err(Error::Disconnected)
        ));
        assert!(matches!(hull(&g, &set(3, &[0])), Err(Error::Disconnected)));
        assert!(matches!(
            is_convex(&fig2(), &set(4, &[0])),
            Err(Error::SetMismatch { .. })
        ));
    }

    /// Interval by listing every shortest path explicitly.
    fn interval_by_paths(g: &Graph, s: &VertexSet) -> VertexSet {
        fn all_paths(
            g: &Graph,
            at: Vertex,
            to: Vertex,
            path: &mut Vec<Vertex>,
            out: &mut Vec<Vec<Vertex>>,
        ) {
            if at == to {
                out.push(path.clone());
                return;
            }
            for &w in g.neighbors(at) {
                if !path.contains(&w) {
                    path.push(w);
                    all_paths(g, w, to, path, out);
                    path.pop();
                }
            }
        }
        let mut result = s.clone();
        for u in s.iter() {
            for v in s.iter() {
                let mut paths = Vec::new();
                all_paths(g, u, v, &mut vec![u], &mut paths);
                let shortest = paths.iter().map(Vec::len).min().unwrap();
                for p in paths.iter().filter(|p| p.len() == shortest) {
                    for &w in p {
                        result.insert(w);
                    }
                }
            }
        }
        result
    }

    fn arb_graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, Vec<bool>, Vec<bool>)> {
        (1..=max_n).prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
            (
                parents,
                prop::collection::vec((0..n, 0..n), 0..2 * n),
                prop::collection::vec(any::<bool>(), n),
                prop::collection::vec(any::<bool>(), n),
            )
                .prop_map(move |(parents, extra, a, b)| {
                    let mut edges: Vec<_> = parents
                        .into_iter()
                        .enumerate()
                        .map(|(i, p)| (p, i + 1))
                        .collect();
                    edges.extend(extra.into_iter().filter(|(x, y)| x != y));
                    (Graph::new(n, &edges).unwrap(), a, b)
                })
        })
    }

    fn from_mask(mask: &[bool]) -> VertexSet {
        VertexSet::from_indices(mask.len(), (0..mask.len()).filter(|&i| mask[i])).unwrap()
    }

    proptest! {
        #[test]
        fn interval_matches_path_enumeration((g, a, _) in arb_graph_and_set(8)) {
            let s = from_mask(&a);
            prop_assert_eq!(interval(&g, &s).unwrap(), interval_by_paths(&g, &s));
        }

        #[test]
        fn closure_axioms((g, a, b) in arb_graph_and_set(12)) {
            let geo = Geodesics::new(&g).unwrap();
            let s = from_mask(&a);
            let t = s.union(&from_mask(&b));
            let is = geo.interval(&s).unwrap();
            let hs = geo.hull(&s).unwrap();
            prop_assert!(s.is_subset(&is) && is.is_subset(&hs));
            prop_assert!(is.is_subset(&geo.interval(&t).unwrap()));
            prop_assert!(hs.is_subset(&geo.hull(&t).unwrap()));
            prop_assert_eq!(&geo.hull(&hs).unwrap(), &hs);
            prop_assert!(geo.is_convex(&hs).unwrap());
            prop_assert_eq!(geo.is_concave(&s).unwrap(), geo.is_convex(&s.complement()).unwrap());
            prop_assert_eq!(VertexSet::from_bits(geo.hull_incremental(s.bits())), hs);
        }

        #[test]
        fn dependencies_agree_across_modes((g, _, _) in arb_graph_and_set(10)) {
            let geo = Geodesics::new(&g).unwrap();
            let seq = geo.dependencies_with(Execution::Sequential);
            prop_assert_eq!(&seq, &geo.dependencies_with(Execution::Parallel));
            for d in seq {
                let (u, v) = d.premise;
                prop_assert!(d.consequence != u && d.consequence != v);
                prop_assert!(geo.distances().is_between(u, d.consequence, v));
            }
        }
    }
}
