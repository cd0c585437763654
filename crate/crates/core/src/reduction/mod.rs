//! The chordal gadget graph of a restricted SAT instance.
//!
//! For `n` variables and `m` clauses the graph has `12n + m` vertices: one
//! vertex `c_j` per clause, three vertices `y_i`, `ȳ_i`, `z_i` per variable
//! (together with the clause vertices these form one big clique), and nine
//! gadget vertices per variable. The instance is satisfiable exactly when
//! the hull number is at most `4n`; [`verify`] checks that equivalence and
//! the structural facts it rests on.

mod cnf;
mod verify;

use std::fmt;

pub use cnf::{
    random_restricted_cnf, Assignment, Literal, Occurrences, RestrictedCnf, Violation,
    MAX_BRUTEFORCE_VARIABLES,
};
pub use verify::{
    equivalence_check, forward_counterexample, verify_structure, CheckResult, EquivalenceOptions,
    EquivalenceReport, Report, StructureCheck,
};

use crate::chordal::EliminationOrdering;
use crate::convexity::Geodesics;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::{Error, Result};

/// Per-variable vertex roles, in their layout order inside a variable block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarRole {
    /// `y_i`
    Y,
    /// `ȳ_i`
    YBar,
    /// `z_i`
    Z,
    /// `x_i`
    X,
    /// `x'_i`
    XPrime,
    /// `x^1_i`
    X1,
    /// `x^2_i`
    X2,
    /// `x'^1_i`
    XPrime1,
    /// `x'^2_i`
    XPrime2,
    /// `x̄_i`
    XBar,
    /// `x̄'_i`
    XBarPrime,
    /// `x̄''_i`
    XBarPrime2,
}

impl VarRole {
    pub const ALL: [VarRole; 12] = [
        VarRole::Y,
        VarRole::YBar,
        VarRole::Z,
        VarRole::X,
        VarRole::XPrime,
        VarRole::X1,
        VarRole::X2,
        VarRole::XPrime1,
        VarRole::XPrime2,
        VarRole::XBar,
        VarRole::XBarPrime,
        VarRole::XBarPrime2,
    ];

    /// Vertices added per variable.
    pub const BLOCK: usize = VarRole::ALL.len();

    fn offset(self) -> usize {
        self as usize
    }

    fn tag(self) -> &'static str {
        match self {
            VarRole::Y => "y",
            VarRole::YBar => "ybar",
            VarRole::Z => "z",
            VarRole::X => "x",
            VarRole::XPrime => "xp",
            VarRole::X1 => "x1",
            VarRole::X2 => "x2",
            VarRole::XPrime1 => "xp1",
            VarRole::XPrime2 => "xp2",
            VarRole::XBar => "xbar",
            VarRole::XBarPrime => "xbarp",
            VarRole::XBarPrime2 => "xbarpp",
        }
    }

    /// Whether the vertex belongs to the central clique `B ∪ Z`.
    pub fn in_clique(self) -> bool {
        matches!(self, VarRole::Y | VarRole::YBar | VarRole::Z)
    }
}

/// Role of a vertex of the reduction graph (indices 0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Clause(usize),
    Var(usize, VarRole),
}

impl fmt::Display for Role {
    /// Sidecar label, 1-based: `c3`, `ybar2`, `xp11`, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::Clause(j) => write!(f, "c{}", j + 1),
            Role::Var(i, role) => write!(f, "{}{}", role.tag(), i + 1),
        }
    }
}

/// Gadget graph of a restricted instance, with the role of every vertex.
///
/// Layout: clause vertices `0..m`, then one block of [`VarRole::BLOCK`]
/// vertices per variable in [`VarRole::ALL`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionGraph {
    cnf: RestrictedCnf,
    graph: Graph,
}

impl ReductionGraph {
    pub fn cnf(&self) -> &RestrictedCnf {
        &self.cnf
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn variable_count(&self) -> usize {
        self.cnf.variable_count()
    }

    pub fn clause_count(&self) -> usize {
        self.cnf.clause_count()
    }

    /// The hull-number threshold `4n`.
    pub fn k(&self) -> usize {
        4 * self.variable_count()
    }

    pub fn clause_vertex(&self, j: usize) -> Vertex {
        debug_assert!(j < self.clause_count());
        j
    }

    pub fn var_vertex(&self, i: usize, role: VarRole) -> Vertex {
        debug_assert!(i < self.variable_count());
        self.clause_count() + i * VarRole::BLOCK + role.offset()
    }

    pub fn vertex(&self, role: Role) -> Vertex {
        match role {
            Role::Clause(j) => self.clause_vertex(j),
            Role::Var(i, r) => self.var_vertex(i, r),
        }
    }

    pub fn role(&self, v: Vertex) -> Role {
        let m = self.clause_count();
        if v < m {
            Role::Clause(v)
        } else {
            let k = v - m;
            Role::Var(k / VarRole::BLOCK, VarRole::ALL[k % VarRole::BLOCK])
        }
    }

    /// Vertex set of the central clique `B ∪ Z`.
    pub fn clique(&self) -> VertexSet {
        let g = &self.graph;
        let members = g.vertices().filter(|&v| match self.role(v) {
            Role::Clause(_) => true,
            Role::Var(_, r) => r.in_clique(),
        });
        VertexSet::from_indices(g.vertex_count(), members).expect("in range")
    }

    /// The `3n` vertices `x'^1_i`, `x'^2_i`, `x̄''_i`, which are exactly the
    /// simplicial vertices.
    pub fn pendant_vertices(&self) -> VertexSet {
        self.vertices_with(&[VarRole::XPrime1, VarRole::XPrime2, VarRole::XBarPrime2])
    }

    fn vertices_with(&self, roles: &[VarRole]) -> VertexSet {
        let mut s = VertexSet::empty(self.graph.vertex_count());
        for i in 0..self.variable_count() {
            for &r in roles {
                s.insert(self.var_vertex(i, r));
            }
        }
        s
    }

    /// The 26 gadget edges of variable `i`.
    pub fn gadget_edges(&self, i: usize) -> [(Vertex, Vertex); 26] {
        use VarRole::*;
        let occ = self.cnf.occurrences(i);
        let [a, b] = occ.positive.map(|j| self.clause_vertex(j));
        let c = self.clause_vertex(occ.negative);
        let v = |r| self.var_vertex(i, r);
        [
            // N(x_i) = {x'_i, z_i, y_i, c_a, c_b}
            (v(X), v(XPrime)),
            (v(X), v(Z)),
            (v(X), v(Y)),
            (v(X), a),
            (v(X), b),
            // N(x'_i) = {x_i, x^1_i, x^2_i, y_i, c_a, c_b}
            (v(XPrime), v(X1)),
            (v(XPrime), v(X2)),
            (v(XPrime), v(Y)),
            (v(XPrime), a),
            (v(XPrime), b),
            // N(x^1_i) = {x'_i, x'^1_i, y_i, c_a}
            (v(X1), v(XPrime1)),
            (v(X1), v(Y)),
            (v(X1), a),
            // N(x^2_i) = {x'_i, x'^2_i, y_i, c_b}
            (v(X2), v(XPrime2)),
            (v(X2), v(Y)),
            (v(X2), b),
            // x'^1_i and x'^2_i hang off the triangles with y_i.
            (v(XPrime1), v(Y)),
            (v(XPrime2), v(Y)),
            // N(x̄_i) = {x̄'_i, z_i, ȳ_i, c_c}
            (v(XBar), v(XBarPrime)),
            (v(XBar), v(Z)),
            (v(XBar), v(YBar)),
            (v(XBar), c),
            // N(x̄'_i) = {x̄_i, x̄''_i, ȳ_i, c_c}
            (v(XBarPrime), v(XBarPrime2)),
            (v(XBarPrime), v(YBar)),
            (v(XBarPrime), c),
            // N(x̄''_i) = {x̄'_i, ȳ_i}
            (v(XBarPrime2), v(YBar)),
        ]
    }

    /// Vertex labels for the sidecar file, one `<index> <role>` line each.
    pub fn labels_text(&self) -> String {
        self.graph
            .vertices()
            .map(|v| format!("{v} {}\n", self.role(v)))
            .collect()
    }

    /// The elimination order in which vertices are peeled off layer by
    /// layer: the pendant vertices `x'^1, x'^2, x̄''`, then `x^1, x^2, x̄'`,
    /// then `x'`, then `x, x̄`, and finally the clique.
    pub fn layered_elimination_ordering(&self) -> EliminationOrdering {
        use VarRole::*;
        let layers: [&[VarRole]; 4] = [
            &[XPrime1, XPrime2, XBarPrime2],
            &[X1, X2, XBarPrime],
            &[XPrime],
            &[X, XBar],
        ];
        let mut order = Vec::with_capacity(self.graph.vertex_count());
        for layer in layers {
            order.extend(self.vertices_with(layer).iter());
        }
        order.extend(self.clique().iter());
        EliminationOrdering::new(self.graph.vertex_count(), order).expect("permutation")
    }

    /// `V_j`: the clause vertex with the literal gadget vertices that touch it.
    pub fn clause_block(&self, j: usize) -> VertexSet {
        use VarRole::*;
        let mut s = VertexSet::empty(self.graph.vertex_count());
        s.insert(self.clause_vertex(j));
        for i in 0..self.variable_count() {
            let occ = self.cnf.occurrences(i);
            let v = |r| self.var_vertex(i, r);
            if occ.positive[0] == j {
                for r in [X, XPrime, X1] {
                    s.insert(v(r));
                }
            }
            if occ.positive[1] == j {
                for r in [X, XPrime, X2] {
                    s.insert(v(r));
                }
            }
            if occ.negative == j {
                for r in [XBar, XBarPrime] {
                    s.insert(v(r));
                }
            }
        }
        s
    }

    /// `{x_i, z_i, x̄_i}`.
    pub fn literal_triple(&self, i: usize) -> VertexSet {
        let members = [VarRole::X, VarRole::Z, VarRole::XBar].map(|r| self.var_vertex(i, r));
        VertexSet::from_indices(self.graph.vertex_count(), members).expect("in range")
    }

    /// Same roles and instance, different edge set (for mutation studies).
    pub fn with_graph(&self, graph: Graph) -> Result<Self> {
        if graph.vertex_count() != self.graph.vertex_count() {
            return Err(Error::SetMismatch {
                set: graph.vertex_count(),
                graph: self.graph.vertex_count(),
            });
        }
        Ok(ReductionGraph {
            cnf: self.cnf.clone(),
            graph,
        })
    }
}

/// Builds the gadget graph of a valid restricted instance.
pub fn build_reduction(cnf: &RestrictedCnf) -> Result<ReductionGraph> {
    cnf.ensure_valid()?;
    let n = cnf.variable_count();
    let m = cnf.clause_count();
    let order = VarRole::BLOCK * n + m;

    // Temporary edgeless instance, only used for index arithmetic.
    let mut rg = ReductionGraph {
        cnf: cnf.clone(),
        graph: Graph::new(order, &[])?,
    };
    let clique: Vec<Vertex> = rg.clique().to_vec();
    let mut edges = Vec::with_capacity(clique.len() * clique.len() / 2 + 26 * n);
    for (k, &u) in clique.iter().enumerate() {
        for &v in &clique[k + 1..] {
            edges.push((u, v));
        }
    }
    for i in 0..n {
        edges.extend(rg.gadget_edges(i));
    }
    let labels: Vec<String> = (0..order).map(|v| rg.role(v).to_string()).collect();
    rg.graph = Graph::new(order, &edges)?.with_names(labels);
    Ok(rg)
}

/// `x'^1_i, x'^2_i, x̄''_i` for every `i`, plus `x_i` for true and `x̄_i` for
/// false variables. Always `4n` vertices.
pub fn assignment_to_hull_set(rg: &ReductionGraph, a: &Assignment) -> Result<VertexSet> {
    if a.len() != rg.variable_count() {
        return Err(Error::NotAWitness(format!(
            "assignment has {} values for {} variables",
            a.len(),
            rg.variable_count()
        )));
    }
    let mut s = rg.pendant_vertices();
    for i in 0..rg.variable_count() {
        let role = if a.value(i) {
            VarRole::X
        } else {
            VarRole::XBar
        };
        s.insert(rg.var_vertex(i, role));
    }
    Ok(s)
}

/// Variable `i` is true iff `x_i ∈ s`. `s` must be a hull set of at most
/// `4n` vertices.
pub fn hull_set_to_assignment(rg: &ReductionGraph, s: &VertexSet) -> Result<Assignment> {
    rg.graph.check_set(s)?;
    if s.len() > rg.k() {
        return Err(Error::NotAWitness(format!(
            "{} vertices exceed k = {}",
            s.len(),
            rg.k()
        )));
    }
    if !Geodesics::new(&rg.graph)?.is_hull_set(s)? {
        return Err(Error::NotAWitness("not a hull set".into()));
    }
    Ok(extract_assignment(rg, s))
}

pub(crate) fn extract_assignment(rg: &ReductionGraph, s: &VertexSet) -> Assignment {
    Assignment(
        (0..rg.variable_count())
            .map(|i| s.contains(rg.var_vertex(i, VarRole::X)))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::{is_perfect_elimination_ordering, simplicial_vertices};
    use crate::convexity::{interval, is_hull_set};
    use crate::fixtures::{sample_cnf, single_variable_cnf};

    #[test]
    fn sizes() {
        let rg = build_reduction(&sample_cnf()).unwrap();
        assert_eq!(rg.graph().vertex_count(), 39);
        assert_eq!(rg.graph().edge_count(), 66 + 3 * 26);
        assert_eq!(rg.clique().len(), 12);
        assert!(rg.graph().is_clique(&rg.clique()).unwrap());
        assert_eq!(rg.k(), 12);

        let rg1 = build_reduction(&single_variable_cnf()).unwrap();
        assert_eq!(rg1.graph().vertex_count(), 15);
        assert_eq!(rg1.graph().edge_count(), 15 + 26);
    }

    #[test]
    fn gadget_edges_are_distinct() {
        let rg = build_reduction(&sample_cnf()).unwrap();
        for i in 0..3 {
            let mut edges: Vec<_> = rg
                .gadget_edges(i)
                .iter()
                .map(|&(u, v)| (u.min(v), u.max(v)))
                .collect();
            edges.sort();
            edges.dedup();
            assert_eq!(edges.len(), 26);
            for (u, v) in edges {
                assert!(rg.graph().has_edge(u, v));
                // Gadget edges never lie inside the clique.
                assert!(!(rg.clique().contains(u) && rg.clique().contains(v)));
            }
        }
    }

    #[test]
    fn layout_and_labels() {
        let rg = build_reduction(&sample_cnf()).unwrap();
        for v in rg.graph().vertices() {
            assert_eq!(rg.vertex(rg.role(v)), v);
        }
        assert_eq!(rg.var_vertex(0, VarRole::Y), 3);
        assert_eq!(rg.role(3 + 12 + 11), Role::Var(1, VarRole::XBarPrime2));
        let labels = rg.labels_text();
        let lines: Vec<&str> = labels.lines().collect();
        assert_eq!(lines.len(), 39);
        assert_eq!(lines[0], "0 c1");
        assert_eq!(lines[3], "3 y1");
        assert_eq!(lines[10], "10 xp11");
        assert_eq!(lines[14], "14 xbarpp1");
        assert_eq!(rg.graph().name(26), Some("xbarpp2"));
    }

    #[test]
    fn invalid_instances_are_rejected() {
        let bad = RestrictedCnf::new(1, vec![vec![Literal::pos(0)]]);
        assert!(matches!(
            build_reduction(&bad),
            Err(Error::InvalidInstance(_))
        ));
    }

    #[test]
    fn structure_facts() {
        let rg = build_reduction(&sample_cnf()).unwrap();
        let g = rg.graph();
        assert_eq!(simplicial_vertices(g), rg.pendant_vertices());
        assert!(is_perfect_elimination_ordering(g, &rg.layered_elimination_ordering()).unwrap());

        // z_i and ȳ_i lie between x_i and x̄''_i.
        let i = 1;
        let v = |r| rg.var_vertex(i, r);
        let s = VertexSet::from_indices(39, [v(VarRole::X), v(VarRole::XBarPrime2)]).unwrap();
        let iv = interval(g, &s).unwrap();
        assert!(iv.contains(v(VarRole::Z)) && iv.contains(v(VarRole::YBar)));
    }

    #[test]
    fn forward_and_backward() {
        let rg = build_reduction(&sample_cnf()).unwrap();
        let t = Assignment(vec![true, false, true]);
        let s = assignment_to_hull_set(&rg, &t).unwrap();
        assert_eq!(s.len(), 12);
        assert!(is_hull_set(rg.graph(), &s).unwrap());
        assert_eq!(hull_set_to_assignment(&rg, &s).unwrap(), t);

        let all_true = assignment_to_hull_set(&rg, &Assignment(vec![true; 3])).unwrap();
        for i in 0..3 {
            assert!(all_true.contains(rg.var_vertex(i, VarRole::X)));
        }
        // Falsifies C3, whose clause block then stays outside the hull.
        assert!(!is_hull_set(rg.graph(), &all_true).unwrap());
        let all_false = assignment_to_hull_set(&rg, &Assignment(vec![false; 3])).unwrap();
        assert!(!is_hull_set(rg.graph(), &all_false).unwrap());
        assert!(matches!(
            hull_set_to_assignment(&rg, &all_false),
            Err(Error::NotAWitness(_))
        ));
        assert!(matches!(
            hull_set_to_assignment(&rg, &VertexSet::full(39)),
            Err(Error::NotAWitness(_))
        ));
    }

    #[test]
    fn round_trip_reads_only_x_membership() {
        let rg = build_reduction(&sample_cnf()).unwrap();
        for mask in 0..8 {
            let a = Assignment::from_mask(3, mask);
            let s = assignment_to_hull_set(&rg, &a).unwrap();
            assert_eq!(s.len(), rg.k());
            assert_eq!(extract_assignment(&rg, &s), a);
        }
    }
}
