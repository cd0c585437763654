//! Checks of the reduction's structure and of satisfiability ⇔ `h ≤ 4n`.

use std::fmt;

use crate::chordal::{is_perfect_elimination_ordering, simplicial_vertices};
use crate::convexity::Geodesics;
use crate::graph::VertexSet;
use crate::par::Execution;
use crate::reduction::{
    assignment_to_hull_set, build_reduction, extract_assignment, Assignment, ReductionGraph,
    RestrictedCnf, VarRole, MAX_BRUTEFORCE_VARIABLES,
};
use crate::solver::{HullNumberResult, HullSolver};
use crate::{Error, Result};

/// The eight structural checks, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructureCheck {
    Order,
    Diameter,
    CliqueEccentricity,
    GadgetDistances,
    EliminationOrdering,
    SimplicialVertices,
    LiteralTriplesConcave,
    ClauseBlocksConcave,
}

impl StructureCheck {
    pub const ALL: [StructureCheck; 8] = [
        StructureCheck::Order,
        StructureCheck::Diameter,
        StructureCheck::CliqueEccentricity,
        StructureCheck::GadgetDistances,
        StructureCheck::EliminationOrdering,
        StructureCheck::SimplicialVertices,
        StructureCheck::LiteralTriplesConcave,
        StructureCheck::ClauseBlocksConcave,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureCheck::Order => "order",
            StructureCheck::Diameter => "diameter",
            StructureCheck::CliqueEccentricity => "clique-eccentricity",
            StructureCheck::GadgetDistances => "gadget-distances",
            StructureCheck::EliminationOrdering => "elimination-ordering",
            StructureCheck::SimplicialVertices => "simplicial-vertices",
            StructureCheck::LiteralTriplesConcave => "literal-triples-concave",
            StructureCheck::ClauseBlocksConcave => "clause-blocks-concave",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Line-oriented check report: `PASS`/`FAIL` lines, then `INFO` notes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<CheckResult>,
    pub notes: Vec<String>,
}

impl Report {
    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed(&self, name: &str) -> Option<bool> {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {}: {}", c.name, c.detail)?;
        }
        for note in &self.notes {
            writeln!(f, "INFO {note}")?;
        }
        Ok(())
    }
}

/// Runs the eight structural checks on `rg`. Failures are report entries,
/// never errors; a disconnected (mutated) graph fails every metric check.
pub fn verify_structure(rg: &ReductionGraph) -> Report {
    use StructureCheck::*;
    let g = rg.graph();
    let n = rg.variable_count();
    let m = rg.clause_count();
    let mut report = Report::default();

    let expected = 12 * n + m;
    report.check(
        Order.name(),
        g.vertex_count() == expected,
        format!("{} vertices, expected 12n+m = {expected}", g.vertex_count()),
    );

    let geo = Geodesics::new(g).ok();
    let disconnected = "graph is disconnected";
    match &geo {
        None => {
            for check in [Diameter, CliqueEccentricity, GadgetDistances] {
                report.check(check.name(), false, disconnected);
            }
        }
        Some(geo) => {
            let d = geo.distances();
            let diameter = d.diameter();
            report.check(
                Diameter.name(),
                diameter == 3,
                format!("diameter {diameter}, expected 3"),
            );

            let clique = rg.clique();
            let bad: Vec<String> = clique
                .iter()
                .filter(|&v| d.eccentricity(v) != 2)
                .map(|v| format!("{}={}", rg.role(v), d.eccentricity(v)))
                .collect();
            report.check(
                CliqueEccentricity.name(),
                bad.is_empty(),
                if bad.is_empty() {
                    format!("all {} clique vertices have eccentricity 2", clique.len())
                } else {
                    format!("eccentricity differs from 2 at {}", bad.join(" "))
                },
            );

            let mut bad = Vec::new();
            for i in 0..n {
                let v = |r| rg.var_vertex(i, r);
                for (a, b) in [
                    (VarRole::X, VarRole::XBarPrime),
                    (VarRole::XBar, VarRole::XPrime1),
                ] {
                    let dist = d.get(v(a), v(b));
                    if dist != 3 {
                        bad.push(format!("dist({},{})={dist}", rg.role(v(a)), rg.role(v(b))));
                    }
                }
            }
            report.check(
                GadgetDistances.name(),
                bad.is_empty(),
                if bad.is_empty() {
                    format!("dist(x_i,xbar'_i) = dist(xbar_i,x'^1_i) = 3 for all {n} variables")
                } else {
                    bad.join(" ")
                },
            );
        }
    }

    let peo = is_perfect_elimination_ordering(g, &rg.layered_elimination_ordering())
        .expect("ordering covers every vertex");
    report.check(
        EliminationOrdering.name(),
        peo,
        if peo {
            "layered ordering is a perfect elimination ordering"
        } else {
            "layered ordering is not a perfect elimination ordering"
        },
    );

    let simplicial = simplicial_vertices(g);
    let pendant = rg.pendant_vertices();
    report.check(
        SimplicialVertices.name(),
        simplicial == pendant,
        format!(
            "{} simplicial vertices, expected the {} vertices x'^1, x'^2, xbar''",
            simplicial.len(),
            pendant.len()
        ),
    );

    match &geo {
        None => {
            for check in [LiteralTriplesConcave, ClauseBlocksConcave] {
                report.check(check.name(), false, disconnected);
            }
        }
        Some(geo) => {
            let bad: Vec<String> = (0..n)
                .filter(|&i| !geo.is_concave(&rg.literal_triple(i)).expect("same graph"))
                .map(|i| (i + 1).to_string())
                .collect();
            report.check(
                LiteralTriplesConcave.name(),
                bad.is_empty(),
                if bad.is_empty() {
                    format!("{{x_i, z_i, xbar_i}} concave for all {n} variables")
                } else {
                    format!("not concave for variables {}", bad.join(","))
                },
            );

            let bad: Vec<String> = (0..m)
                .filter(|&j| !geo.is_concave(&rg.clause_block(j)).expect("same graph"))
                .map(|j| (j + 1).to_string())
                .collect();
            report.check(
                ClauseBlocksConcave.name(),
                bad.is_empty(),
                if bad.is_empty() {
                    format!("V_j concave for all {m} clauses")
                } else {
                    format!("V_j not concave for clauses {}", bad.join(","))
                },
            );
        }
    }

    let gadget_edges = if n == 0 { 0 } else { rg.gadget_edges(0).len() };
    report
        .notes
        .push(format!("gadget edges per variable: {gadget_edges}"));
    report
}

/// The first satisfying assignment (by bitmask order) whose vertex set is
/// not a hull set, or `None` when every satisfying assignment maps to one.
pub fn forward_counterexample(rg: &ReductionGraph) -> Result<Option<Assignment>> {
    let geo = match Geodesics::new(rg.graph()) {
        Ok(geo) => geo,
        // No vertex set has a hull equal to V in a disconnected graph.
        Err(Error::Disconnected) => {
            return Ok(rg.cnf().satisfying_assignments()?.into_iter().next());
        }
        Err(e) => return Err(e),
    };
    for a in rg.cnf().satisfying_assignments()? {
        if !geo.is_hull_set(&assignment_to_hull_set(rg, &a)?)? {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy)]
pub struct EquivalenceOptions {
    /// Hull-evaluation budget for the solver.
    pub budget: Option<u64>,
    /// Largest `n` accepted for exhaustive assignment enumeration.
    pub max_variables: usize,
    pub execution: Execution,
}

impl Default for EquivalenceOptions {
    fn default() -> Self {
        EquivalenceOptions {
            budget: None,
            max_variables: MAX_BRUTEFORCE_VARIABLES,
            execution: Execution::default(),
        }
    }
}

/// Outcome of [`equivalence_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub satisfying: Vec<Assignment>,
    /// `k = 4n`.
    pub k: usize,
    /// A minimum hull set when `h ≤ k`; `None` means `h > k`.
    pub hull: Option<HullNumberResult>,
    pub report: Report,
}

impl EquivalenceReport {
    pub fn satisfiable(&self) -> bool {
        !self.satisfying.is_empty()
    }

    pub fn hull_number_at_most_k(&self) -> bool {
        self.hull.is_some()
    }

    pub fn all_passed(&self) -> bool {
        self.report.all_passed()
    }
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.report.fmt(f)
    }
}

/// Decides satisfiability by enumeration and `h(G) ≤ 4n` by the exact
/// solver, and checks that they agree. When a witness exists it must contain
/// the `3n` simplicial vertices and exactly one of `x_i, z_i, x̄_i` for each
/// `i`, and reading off `x_i` membership must satisfy the instance.
pub fn equivalence_check(
    cnf: &RestrictedCnf,
    opts: EquivalenceOptions,
) -> Result<EquivalenceReport> {
    let n = cnf.variable_count();
    let limit = opts.max_variables.min(MAX_BRUTEFORCE_VARIABLES);
    if n > limit {
        return Err(Error::TooLarge { size: n, limit });
    }
    let rg = build_reduction(cnf)?;
    let k = rg.k();

    let (satisfying, hull) = opts.execution.join(
        || cnf.satisfying_assignments(),
        || -> Result<Option<HullNumberResult>> {
            HullSolver::new(rg.graph())?
                .budget(opts.budget)
                .execution(opts.execution)
                .solve_within(k)
        },
    );
    let satisfying = satisfying?;
    let hull = hull?;
    let satisfiable = !satisfying.is_empty();

    let mut report = Report::default();
    report.notes.push(format!(
        "instance: n={n} m={} graph order {}",
        cnf.clause_count(),
        rg.graph().vertex_count()
    ));
    report.notes.push(format!(
        "satisfying assignments: {} of {}",
        satisfying.len(),
        1u64 << n
    ));
    report.notes.push(match &hull {
        Some(h) => format!("h={} witness {}", h.hull_number, h.witness),
        None => format!("h>{k}"),
    });

    let at_most_k = hull.is_some();
    report.check(
        "equivalence",
        satisfiable == at_most_k,
        format!(
            "{} and h {} k={k}",
            if satisfiable {
                "satisfiable"
            } else {
                "unsatisfiable"
            },
            if at_most_k { "<=" } else { ">" }
        ),
    );

    let geo = Geodesics::new(rg.graph())?;
    let mut bad_forward = None;
    for a in &satisfying {
        let s = assignment_to_hull_set(&rg, a)?;
        if s.len() != k || !geo.is_hull_set(&s)? {
            bad_forward = Some(a.clone());
            break;
        }
    }
    report.check(
        "forward",
        bad_forward.is_none(),
        match &bad_forward {
            None => format!(
                "every satisfying assignment ({}) gives a hull set of size {k}",
                satisfying.len()
            ),
            Some(a) => format!("assignment {a} does not give a hull set of size {k}"),
        },
    );

    if let Some(h) = &hull {
        let (ok, detail) = witness_shape(&rg, &h.witness);
        report.check("witness-shape", ok, detail);

        let a = extract_assignment(&rg, &h.witness);
        let sat = cnf.is_satisfied_by(&a);
        report.check(
            "backward",
            sat,
            format!(
                "extracted assignment {a} {}",
                if sat {
                    "satisfies the instance"
                } else {
                    "falsifies a clause"
                }
            ),
        );
    }

    Ok(EquivalenceReport {
        satisfying,
        k,
        hull,
        report,
    })
}

/// Whether `s` holds every simplicial vertex and exactly one vertex of each
/// literal triple `{x_i, z_i, x̄_i}`.
fn witness_shape(rg: &ReductionGraph, s: &VertexSet) -> (bool, String) {
    let pendant = rg.pendant_vertices();
    if !pendant.is_subset(s) {
        return (false, "witness misses a simplicial vertex".into());
    }
    let bad: Vec<String> = (0..rg.variable_count())
        .filter(|&i| rg.literal_triple(i).intersection(s).len() != 1)
        .map(|i| (i + 1).to_string())
        .collect();
    if bad.is_empty() {
        (
            true,
            format!(
                "all {} simplicial vertices and one of x_i, z_i, xbar_i per variable",
                pendant.len()
            ),
        )
    } else {
        (
            false,
            format!("variables {} not covered exactly once", bad.join(",")),
        )
    }
}
