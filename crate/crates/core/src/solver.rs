//! Exact hull number.
//!
//! Every simplicial vertex belongs to every hull set: its neighbors are
//! pairwise adjacent, so it is never an inner vertex of a shortest path. The
//! search therefore starts from the simplicial set `M` and looks for the
//! fewest extra vertices, by iterative deepening on the number of extras.
//!
//! Within one depth, extras are picked in ascending index order and a
//! candidate `w` is skipped when it already lies in the hull of the partial
//! set `T`. This loses no minimum solution: if a minimum hull set `S` had an
//! extra `w` inside `hull(T)` for some `T ⊆ S \ {w}`, then
//! `hull(S \ {w}) = hull(S)` and `S` would not be minimum. So the extras of
//! any minimum hull set, listed in ascending order, form a path the search
//! visits, and the first solution found is the lexicographically smallest
//! one. Running the first-level branches in parallel and keeping the first
//! branch (in index order) that succeeds returns the same witness.

use std::sync::atomic::{AtomicU64, Ordering};

use fixedbitset::FixedBitSet;

use crate::chordal::simplicial_vertices;
use crate::convexity::Geodesics;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::par::Execution;
use crate::{Error, Result};

/// Default vertex cap for [`hull_number_bruteforce`].
pub const BRUTEFORCE_CAP: usize = 14;

/// A minimum hull set and its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullNumberResult {
    pub hull_number: usize,
    pub witness: VertexSet,
}

/// Search statistics of the last run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Hull evaluations, the unit the node budget is charged in.
    pub hull_evaluations: u64,
    /// Size of the simplicial starting set.
    pub mandatory: usize,
}

struct Exhausted;

pub struct HullSolver<'g> {
    geo: Geodesics<'g>,
    budget: Option<u64>,
    exec: Execution,
    evaluations: AtomicU64,
}

impl<'g> HullSolver<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        Ok(HullSolver {
            geo: Geodesics::new(g)?,
            budget: None,
            exec: Execution::default(),
            evaluations: AtomicU64::new(0),
        })
    }

    /// Maximum number of hull evaluations; `None` is unlimited.
    pub fn budget(mut self, budget: Option<u64>) -> Self {
        self.budget = budget;
        self
    }

    pub fn execution(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }

    pub fn stats(&self) -> SearchStats {
        SearchStats {
            hull_evaluations: self.evaluations.load(Ordering::Relaxed),
            mandatory: simplicial_vertices(self.geo.graph()).len(),
        }
    }

    /// The hull number with the lexicographically first minimum witness.
    pub fn solve(&self) -> Result<HullNumberResult> {
        let n = self.geo.vertex_count();
        Ok(self.solve_within(n)?.expect("V(G) is a hull set"))
    }

    /// A minimum hull set if one of size at most `max_size` exists.
    pub fn solve_within(&self, max_size: usize) -> Result<Option<HullNumberResult>> {
        self.evaluations.store(0, Ordering::Relaxed);
        let g = self.geo.graph();
        let n = g.vertex_count();
        let mandatory = simplicial_vertices(g);
        let base = self
            .evaluate(|| self.geo.hull_incremental(mandatory.bits()))
            .map_err(|_| Error::BudgetExceeded {
                lower_bound: mandatory.len().max(1),
            })?;

        for extra in 0..=n - mandatory.len() {
            let size = mandatory.len() + extra;
            if size > max_size {
                return Ok(None);
            }
            let found = if extra == 0 {
                Ok(base.is_full().then(Vec::new))
            } else {
                let first: Vec<Vertex> = base.zeroes().collect();
                self.exec
                    .find_map_first(&first, |&w| {
                        let expanded = match self.evaluate(|| self.geo.extend_hull(&base, w)) {
                            Ok(h) => h,
                            Err(e) => return Some(Err(e)),
                        };
                        let mut picks = vec![w];
                        match self.extend(&expanded, w, extra - 1, &mut picks) {
                            Ok(true) => Some(Ok(picks)),
                            Ok(false) => None,
                            Err(e) => Some(Err(e)),
                        }
                    })
                    .transpose()
            };
            match found {
                Ok(Some(picks)) => {
                    let mut witness = mandatory.clone();
                    for v in picks {
                        witness.insert(v);
                    }
                    return Ok(Some(HullNumberResult {
                        hull_number: witness.len(),
                        witness,
                    }));
                }
                Ok(None) => {}
                Err(Exhausted) => return Err(Error::BudgetExceeded { lower_bound: size }),
            }
        }
        unreachable!("the full vertex set is a hull set")
    }

    fn evaluate(
        &self,
        f: impl FnOnce() -> FixedBitSet,
    ) -> std::result::Result<FixedBitSet, Exhausted> {
        let used = self.evaluations.fetch_add(1, Ordering::Relaxed) + 1;
        if self.budget.is_some_and(|b| used > b) {
            return Err(Exhausted);
        }
        Ok(f())
    }

    /// Depth-first extension of the current partial set by `remaining`
    /// more picks above `last`; `hull` is the hull of the partial set.
    fn extend(
        &self,
        hull: &FixedBitSet,
        last: Vertex,
        remaining: usize,
        picks: &mut Vec<Vertex>,
    ) -> std::result::Result<bool, Exhausted> {
        if remaining == 0 {
            return Ok(hull.is_full());
        }
        let n = hull.len();
        for w in last + 1..n {
            if hull.contains(w) {
                continue;
            }
            // Not enough indices left above w to place the remaining picks.
            if n - w < remaining {
                break;
            }
            let next = self.evaluate(|| self.geo.extend_hull(hull, w))?;
            picks.push(w);
            if self.extend(&next, w, remaining - 1, picks)? {
                return Ok(true);
            }
            picks.pop();
        }
        Ok(false)
    }
}

/// Exact hull number; `node_budget` caps the number of hull evaluations.
pub fn hull_number_exact(g: &Graph, node_budget: Option<u64>) -> Result<HullNumberResult> {
    HullSolver::new(g)?.budget(node_budget).solve()
}

/// Reference implementation: tries every subset by increasing size, in
/// lexicographic order within a size. Refuses graphs over
/// [`BRUTEFORCE_CAP`] vertices.
pub fn hull_number_bruteforce(g: &Graph) -> Result<HullNumberResult> {
    hull_number_bruteforce_capped(g, BRUTEFORCE_CAP)
}

pub fn hull_number_bruteforce_capped(g: &Graph, cap: usize) -> Result<HullNumberResult> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::TooLarge {
            size: n,
            limit: cap,
        });
    }
    let geo = Geodesics::new(g)?;
    for size in 1..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let s = VertexSet::from_indices(n, combo.iter().copied())?;
            if geo.is_hull_set(&s)? {
                return Ok(HullNumberResult {
                    hull_number: size,
                    witness: s,
                });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set is a hull set")
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}
