//! Small named inputs used by the tests, the CLI and the benches.

use crate::graph::Graph;
use crate::reduction::{Literal, RestrictedCnf};

/// Five-vertex chordal graph `x1, x2, x3, t, z` (indices 0..4): the path
/// `x1 x2 x3 t z` plus the chords `x2 t` and `x3 z`.
pub fn fig2() -> Graph {
    Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3), (2, 4)])
        .expect("valid edges")
        .with_names(["x1", "x2", "x3", "t", "z"])
}

/// `(x1 ∨ x2 ∨ x3) ∧ (x1 ∨ x2 ∨ x3) ∧ (¬x1 ∨ ¬x2 ∨ ¬x3)`.
pub fn sample_cnf() -> RestrictedCnf {
    let pos: Vec<_> = (0..3).map(Literal::pos).collect();
    let neg: Vec<_> = (0..3).map(Literal::neg).collect();
    RestrictedCnf::new(3, vec![pos.clone(), pos, neg])
}

/// `(x1) ∧ (x1) ∧ (¬x1)`: the smallest restricted instance. Unsatisfiable.
pub fn single_variable_cnf() -> RestrictedCnf {
    RestrictedCnf::new(
        1,
        vec![
            vec![Literal::pos(0)],
            vec![Literal::pos(0)],
            vec![Literal::neg(0)],
        ],
    )
}
