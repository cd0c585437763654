use geohull::chordal::{chordality, simplicial_vertices};
use geohull::convexity::Geodesics;
use geohull::fixtures::sample_cnf;
use geohull::reduction::{
    assignment_to_hull_set, build_reduction, hull_set_to_assignment, random_restricted_cnf,
    verify_structure, Assignment,
};
use geohull::solver::HullSolver;
use geohull::Graph;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn generated_reductions_pass_every_structure_check(n in 1usize..=8, seed in any::<u64>()) {
        let cnf = random_restricted_cnf(n, seed);
        prop_assert!(cnf.validate().is_empty());
        let rg = build_reduction(&cnf).unwrap();
        let report = verify_structure(&rg);
        prop_assert!(report.all_passed(), "{}", report);
        prop_assert!(chordality(rg.graph()).is_some());
        prop_assert_eq!(simplicial_vertices(rg.graph()), rg.pendant_vertices());
    }

    #[test]
    fn assignments_round_trip(n in 1usize..=6, seed in any::<u64>(), mask in any::<u64>()) {
        let cnf = random_restricted_cnf(n, seed);
        let rg = build_reduction(&cnf).unwrap();
        let a = Assignment::from_mask(n, mask);
        let s = assignment_to_hull_set(&rg, &a).unwrap();
        prop_assert_eq!(s.len(), 4 * n);
        let geo = Geodesics::new(rg.graph()).unwrap();
        let is_hull = geo.is_hull_set(&s).unwrap();
        // Hull set exactly for satisfying assignments.
        prop_assert_eq!(is_hull, cnf.is_satisfied_by(&a));
        if is_hull {
            prop_assert_eq!(hull_set_to_assignment(&rg, &s).unwrap(), a);
        }
    }

    #[test]
    fn solver_witnesses_decode_to_satisfying_assignments(n in 1usize..=4, seed in any::<u64>()) {
        let cnf = random_restricted_cnf(n, seed);
        let rg = build_reduction(&cnf).unwrap();
        let found = HullSolver::new(rg.graph()).unwrap().solve_within(rg.k()).unwrap();
        match found {
            Some(h) => {
                prop_assert_eq!(h.hull_number, 4 * n);
                let a = hull_set_to_assignment(&rg, &h.witness).unwrap();
                prop_assert!(cnf.is_satisfied_by(&a));
            }
            None => prop_assert!(cnf.satisfying_assignments().unwrap().is_empty()),
        }
    }
}

#[test]
fn sample_graph_text_round_trip() {
    let rg = build_reduction(&sample_cnf()).unwrap();
    let text = rg.graph().to_text();
    let parsed = Graph::parse(&text).unwrap();
    assert_eq!(&parsed, rg.graph());
    assert_eq!(parsed.to_text(), text);
    assert_eq!(text.lines().next(), Some("39 144"));
}
