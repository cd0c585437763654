use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use geohull::convexity::Geodesics;
use geohull::reduction::{build_reduction, random_restricted_cnf};
use geohull::solver::HullSolver;
use geohull::Execution;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn satisfiable_instance(n: usize) -> geohull::reduction::RestrictedCnf {
    (0..)
        .map(|seed| random_restricted_cnf(n, seed))
        .find(|cnf| !cnf.satisfying_assignments().unwrap().is_empty())
        .unwrap()
}

fn geodesics(c: &mut Criterion) {
    let rg = build_reduction(&random_restricted_cnf(12, 0)).unwrap();
    let mut group = c.benchmark_group("geodesics");
    for (name, exec) in MODES {
        group.bench_with_input(
            BenchmarkId::new(name, rg.graph().vertex_count()),
            &exec,
            |b, &exec| b.iter(|| Geodesics::with_execution(black_box(rg.graph()), exec).unwrap()),
        );
    }
    group.finish();

    let geo = Geodesics::new(rg.graph()).unwrap();
    let mut group = c.benchmark_group("dependencies");
    for (name, exec) in MODES {
        group.bench_with_input(
            BenchmarkId::new(name, rg.graph().vertex_count()),
            &exec,
            |b, &exec| b.iter(|| geo.dependencies_with(exec).len()),
        );
    }
    group.finish();
}

fn hull_number(c: &mut Criterion) {
    let mut group = c.benchmark_group("hull_number");
    group.sample_size(10);
    for n in [3, 4] {
        let rg = build_reduction(&satisfiable_instance(n)).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &exec, |b, &exec| {
                b.iter(|| {
                    HullSolver::new(rg.graph())
                        .unwrap()
                        .execution(exec)
                        .solve()
                        .unwrap()
                        .hull_number
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, geodesics, hull_number);
criterion_main!(benches);
