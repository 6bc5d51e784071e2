use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use xi_core::exec::Exec;
use xi_core::verify::{run_suite, Bounds, Suite};

fn strategies() -> Vec<(&'static str, Exec)> {
    vec![
        ("sequential", Exec::Sequential),
        ("parallel", Exec::Parallel { jobs: None }),
    ]
}

fn bench_suite(c: &mut Criterion, suite: Suite, bounds: Bounds) {
    let mut group = c.benchmark_group(suite.name());
    group.sample_size(10);
    for (name, exec) in strategies() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| black_box(run_suite(suite, &bounds, exec)).pass)
        });
    }
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    let small = |len, nu, m| Bounds {
        max_len: Some(len),
        max_nu: Some(nu),
        max_m: Some(m),
        max_deg: Some(5),
    };
    bench_suite(c, Suite::FormulaVsOracle, small(9, 6, 4));
    bench_suite(c, Suite::Relations, small(9, 6, 4));
    bench_suite(c, Suite::MagicGenfun, small(9, 8, 4));
    bench_suite(c, Suite::RouXi, small(9, 6, 5));
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
