use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};
use mzv_core::numeric::{ez_mzv, MzvIndex};
use mzv_core::parallel::{map_collect, set_execution, Execution};
use mzv_core::verify::{run_suite, Suite};
use mzv_core::{clear_caches, EvalConfig};

// Caches are cleared before every iteration so both modes time cold work.
fn modes() -> [(&'static str, Execution); 2] {
    [("parallel", Execution::Parallel), ("sequential", Execution::Sequential)]
}

fn double_zeta_grid(c: &mut Criterion) {
    let cfg = EvalConfig::default().with_digits(60);
    let grid: Vec<MzvIndex> = (1..=8)
        .flat_map(|a| (2..=8).map(move |b| MzvIndex::new(vec![a, b]).unwrap()))
        .collect();
    let mut group = c.benchmark_group("double_zeta_grid");
    group.sample_size(10);
    for (name, mode) in modes() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            set_execution(mode);
            b.iter_batched(clear_caches, |_| map_collect(&grid, |i| ez_mzv(i, &cfg).unwrap()), BatchSize::PerIteration);
        });
    }
    group.finish();
    set_execution(Execution::Parallel);
}

fn relations_suite(c: &mut Criterion) {
    let cfg = EvalConfig::default().with_digits(40);
    let mut group = c.benchmark_group("relations_suite");
    group.sample_size(10);
    for (name, mode) in modes() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            set_execution(mode);
            b.iter_batched(clear_caches, |_| run_suite(Suite::Relations, &cfg), BatchSize::PerIteration);
        });
    }
    group.finish();
    set_execution(Execution::Parallel);
}

criterion_group!(benches, double_zeta_grid, relations_suite);
criterion_main!(benches);
