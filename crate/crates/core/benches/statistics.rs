use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use extrosym::distributions::DistributionSpec;
use extrosym::rng::replication_rng;
use extrosym::{delta_statistic, delta_statistic_22, RecordSpec, WindowSpec};

fn bench_statistic(c: &mut Criterion) {
    let mut group = c.benchmark_group("delta_statistic");
    for &n in &[50usize, 500, 5_000] {
        let mut rng = replication_rng(1, "bench/statistic", 0);
        let sample = DistributionSpec::StdNormal.sample(n, &mut rng).unwrap();
        let window = WindowSpec::new((n as f64).sqrt() as usize).unwrap();
        group.bench_with_input(BenchmarkId::new("generic_22", n), &n, |b, _| {
            b.iter(|| delta_statistic(black_box(&sample), RecordSpec::DEFAULT, window).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("closed_form_22", n), &n, |b, _| {
            b.iter(|| delta_statistic_22(black_box(&sample), window).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_statistic);
criterion_main!(benches);
