//! Compares the rayon-parallel replication loop against the always-compiled
//! sequential fallback on the same configuration. The two produce identical
//! vectors; the interesting number is the wall-clock ratio.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use extrosym::montecarlo::{null_statistics, null_statistics_seq};
use extrosym::{McConfig, WindowSpec};

fn bench_null_statistics(c: &mut Criterion) {
    let mut group = c.benchmark_group("null_statistics");
    group.sample_size(10);
    for &(n, m, reps) in &[(50usize, 5usize, 2_000usize), (100, 10, 2_000)] {
        let mut cfg = McConfig::new(n, WindowSpec::new(m).unwrap(), 7);
        cfg.reps = reps;
        group.bench_with_input(
            BenchmarkId::new("sequential", format!("N{n}_m{m}_r{reps}")),
            &cfg,
            |b, cfg| b.iter(|| null_statistics_seq(cfg).unwrap()),
        );
        // with `--no-default-features` the default path is itself sequential
        group.bench_with_input(
            BenchmarkId::new("default", format!("N{n}_m{m}_r{reps}")),
            &cfg,
            |b, cfg| b.iter(|| null_statistics(cfg).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_null_statistics);
criterion_main!(benches);
