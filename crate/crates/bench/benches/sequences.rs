use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cmseq_bench::sequences;
use cmseq_core::analysis::{block_frequencies, simple_normality_stats, PeriodSearch};
use cmseq_core::seqcore::jacobi;
use cmseq_core::{FactorSieve, SequenceSpec};

fn sieve(c: &mut Criterion) {
    let mut g = c.benchmark_group("sieve");
    for n in [10_000u64, 1_000_000] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| FactorSieve::new(black_box(n))));
    }
    g.finish();
}

fn values(c: &mut Criterion) {
    let mut g = c.benchmark_group("values_1e6");
    for spec in sequences() {
        g.bench_function(spec.name(), |b| b.iter(|| spec.values(black_box(1_000_000))));
    }
    g.finish();
}

fn point_queries(c: &mut Criterion) {
    c.bench_function("value_at_trial_division", |b| {
        b.iter(|| SequenceSpec::Liouville.value_at(black_box(999_999_937 * 6), None))
    });
    c.bench_function("jacobi_1e4", |b| {
        b.iter(|| (1..20_000u64).step_by(2).map(|n| jacobi(black_box(-1), n).unwrap() as i64).sum::<i64>())
    });
}

fn analysis(c: &mut Criterion) {
    c.bench_function("normality_liouville_1e6", |b| {
        b.iter(|| simple_normality_stats(&SequenceSpec::Liouville, black_box(1_000_000)))
    });
    c.bench_function("blocks_k8_1e6", |b| b.iter(|| block_frequencies(&SequenceSpec::Liouville, 1_000_000, 8)));
    let search = PeriodSearch::new(SequenceSpec::GaussianLiouville, 1_000_000).unwrap();
    c.bench_function("period_sweep_50x1000", |b| {
        b.iter(|| {
            (1..=50u64).flat_map(|k| (0..=1000u64).map(move |m| (k, m))).filter(|&(k, m)| search.find(k, m).is_ok()).count()
        })
    });
}

criterion_group!(benches, sieve, values, point_queries, analysis);
criterion_main!(benches);
