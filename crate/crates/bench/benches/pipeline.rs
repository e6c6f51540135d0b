use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use partitions_bench::gapped_set;
use partitions_core::{
    build_gf, count, count_solutions, enumerate_solutions, gamma_series, product_over_scales,
    verify, Cap, EvalMode, GfStatistic, IdentityId, PartSet, Statistic, VerifyOptions,
};

fn counting(c: &mut Criterion) {
    let primes = PartSet::primes();
    let naturals = PartSet::naturals();
    let gapped = gapped_set();
    c.bench_function("count/p primes n=2000", |b| {
        b.iter(|| count(Statistic::Unrestricted, &primes, black_box(2000)).unwrap())
    });
    c.bench_function("count/pbar_2 naturals n=2000", |b| {
        b.iter(|| count(Statistic::SignedBounded(2), &naturals, black_box(2000)).unwrap())
    });
    c.bench_function("count/even fibonacci n=1500", |b| {
        b.iter(|| {
            count(
                Statistic::EvenParts(Cap::Unbounded),
                &gapped,
                black_box(1500),
            )
            .unwrap()
        })
    });
}

fn series(c: &mut Criterion) {
    let naturals = PartSet::naturals();
    let primes = PartSet::primes();
    c.bench_function("series/gf pbar naturals order=512", |b| {
        b.iter(|| build_gf(GfStatistic::Signed, &naturals, black_box(512)))
    });
    c.bench_function("series/telescoping p_1 naturals base=2 order=192", |b| {
        b.iter(|| product_over_scales(GfStatistic::Bounded(1), &naturals, 2, black_box(192)))
    });
    c.bench_function("series/gamma alpha=2 primes order=256", |b| {
        b.iter(|| gamma_series(2, &primes, black_box(256)))
    });
}

fn solutions(c: &mut Criterion) {
    c.bench_function("solutions/enumerate n=48 base=2", |b| {
        b.iter(|| enumerate_solutions(black_box(48), 2).unwrap())
    });
    c.bench_function("solutions/count n=100000 base=2", |b| {
        b.iter(|| count_solutions(black_box(100_000), 2).unwrap())
    });
}

fn verification(c: &mut Criterion) {
    let primes = PartSet::primes();
    let squares = PartSet::squares();
    let convolution = VerifyOptions {
        mode: EvalMode::Convolution,
        ..VerifyOptions::default()
    };
    let both = VerifyOptions::default();
    c.bench_function("verify/forward primes alpha=2 N=150 convolution", |b| {
        b.iter(|| {
            verify(
                IdentityId::ForwardGeneral,
                &primes,
                2,
                black_box(150),
                &convolution,
            )
            .unwrap()
        })
    });
    c.bench_function("verify/inverse squares alpha=1 N=150 convolution", |b| {
        b.iter(|| {
            verify(
                IdentityId::Inverse,
                &squares,
                1,
                black_box(150),
                &convolution,
            )
            .unwrap()
        })
    });
    // Both evaluators up to the enumeration cap: dominated by matrix walks.
    c.bench_function("verify/signed-binary primes N=60 both", |b| {
        b.iter(|| verify(IdentityId::SignedBinary, &primes, 1, black_box(60), &both).unwrap())
    });
}

criterion_group!(benches, counting, series, solutions, verification);
criterion_main!(benches);
