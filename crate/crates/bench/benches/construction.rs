//! Construction and certification benchmarks. The interesting comparison
//! is the closed-form ETF route against the eigendecomposition route: the
//! former is O(d) per frame vector, the latter pays for a full Jacobi
//! diagonalization of the (d+1) x (d+1) Gram matrix.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use kframe_core::{
    binomial_frame, certify, etf_fast_path, etf_via_eig, gram_from_signature, hermitian_eig,
    mub_family_odd_prime, muh_frame, signature_from_seed, SeedVector,
};

fn alternating_seed(len: usize) -> SeedVector {
    let signs: Vec<f64> = (0..len)
        .map(|i| if i % 3 == 0 { -1.0 } else { 1.0 })
        .collect();
    SeedVector::from_signs(&signs).unwrap()
}

fn etf_paths(c: &mut Criterion) {
    let mut group = c.benchmark_group("etf");
    for d in [8usize, 32, 64] {
        let seed = alternating_seed(d + 1);
        group.bench_with_input(BenchmarkId::new("fast_path", d), &seed, |b, seed| {
            b.iter(|| etf_fast_path(black_box(seed)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("via_eig", d), &seed, |b, seed| {
            b.iter(|| etf_via_eig(black_box(seed)).unwrap())
        });
    }
    group.finish();
}

fn eigensolver(c: &mut Criterion) {
    let mut group = c.benchmark_group("hermitian_eig");
    for d in [8usize, 32, 64] {
        let seed = alternating_seed(d + 1);
        let gram = gram_from_signature(&signature_from_seed(&seed), d).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(d), &gram, |b, gram| {
            b.iter(|| hermitian_eig(black_box(gram), 1e-12).unwrap())
        });
    }
    group.finish();
}

fn k_angle(c: &mut Criterion) {
    c.bench_function("binomial_frame_9_4", |b| {
        b.iter(|| binomial_frame(black_box(9), black_box(4)).unwrap())
    });

    let frame = muh_frame(&mub_family_odd_prime(7, 7).unwrap()).unwrap();
    c.bench_function("certify_muh_56_7", |b| {
        b.iter(|| certify(black_box(&frame), 1e-9))
    });
}

criterion_group!(benches, etf_paths, eigensolver, k_angle);
criterion_main!(benches);
