use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use modinv_core::coinvariants::coinvariant_profile;
use modinv_core::invariants::{noether_number, EngineConfig, InvariantEngine};
use modinv_core::linalg::Echelon;
use modinv_core::{ModuleSpec, PrimeField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn spec(text: &str, p: u32) -> ModuleSpec {
    ModuleSpec::parse(text, p).unwrap()
}

fn bench_rref(c: &mut Criterion) {
    let mut group = c.benchmark_group("rref");
    for (p, n) in [(5u32, 64usize), (65521, 64), (5, 256)] {
        let field = PrimeField::new(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let rows: Vec<Vec<u32>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        group.bench_with_input(BenchmarkId::new(format!("p{p}"), n), &rows, |b, rows| {
            b.iter(|| Echelon::from_rows(field, black_box(rows.clone()), n).rank())
        });
    }
    group.finish();
}

fn bench_kernel(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariant_block");
    for (text, p, mu) in [("V4", 5u32, vec![7u32]), ("V2+V4", 5, vec![4, 7]), ("2V3", 3, vec![3, 3])] {
        let s = Arc::new(spec(text, p));
        group.bench_function(format!("{text}_p{p}_{mu:?}"), |b| {
            b.iter(|| {
                let mut e = InvariantEngine::new(Arc::clone(&s), EngineConfig::default());
                e.invariants(black_box(&mu)).unwrap().rank()
            })
        });
    }
    group.finish();
}

fn bench_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("noether_scan");
    group.sample_size(10);
    for (text, p) in [("V5", 5u32), ("2V3", 3), ("4V2", 2), ("V2+V4", 5)] {
        let s = spec(text, p);
        group.bench_function(format!("{text}_p{p}"), |b| b.iter(|| noether_number(black_box(&s)).unwrap().beta));
    }
    group.finish();
}

fn bench_coinvariants(c: &mut Criterion) {
    let mut group = c.benchmark_group("coinvariants");
    group.sample_size(10);
    for (text, p) in [("V4", 5u32), ("3V2", 3)] {
        let s = spec(text, p);
        group.bench_function(format!("{text}_p{p}"), |b| {
            b.iter(|| coinvariant_profile(black_box(&s)).unwrap().top_degree)
        });
    }
    group.finish();
}

criterion_group!(benches, bench_rref, bench_kernel, bench_scan, bench_coinvariants);
criterion_main!(benches);
