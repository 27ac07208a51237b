use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use lbraid::braid::{check_braiding_leibniz, identity_bxmod};
use lbraid::equiv::roundtrip_check;
use lbraid::exactla::rref;
use lbraid::fixtures::{l2, r2, sl2};
use lbraid_bench::{hilbert, seeds};
use lbraid::nat::{tensor_square, Regime};

fn bench_rref(c: &mut Criterion) {
    let mut g = c.benchmark_group("rref");
    for n in [4, 8, 12] {
        let m = hilbert(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| rref(black_box(m))));
    }
    g.finish();
}

fn bench_tensor(c: &mut Criterion) {
    let mut g = c.benchmark_group("tensor_square");
    for a in [l2(), r2(), sl2()] {
        g.bench_with_input(BenchmarkId::from_parameter(&a.name), &a, |b, a| {
            b.iter(|| tensor_square(black_box(a), Regime::Leibniz).unwrap())
        });
    }
    g.finish();
}

fn bench_equivalence(c: &mut Criterion) {
    let seeds = seeds();
    c.bench_function("roundtrip_check/standard_seeds", |b| b.iter(|| roundtrip_check(black_box(&seeds))));
    let z = identity_bxmod(&sl2()).unwrap();
    c.bench_function("check_braiding_leibniz/sl2", |b| b.iter(|| check_braiding_leibniz(black_box(&z))));
}

criterion_group!(benches, bench_rref, bench_tensor, bench_equivalence);
criterion_main!(benches);
