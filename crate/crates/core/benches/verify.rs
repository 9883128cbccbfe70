//! Sequential vs data-parallel verification on representative workloads.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use equiline::construct;
use equiline::frames::{verify_equiangular, verify_equiangular_seq};
use equiline::LineSet;

fn workloads() -> Vec<(&'static str, LineSet)> {
    vec![
        ("one_third_n50", construct::family_one_third(50).unwrap()),
        ("two_angle_n40", construct::two_angle(40).unwrap()),
        ("circ_sa_2n_64x64", construct::circ_sa_2n(32).unwrap()),
        ("simplex_n30", construct::simplex(30).unwrap()),
    ]
}

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_equiangular");
    group.sample_size(10);
    for (name, ls) in workloads() {
        group.bench_with_input(BenchmarkId::new("sequential", name), &ls, |b, ls| {
            b.iter(|| verify_equiangular_seq(ls))
        });
        group.bench_with_input(BenchmarkId::new("parallel", name), &ls, |b, ls| {
            b.iter(|| verify_equiangular(ls))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_verify);
criterion_main!(benches);
