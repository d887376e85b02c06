use betti_bench::{rank_matrix, FIELDS};
use betti_core::homology::rank;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn elimination(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank");
    for n in [20, 60, 120] {
        let m = rank_matrix(n, n + 5);
        for field in FIELDS {
            group.bench_with_input(BenchmarkId::new(field.to_string(), n), &m, |b, m| b.iter(|| rank(m, field)));
        }
    }
    group.finish();
}

criterion_group!(benches, elimination);
criterion_main!(benches);
