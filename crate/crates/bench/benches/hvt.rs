use betti_bench::chordal_inputs;
use betti_core::chordal::{hvt_betti, realize_chordal};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn recursion(c: &mut Criterion) {
    let mut group = c.benchmark_group("hvt");
    for (name, g) in chordal_inputs() {
        group.bench_with_input(BenchmarkId::new("betti", name), &g, |b, g| b.iter(|| hvt_betti(g).unwrap()));
        group.bench_with_input(BenchmarkId::new("realize", name), &g, |b, g| b.iter(|| realize_chordal(g).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, recursion);
criterion_main!(benches);
