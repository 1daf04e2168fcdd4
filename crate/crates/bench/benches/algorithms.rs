use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use secdom::generators::{gen_basic, BasicFamily};
use secdom::{independence_number, min_secure_dominating_set, Options};
use secdom_bench::cases;

fn constructions(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct");
    for case in cases() {
        let id = BenchmarkId::new(case.class.name(), &case.name);
        group.bench_with_input(id, &case.graph, |b, g| {
            b.iter(|| case.class.construct(black_box(g), Options::default()).unwrap())
        });
    }
    group.finish();
}

fn exact_solvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    for n in [8, 10, 12] {
        let g = gen_basic(BasicFamily::Cycle, n).unwrap();
        group.bench_with_input(BenchmarkId::new("alpha-cycle", n), &g, |b, g| {
            b.iter(|| independence_number(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("gamma-s-cycle", n), &g, |b, g| {
            b.iter(|| min_secure_dominating_set(black_box(g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, constructions, exact_solvers);
criterion_main!(benches);
