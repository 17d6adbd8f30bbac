use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use knotkh::{build_complex, homology, homology_fast};
use knotkh_bench::{knot, scrambled, trefoil_satellite};

fn paths(c: &mut Criterion) {
    let mut g = c.benchmark_group("reduced");
    for name in ["trefoil", "4_1", "7_4", "10_124"] {
        let d = knot(name);
        g.bench_with_input(BenchmarkId::new("fast", name), &d, |b, d| {
            b.iter(|| homology_fast(black_box(d), true).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("naive", name), &d, |b, d| {
            b.iter(|| homology(&build_complex(black_box(d), true).unwrap()).unwrap())
        });
    }
    g.finish();
}

fn satellites(c: &mut Criterion) {
    let mut g = c.benchmark_group("trefoil_satellite");
    g.sample_size(10);
    for n in [0, 1, 2] {
        let d = trefoil_satellite(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &d, |b, d| b.iter(|| homology_fast(d, true).unwrap()));
    }
    g.finish();
}

fn f2_rank(c: &mut Criterion) {
    let mut g = c.benchmark_group("f2_rank");
    for n in [64, 256, 1024] {
        let m = scrambled(n, 7);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| m.rank()));
    }
    g.finish();
}

criterion_group!(benches, paths, satellites, f2_rank);
criterion_main!(benches);
