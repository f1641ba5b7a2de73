use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use monideal::{
    detect_blocks, evaluate_max_sup, family_f, family_f_named, irreducible_decomposition,
    pm_ideal, scan, MonomialIdeal, Rational, ScanOptions, SymbolicCache,
};

fn symbolic_powers(c: &mut Criterion) {
    let mut group = c.benchmark_group("symbolic_power");
    for d in 1..=3 {
        let f = family_f(d).unwrap();
        group.bench_with_input(BenchmarkId::new("F_d n=6", d), &f, |b, f| {
            b.iter(|| SymbolicCache::new().symbolic_power(black_box(f), 6).unwrap())
        });
    }
    let p2 = pm_ideal(2).unwrap();
    let blocks = detect_blocks(&p2).unwrap();
    group.sample_size(10);
    group.bench_function("P_2 s=3 direct", |b| {
        b.iter(|| SymbolicCache::new().symbolic_power(black_box(&p2), 3).unwrap())
    });
    group.bench_function("P_2 s=3 blockwise", |b| {
        b.iter(|| SymbolicCache::new().symbolic_power_blockwise(black_box(&blocks), 3).unwrap())
    });
    group.finish();
}

fn decompositions(c: &mut Criterion) {
    let mut group = c.benchmark_group("irreducible_decomposition");
    for m in 2..=3 {
        let p = pm_ideal(m).unwrap();
        group.bench_with_input(BenchmarkId::new("P_m", m), &p, |b, p| {
            b.iter(|| irreducible_decomposition(black_box(p)).unwrap())
        });
    }
    let f3 = family_f(3).unwrap().power(4).unwrap();
    group.bench_function("F_3^4", |b| b.iter(|| irreducible_decomposition(black_box(&f3)).unwrap()));
    group.finish();
}

fn scans(c: &mut Criterion) {
    let sum = MonomialIdeal::direct_sum(&[family_f(1).unwrap(), family_f_named(2, ["t", "u", "v"]).unwrap()])
        .unwrap();
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    for shortcuts in [true, false] {
        let options = ScanOptions { shortcuts, ..ScanOptions::new(5, 4) };
        group.bench_with_input(BenchmarkId::new("F_1+F_2 5x4 shortcuts", shortcuts), &options, |b, o| {
            b.iter(|| scan(black_box(&sum), *o).unwrap())
        });
    }
    group.finish();
}

fn bounds(c: &mut Criterion) {
    let a: Rational = monideal::parse_rational("7/5").unwrap();
    let b: Rational = monideal::parse_rational("11/9").unwrap();
    c.bench_function("evaluate_max_sup nmax=50", |bench| {
        bench.iter(|| evaluate_max_sup(black_box(&a), black_box(&b), 50).unwrap())
    });
}

criterion_group!(benches, symbolic_powers, decompositions, scans, bounds);
criterion_main!(benches);
