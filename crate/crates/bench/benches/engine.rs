use a6ext_bench::{a6, a6_system};
use a6ext_core::chartab::character_table;
use a6ext_core::extbuild::build_candidate;
use a6ext_core::k3verify::{lattice_checks, solve_decomposition};
use a6ext_core::ExtensionKind;
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn chartab(c: &mut Criterion) {
    let g = a6();
    c.bench_function("character_table_a6", |b| b.iter(|| character_table(black_box(&g)).unwrap()));
}

fn extensions(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_candidate");
    group.sample_size(10);
    for kind in ExtensionKind::ALL {
        group.bench_function(kind.name(), |b| b.iter(|| build_candidate(kind)));
    }
    group.finish();
}

fn decomposition(c: &mut Criterion) {
    let sys = a6_system();
    c.bench_function("solve_decomposition", |b| b.iter(|| solve_decomposition(black_box(&sys))));
}

fn lattices(c: &mut Criterion) {
    c.bench_function("lattice_checks", |b| b.iter(lattice_checks));
}

criterion_group!(benches, chartab, extensions, decomposition, lattices);
criterion_main!(benches);
