use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fdfw_bench::{families, random};
use fdfw_core::{
    classical_congruence, optimal_leading_congruence, optimal_progress_congruence, progress_congruence_improved,
    subset_congruence, DEFAULT_BUDGET,
};

fn congruences(c: &mut Criterion) {
    let mut inputs = families(&[3, 4, 5]);
    inputs.extend([4, 6].map(random));

    let mut g = c.benchmark_group("classical");
    for (id, a) in inputs.iter().filter(|(id, _)| !id.ends_with("/5")) {
        g.bench_with_input(BenchmarkId::from_parameter(id), a, |b, a| {
            b.iter(|| classical_congruence(black_box(a), DEFAULT_BUDGET).unwrap().len())
        });
    }
    g.finish();

    let mut g = c.benchmark_group("improved");
    for (id, a) in &inputs {
        g.bench_with_input(BenchmarkId::from_parameter(id), a, |b, a| {
            b.iter(|| {
                let s = subset_congruence(black_box(a));
                s.classes()
                    .iter()
                    .map(|c| {
                        progress_congruence_improved(a, &c.payload, DEFAULT_BUDGET)
                            .unwrap()
                            .len()
                    })
                    .sum::<usize>()
            })
        });
    }
    g.finish();

    let mut g = c.benchmark_group("optimal");
    for (id, a) in &inputs {
        g.bench_with_input(BenchmarkId::from_parameter(id), a, |b, a| {
            b.iter(|| {
                let o = optimal_leading_congruence(black_box(a), DEFAULT_BUDGET).unwrap();
                o.classes()
                    .iter()
                    .map(|c| {
                        optimal_progress_congruence(a, &c.payload, DEFAULT_BUDGET)
                            .unwrap()
                            .len()
                    })
                    .sum::<usize>()
            })
        });
    }
    g.finish();
}

criterion_group!(benches, congruences);
criterion_main!(benches);
