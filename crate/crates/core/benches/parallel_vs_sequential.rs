//! Each workload runs inside a one-thread rayon pool and inside the default
//! pool. Build with `--no-default-features` for the rayon-free code path.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use facet_ideals::{
    cm_reisner, generate, is_tree, minimal_vertex_covers, Complex, GeneratorConfig, GeneratorMode,
};
use rayon::ThreadPoolBuilder;

fn instance(
    mode: GeneratorMode,
    seed: u64,
    max_vertices: usize,
    max_facets: usize,
    pick: impl Fn(&Complex) -> bool,
) -> Complex {
    (seed..seed + 5_000)
        .map(|s| {
            generate(&GeneratorConfig {
                seed: s,
                mode,
                min_vertices: max_vertices,
                max_vertices,
                max_facets,
                max_facet_size: 4,
            })
            .unwrap()
        })
        .find(|c| pick(c))
        .expect("some seed yields a suitable instance")
}

fn bench(c: &mut Criterion) {
    let pools = [
        (
            "1-thread",
            ThreadPoolBuilder::new().num_threads(1).build().unwrap(),
        ),
        ("default", ThreadPoolBuilder::new().build().unwrap()),
    ];

    let dense = instance(GeneratorMode::Random, 1, 22, 18, |c| c.num_facets() >= 16);
    let tree = instance(GeneratorMode::RandomTree, 1, 24, 18, |c| {
        c.num_facets() >= 14
    });
    let grafted = instance(GeneratorMode::RandomGrafted, 1, 16, 16, |c| {
        c.universe().len() >= 14
    });

    let mut g = c.benchmark_group("covers");
    for (name, pool) in &pools {
        g.bench_with_input(BenchmarkId::from_parameter(name), &dense, |b, d| {
            b.iter(|| pool.install(|| minimal_vertex_covers(d).unwrap()))
        });
    }
    g.finish();

    let mut g = c.benchmark_group("tree_recognition");
    g.sample_size(10);
    for (name, pool) in &pools {
        g.bench_with_input(BenchmarkId::from_parameter(name), &tree, |b, d| {
            b.iter(|| pool.install(|| is_tree(d).unwrap()))
        });
    }
    g.finish();

    let mut g = c.benchmark_group("reisner");
    g.sample_size(10);
    for (name, pool) in &pools {
        g.bench_with_input(BenchmarkId::from_parameter(name), &grafted, |b, d| {
            b.iter(|| pool.install(|| cm_reisner(d, 0).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
