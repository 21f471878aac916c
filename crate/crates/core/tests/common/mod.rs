//! Seeded instance pools shared by the integration suites.
#![allow(dead_code)]

use facet_ideals::{generate, is_tree, Complex, Face, GeneratorConfig, GeneratorMode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn complex(facets: &[&str]) -> Complex {
    let raw: Vec<Vec<String>> = facets
        .iter()
        .map(|f| f.chars().map(|c| c.to_string()).collect())
        .collect();
    Complex::from_facets(&raw).unwrap()
}

pub fn face(c: &Complex, labels: &str) -> Face {
    let l: Vec<String> = labels.chars().map(|ch| ch.to_string()).collect();
    c.face(&l).unwrap()
}

pub fn cfg(
    seed: u64,
    mode: GeneratorMode,
    max_vertices: usize,
    max_facets: usize,
) -> GeneratorConfig {
    GeneratorConfig {
        seed,
        mode,
        min_vertices: 3.min(max_vertices),
        max_vertices,
        max_facets,
        max_facet_size: 4,
    }
}

/// First `n` generated complexes passing `keep`, scanning seeds from `base`.
pub fn pool(
    n: usize,
    base: u64,
    mode: GeneratorMode,
    max_vertices: usize,
    max_facets: usize,
    keep: impl Fn(&Complex) -> bool,
) -> Vec<Complex> {
    let mut out = Vec::with_capacity(n);
    let mut seed = base;
    while out.len() < n && seed < base + 200 * n as u64 {
        let c = generate(&cfg(seed, mode, max_vertices, max_facets)).unwrap();
        if keep(&c) {
            out.push(c);
        }
        seed += 1;
    }
    out
}

/// Vertex-disjoint union; labels of `b` get a `_2` suffix.
pub fn disjoint_union(a: &Complex, b: &Complex) -> Complex {
    let mut vertices: Vec<String> = a.universe().names().to_vec();
    vertices.extend(b.universe().names().iter().map(|v| format!("{v}_2")));
    let mut facets = a.facet_labels();
    facets.extend(
        b.facet_labels()
            .into_iter()
            .map(|f| f.into_iter().map(|v| format!("{v}_2")).collect()),
    );
    Complex::new(&vertices, &facets).unwrap()
}

pub fn trees(n: usize, base: u64) -> Vec<Complex> {
    pool(n, base, GeneratorMode::RandomTree, 14, 9, |_| true)
}

/// Trees, with every third one a disjoint union of two trees.
pub fn forests(n: usize, base: u64) -> Vec<Complex> {
    let t = trees(n + n / 3 + 1, base);
    let mut out = Vec::with_capacity(n);
    let mut k = 0;
    while out.len() < n {
        if out.len() % 3 == 2 {
            out.push(disjoint_union(&t[k], &t[k + 1]));
            k += 2;
        } else {
            out.push(t[k].clone());
            k += 1;
        }
        if k + 1 >= t.len() {
            k = 0;
        }
    }
    out
}

pub fn grafted(n: usize, base: u64) -> Vec<Complex> {
    pool(n, base, GeneratorMode::RandomGrafted, 14, 10, |_| true)
}

pub fn randoms(n: usize, base: u64) -> Vec<Complex> {
    pool(n, base, GeneratorMode::Random, 11, 8, |_| true)
}

pub fn grafted_trees(n: usize, base: u64) -> Vec<Complex> {
    pool(n, base, GeneratorMode::RandomGrafted, 14, 10, |c| {
        c.num_facets() > 1 && is_tree(c).unwrap().verdict
    })
}

/// Random subset of the universe, each vertex kept with probability `p`.
pub fn random_subset(rng: &mut ChaCha8Rng, universe: Face, p: f64) -> Face {
    Face::from_indices(universe.iter().filter(|_| rng.random_bool(p)))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
