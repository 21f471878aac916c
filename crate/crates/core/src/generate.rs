//! Seeded random complexes for property tests and the `random` CLI verb.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Face, VertexUniverse};
use crate::error::{Error, Result};
use crate::transform::graft_classes;
use crate::tree::is_tree;

pub const MAX_GENERATED_VERTICES: usize = 24;
pub const MAX_GENERATED_FACETS: usize = 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorMode {
    Random,
    RandomTree,
    RandomGrafted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub max_facets: usize,
    pub max_facet_size: usize,
    pub mode: GeneratorMode,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            seed: 0,
            min_vertices: 3,
            max_vertices: 10,
            max_facets: 8,
            max_facet_size: 4,
            mode: GeneratorMode::Random,
        }
    }
}

impl GeneratorConfig {
    pub fn new(seed: u64, mode: GeneratorMode) -> Self {
        GeneratorConfig {
            seed,
            mode,
            ..Default::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_vertices > MAX_GENERATED_VERTICES {
            return Err(Error::BoundsTooLarge(format!(
                "max_vertices {} exceeds {MAX_GENERATED_VERTICES}",
                self.max_vertices
            )));
        }
        if self.max_facets > MAX_GENERATED_FACETS {
            return Err(Error::BoundsTooLarge(format!(
                "max_facets {} exceeds {MAX_GENERATED_FACETS}",
                self.max_facets
            )));
        }
        if self.max_facets == 0 || self.max_facet_size == 0 || self.max_vertices == 0 {
            return Err(Error::BoundsTooLarge("bounds must be positive".into()));
        }
        if self.min_vertices > self.max_vertices {
            return Err(Error::BoundsTooLarge(
                "min_vertices exceeds max_vertices".into(),
            ));
        }
        if self.mode == GeneratorMode::RandomGrafted && self.max_vertices < 2 {
            return Err(Error::BoundsTooLarge(
                "grafting needs at least two vertices".into(),
            ));
        }
        Ok(())
    }
}

fn label(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("v{i}")
    }
}

fn universe(n: usize) -> VertexUniverse {
    let labels: Vec<String> = (0..n).map(label).collect();
    VertexUniverse::new(&labels).expect("distinct labels")
}

/// Deterministic in `config`: equal configs give equal complexes.
pub fn generate(config: &GeneratorConfig) -> Result<Complex> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    match config.mode {
        GeneratorMode::Random => Ok(random_complex(&mut rng, config)),
        GeneratorMode::RandomTree => Ok(random_tree(&mut rng, config)),
        GeneratorMode::RandomGrafted => random_grafted(&mut rng, config),
    }
}

/// Facets are drawn one at a time; a draw comparable with an earlier facet is
/// rejected.
fn random_complex(rng: &mut ChaCha8Rng, cfg: &GeneratorConfig) -> Complex {
    let n = rng.random_range(cfg.min_vertices.max(1)..=cfg.max_vertices);
    let q = rng.random_range(1..=cfg.max_facets);
    let top = cfg.max_facet_size.min(n);
    let mut faces: Vec<Face> = Vec::with_capacity(q);
    for _ in 0..20 * q {
        if faces.len() == q {
            break;
        }
        let s = rng.random_range(1..=top);
        let f = Face::from_indices(rand::seq::index::sample(rng, n, s));
        if faces.iter().all(|g| !f.is_subset(*g) && !g.is_subset(f)) {
            faces.push(f);
        }
    }
    Complex::from_faces(universe(n), faces)
        .expect("sampled faces are valid")
        .restrict_to_support()
}

/// Leaf-attachment growth: each new facet meets one existing facet in a
/// nonempty proper part of it and brings at least one fresh vertex. Every
/// step is re-verified with the tree check, and rejected steps are skipped.
fn random_tree(rng: &mut ChaCha8Rng, cfg: &GeneratorConfig) -> Complex {
    let target = rng.random_range(1..=cfg.max_facets);
    let budget = rng.random_range(cfg.min_vertices.max(1)..=cfg.max_vertices);
    let first = rng.random_range(1..=cfg.max_facet_size.min(budget));
    let mut used = first;
    let mut faces = vec![Face::from_indices(0..first)];
    let mut attempts = 0;
    while faces.len() < target && used < budget && attempts < 40 * cfg.max_facets {
        attempts += 1;
        let host = *faces.choose(rng).expect("nonempty");
        let members: Vec<usize> = host.iter().collect();
        let mut shared: Vec<usize> = members
            .iter()
            .copied()
            .filter(|_| rng.random_bool(0.5))
            .collect();
        if shared.is_empty() {
            shared.push(*members.choose(rng).expect("nonempty facet"));
        }
        if shared.len() == members.len() {
            if members.len() == 1 {
                continue;
            }
            shared.shuffle(rng);
            shared.pop();
        }
        let room = cfg.max_facet_size.saturating_sub(shared.len()).max(1);
        let fresh = rng.random_range(1..=room).min(budget - used);
        let new = Face::from_indices(shared.into_iter().chain(used..used + fresh));
        let mut candidate = faces.clone();
        candidate.push(new);
        let c =
            Complex::from_faces(universe(used + fresh), candidate.clone()).expect("valid faces");
        if c.num_facets() == candidate.len() && is_tree(&c).map(|t| t.verdict).unwrap_or(false) {
            faces = candidate;
            used += fresh;
        }
    }
    Complex::from_faces(universe(used), faces).expect("valid faces")
}

/// A random base (plain or tree) grafted along a random partition of its
/// vertices into facet-contained classes, falling back to whiskering.
fn random_grafted(rng: &mut ChaCha8Rng, cfg: &GeneratorConfig) -> Result<Complex> {
    let half = (cfg.max_vertices / 2).max(1);
    let base_cfg = GeneratorConfig {
        min_vertices: cfg.min_vertices.min(half).max(1),
        max_vertices: half,
        max_facets: (cfg.max_facets / 2).max(1),
        ..*cfg
    };
    let base = if rng.random_bool(0.5) {
        random_complex(rng, &base_cfg)
    } else {
        random_tree(rng, &base_cfg)
    };
    for _ in 0..8 {
        let classes = random_partition(rng, &base);
        if let Ok(g) = graft_classes(&base, &classes) {
            return Ok(g.complex);
        }
    }
    let whiskers: Vec<Face> = base.vertex_set().iter().map(Face::singleton).collect();
    Ok(graft_classes(&base, &whiskers)?.complex)
}

fn random_partition(rng: &mut ChaCha8Rng, c: &Complex) -> Vec<Face> {
    let mut order: Vec<usize> = c.vertex_set().iter().collect();
    order.shuffle(rng);
    let mut unassigned = c.vertex_set();
    let mut classes = Vec::new();
    for v in order {
        if !unassigned.contains(v) {
            continue;
        }
        let hosts: Vec<Face> = c
            .facets()
            .iter()
            .copied()
            .filter(|f| f.contains(v))
            .collect();
        let host = *hosts.choose(rng).expect("vertex lies in a facet");
        let mut class = Face::singleton(v);
        for u in host.intersection(unassigned).without(v).iter() {
            if rng.random_bool(0.4) {
                class = class.with(u);
            }
        }
        unassigned = unassigned.difference(class);
        classes.push(class);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::is_grafted;

    #[test]
    fn deterministic() {
        for mode in [
            GeneratorMode::Random,
            GeneratorMode::RandomTree,
            GeneratorMode::RandomGrafted,
        ] {
            let cfg = GeneratorConfig::new(1, mode);
            assert_eq!(generate(&cfg).unwrap(), generate(&cfg).unwrap());
        }
    }

    #[test]
    fn modes_hold_their_promises() {
        for seed in 0..30 {
            let t = generate(&GeneratorConfig {
                max_facets: 6,
                ..GeneratorConfig::new(seed, GeneratorMode::RandomTree)
            })
            .unwrap();
            assert!(is_tree(&t).unwrap().verdict, "seed {seed}: {t}");
            let g = generate(&GeneratorConfig::new(seed, GeneratorMode::RandomGrafted)).unwrap();
            assert!(is_grafted(&g).unwrap().is_some(), "seed {seed}: {g}");
            let r = generate(&GeneratorConfig::new(seed, GeneratorMode::Random)).unwrap();
            assert!(r.num_facets() >= 1 && r.universe().len() <= 10);
        }
    }

    #[test]
    fn rejects_large_bounds() {
        let cfg = GeneratorConfig {
            max_vertices: 40,
            ..Default::default()
        };
        assert!(matches!(generate(&cfg), Err(Error::BoundsTooLarge(_))));
        let cfg = GeneratorConfig {
            max_facets: 30,
            ..Default::default()
        };
        assert!(matches!(generate(&cfg), Err(Error::BoundsTooLarge(_))));
    }
}
