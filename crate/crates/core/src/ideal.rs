//! Square-free monomial ideals and their complexes.
//!
//! A square-free monomial is stored as its support, a [`Face`]. The facet
//! ideal of a complex has one generator per facet; the non-face
//! (Stanley-Reisner) ideal is generated by the minimal non-faces.

use serde::Serialize;

use crate::complex::{minimal_sets, Complex, Face, VertexUniverse};
use crate::covers::{minimal_transversals, minimal_vertex_covers};
use crate::error::{Error, Result};
use crate::par;

/// Default subset-count bound for brute-force checks.
pub const DEFAULT_BRUTE_FORCE_VERTICES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    universe: VertexUniverse,
    generators: Vec<Face>,
    minimized: bool,
}

impl MonomialIdeal {
    /// Builds an ideal from generator supports, keeping a minimal generating
    /// set. [`MonomialIdeal::was_minimized`] reports whether anything was
    /// dropped.
    pub fn new(universe: VertexUniverse, generators: Vec<Face>) -> Result<Self> {
        let full = universe.full();
        for (k, g) in generators.iter().enumerate() {
            if g.is_empty() {
                return Err(Error::EmptyFacet(k));
            }
            if !g.is_subset(full) {
                return Err(Error::UnknownVertex(format!(
                    "#{}",
                    g.difference(full).first().unwrap_or(0)
                )));
            }
        }
        let before = generators.len();
        let generators = minimal_sets(generators);
        Ok(MonomialIdeal {
            universe,
            minimized: generators.len() != before,
            generators,
        })
    }

    pub fn from_labels<S: AsRef<str>, G: AsRef<[S]>>(
        universe: &[S],
        generators: &[G],
    ) -> Result<Self> {
        let universe = VertexUniverse::new(universe)?;
        let gens = generators
            .iter()
            .map(|g| universe.face(g.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(universe, gens)
    }

    pub fn universe(&self) -> &VertexUniverse {
        &self.universe
    }

    pub fn generators(&self) -> &[Face] {
        &self.generators
    }

    pub fn was_minimized(&self) -> bool {
        self.minimized
    }

    pub fn generator_labels(&self) -> Vec<Vec<String>> {
        self.generators
            .iter()
            .map(|g| self.universe.labels(*g))
            .collect()
    }

    /// Membership of the square-free monomial with support `m`.
    pub fn contains(&self, m: Face) -> bool {
        self.generators.iter().any(|g| g.is_subset(m))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealJson {
    pub generators: Vec<Vec<String>>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(i: &MonomialIdeal) -> Self {
        IdealJson {
            generators: i.generator_labels(),
        }
    }
}

pub fn facet_ideal(complex: &Complex) -> MonomialIdeal {
    MonomialIdeal {
        universe: complex.universe().clone(),
        generators: complex.facets().to_vec(),
        minimized: false,
    }
}

pub fn facet_complex(ideal: &MonomialIdeal) -> Complex {
    Complex::from_faces(ideal.universe.clone(), ideal.generators.clone())
        .expect("ideal generators are valid facets")
}

/// Minimal subsets of the universe that lie in no facet, found level by level:
/// a candidate of size `k + 1` is a face of size `k` plus a larger vertex.
pub fn nonface_ideal(complex: &Complex) -> Result<MonomialIdeal> {
    complex.ensure_nonempty()?;
    let facets = complex.facets();
    let is_face = |s: Face| facets.iter().any(|f| s.is_subset(*f));
    let n = complex.universe().len();
    let mut generators = Vec::new();
    let mut level = vec![Face::EMPTY];
    while !level.is_empty() {
        let mut next = Vec::new();
        for &face in &level {
            let start = match face.iter().last() {
                Some(top) => top + 1,
                None => 0,
            };
            for v in start..n {
                let cand = face.with(v);
                if is_face(cand) {
                    next.push(cand);
                } else if cand.iter().all(|u| is_face(cand.without(u))) {
                    generators.push(cand);
                }
            }
        }
        level = next;
    }
    MonomialIdeal::new(complex.universe().clone(), generators)
}

/// Facets of the non-face complex: the maximal sets containing no generator,
/// i.e. complements of the minimal vertex covers of the facet complex. The
/// result may be `[∅]` when every vertex is itself a generator.
pub(crate) fn nonface_facets(ideal: &MonomialIdeal) -> Vec<Face> {
    let full = ideal.universe.full();
    if ideal.generators.is_empty() {
        return vec![full];
    }
    let mut facets: Vec<Face> = minimal_transversals(&ideal.generators)
        .into_iter()
        .map(|c| full.difference(c))
        .collect();
    facets.sort_by(Face::canonical_cmp);
    facets
}

/// The Stanley-Reisner complex of `ideal`. When its only face is the empty
/// set it is returned as the complex with no facets.
pub fn nonface_complex(ideal: &MonomialIdeal) -> Complex {
    let facets: Vec<Face> = nonface_facets(ideal)
        .into_iter()
        .filter(|f| !f.is_empty())
        .collect();
    Complex::from_faces(ideal.universe.clone(), facets).expect("complements stay in the universe")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    /// Supports of the minimal primes.
    pub primes: Vec<Face>,
    pub krull_dim: usize,
    pub height: usize,
}

pub fn decompose(complex: &Complex) -> Result<DecompositionReport> {
    let covers = minimal_vertex_covers(complex)?;
    let n = complex.universe().len();
    let krull_dim = n - covers.alpha;
    // dim R/I = dim of the non-face complex + 1
    let sr_top = nonface_facets(&facet_ideal(complex))
        .iter()
        .map(|f| f.len())
        .max()
        .unwrap_or(0);
    debug_assert_eq!(sr_top, krull_dim);
    Ok(DecompositionReport {
        primes: covers.covers,
        krull_dim,
        height: covers.alpha,
    })
}

pub fn verify_intersection(complex: &Complex) -> Result<bool> {
    verify_intersection_bounded(complex, DEFAULT_BRUTE_FORCE_VERTICES)
}

/// Checks `I = ⋂ p` over all square-free monomials: a subset contains a facet
/// iff it meets every minimal cover.
pub fn verify_intersection_bounded(complex: &Complex, bound: usize) -> Result<bool> {
    let n = complex.universe().len();
    if n > bound {
        return Err(Error::UniverseTooLarge {
            size: n,
            limit: bound,
        });
    }
    let covers = minimal_vertex_covers(complex)?.covers;
    let facets = complex.facets();
    Ok(par::all_in_range(1u64 << n, |m| {
        let m = Face(m);
        let in_ideal = facets.iter().any(|f| f.is_subset(m));
        let in_primes = covers.iter().all(|c| c.meets(m));
        in_ideal == in_primes
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mixed_tree() -> Complex {
        Complex::new(
            &["x", "y", "z", "u", "v"],
            &[
                vec!["x", "y", "u"],
                vec!["x", "y", "z"],
                vec!["x", "z", "v"],
            ],
        )
        .unwrap()
    }

    fn sorted(mut v: Vec<Vec<String>>) -> Vec<String> {
        let mut out: Vec<String> = v.iter_mut().map(|s| s.concat()).collect();
        out.sort();
        out
    }

    #[test]
    fn facet_ideal_mixed_tree() {
        let d = mixed_tree();
        let i = facet_ideal(&d);
        assert_eq!(sorted(i.generator_labels()), vec!["xyu", "xyz", "xzv"]);
        assert_eq!(facet_complex(&i), d);
    }

    #[test]
    fn facet_complex_two_edges() {
        let i = MonomialIdeal::from_labels(&["x", "y", "z"], &[vec!["x", "y"], vec!["x", "z"]])
            .unwrap();
        let c = facet_complex(&i);
        assert_eq!(sorted(c.facet_labels()), vec!["xy", "xz"]);
        assert!(!i.was_minimized());
        let j = MonomialIdeal::from_labels(&["x", "y"], &[vec!["x"], vec!["x", "y"]]).unwrap();
        assert!(j.was_minimized());
        assert_eq!(j.generators().len(), 1);
    }

    #[test]
    fn nonface_ideal_mixed_tree() {
        let n = nonface_ideal(&mixed_tree()).unwrap();
        assert_eq!(sorted(n.generator_labels()), vec!["uv", "yv", "zu"]);
    }

    #[test]
    fn nonface_ideal_small_cases() {
        let s = Complex::from_facets(&[vec!["a", "b", "c"]]).unwrap();
        assert!(nonface_ideal(&s).unwrap().generators().is_empty());
        let e = Complex::new(&["x", "y", "z"], &[vec!["x", "y"]]).unwrap();
        assert_eq!(
            sorted(nonface_ideal(&e).unwrap().generator_labels()),
            vec!["z"]
        );
    }

    #[test]
    fn nonface_complex_cases() {
        let i = MonomialIdeal::from_labels(&["x", "y", "z"], &[vec!["x", "y"], vec!["x", "z"]])
            .unwrap();
        assert_eq!(sorted(nonface_complex(&i).facet_labels()), vec!["x", "yz"]);
        let full = MonomialIdeal::from_labels(&["a", "b", "c"], &[vec!["a", "b", "c"]]).unwrap();
        assert_eq!(
            sorted(nonface_complex(&full).facet_labels()),
            vec!["ab", "ac", "bc"]
        );
        let none = MonomialIdeal::from_labels::<&str, Vec<&str>>(&["a", "b"], &[]).unwrap();
        assert_eq!(sorted(nonface_complex(&none).facet_labels()), vec!["ab"]);
    }

    #[test]
    fn decompose_examples() {
        let g = Complex::new(&["x", "y", "z"], &[vec!["x", "y"], vec!["x", "z"]]).unwrap();
        let d = decompose(&g).unwrap();
        assert_eq!(d.krull_dim, 2);
        assert_eq!(d.height, 1);
        let primes: Vec<_> = d.primes.iter().map(|p| g.labels(*p).concat()).collect();
        assert_eq!(primes, vec!["x", "yz"]);

        let t = Complex::from_facets(&[vec!["x", "y", "z"], vec!["y", "z", "u"], vec!["u", "v"]])
            .unwrap();
        let d = decompose(&t).unwrap();
        assert_eq!((d.primes.len(), d.height, d.krull_dim), (5, 2, 3));

        let a = Complex::from_facets(&[vec!["a"]]).unwrap();
        let d = decompose(&a).unwrap();
        assert_eq!((d.primes.len(), d.krull_dim), (1, 0));
    }

    #[test]
    fn intersection_checks() {
        let g = Complex::new(&["x", "y", "z"], &[vec!["x", "y"], vec!["x", "z"]]).unwrap();
        assert!(verify_intersection(&g).unwrap());
        assert!(verify_intersection(&mixed_tree()).unwrap());
        assert!(verify_intersection(&Complex::from_facets(&[vec!["a", "b"]]).unwrap()).unwrap());
        assert!(matches!(
            verify_intersection_bounded(&mixed_tree(), 3),
            Err(Error::UniverseTooLarge { .. })
        ));
    }
}
