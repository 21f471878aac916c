//! Leaves, joints and tree/forest recognition.
//!
//! A facet `F` is a leaf when it is the only facet, or some other facet `G`
//! satisfies `F ∩ H ⊆ F ∩ G` for every other facet `H`. All such `G` form the
//! universal set of `F`; those meeting `F` are its joints. A forest is a
//! complex in which every nonempty subcollection has a leaf, and a tree is a
//! connected forest.

use itertools::Itertools;
use serde::Serialize;

use crate::complex::{bit_indices, mask_is_connected, Complex, Face};
use crate::error::{Error, Result};
use crate::par;

/// Facet-count ceiling for subcollection search.
pub const MAX_SEARCH_FACETS: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafReport {
    pub facet: Face,
    pub is_leaf: bool,
    pub universal_set: Vec<Face>,
    pub joints: Vec<Face>,
    pub free_vertices: Face,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestCertificate {
    pub verdict: bool,
    /// Facet indices of a leafless subcollection; present only when one
    /// exists.
    pub witness: Option<Vec<usize>>,
    pub connected: bool,
}

/// Vertices lying in exactly one facet.
pub fn free_vertices(complex: &Complex) -> Face {
    free_in(complex.facets())
}

pub(crate) fn free_in(facets: &[Face]) -> Face {
    let mut once = 0u64;
    let mut twice = 0u64;
    for f in facets {
        twice |= once & f.0;
        once |= f.0;
    }
    Face(once & !twice)
}

/// Positions `j != i` forming the universal set of facet `i`.
pub(crate) fn universal_positions(facets: &[Face], i: usize) -> Vec<usize> {
    if facets.len() <= 1 {
        return Vec::new();
    }
    let f = facets[i];
    let reach = others_reach(facets, i);
    (0..facets.len())
        .filter(|&j| j != i && reach.is_subset(f.intersection(facets[j])))
        .collect()
}

/// Union of `F ∩ H` over the other facets `H`.
fn others_reach(facets: &[Face], i: usize) -> Face {
    let f = facets[i];
    facets
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .fold(Face::EMPTY, |a, (_, h)| a.union(f.intersection(*h)))
}

/// Leaf test. `F` is a leaf iff some single intersection `F ∩ G` already
/// contains the union of all intersections with the other facets.
pub(crate) fn is_leaf_in(facets: &[Face], i: usize) -> bool {
    if facets.len() == 1 {
        return true;
    }
    let f = facets[i];
    let reach = others_reach(facets, i);
    facets
        .iter()
        .enumerate()
        .any(|(j, g)| j != i && reach.is_subset(f.intersection(*g)))
}

pub(crate) fn leaf_positions(facets: &[Face]) -> Vec<usize> {
    (0..facets.len())
        .filter(|&i| is_leaf_in(facets, i))
        .collect()
}

fn select(facets: &[Face], mask: u64) -> Vec<Face> {
    Face(mask).iter().map(|i| facets[i]).collect()
}

pub(crate) fn mask_has_leaf(facets: &[Face], mask: u64) -> bool {
    let sub = select(facets, mask);
    (0..sub.len()).any(|i| is_leaf_in(&sub, i))
}

pub fn leaf_report(complex: &Complex, facet: Face) -> Result<LeafReport> {
    let i = complex.facet_index(facet).ok_or(Error::NotAFacet)?;
    let facets = complex.facets();
    let universal: Vec<Face> = universal_positions(facets, i)
        .into_iter()
        .map(|j| facets[j])
        .collect();
    let joints = universal
        .iter()
        .copied()
        .filter(|g| g.meets(facet))
        .collect();
    Ok(LeafReport {
        facet,
        is_leaf: facets.len() == 1 || !universal.is_empty(),
        universal_set: universal,
        joints,
        free_vertices: free_in(facets).intersection(facet),
    })
}

pub fn leaves(complex: &Complex) -> Result<Vec<Face>> {
    complex.ensure_nonempty()?;
    let facets = complex.facets();
    Ok(leaf_positions(facets)
        .into_iter()
        .map(|i| facets[i])
        .collect())
}

/// Whether `g` is a joint of some leaf of the complex.
pub fn is_joint(complex: &Complex, g: Face) -> Result<bool> {
    let gi = complex.facet_index(g).ok_or(Error::NotAFacet)?;
    let facets = complex.facets();
    Ok(leaf_positions(facets)
        .into_iter()
        .any(|i| i != gi && facets[i].meets(g) && universal_positions(facets, i).contains(&gi)))
}

/// Joints of every leaf, without repetition, in facet order.
pub fn joints(complex: &Complex) -> Result<Vec<Face>> {
    complex.ensure_nonempty()?;
    let facets = complex.facets();
    let mut mask = 0u64;
    for i in leaf_positions(facets) {
        for j in universal_positions(facets, i) {
            if facets[i].meets(facets[j]) {
                mask |= 1 << j;
            }
        }
    }
    Ok(bit_indices(mask).into_iter().map(|j| facets[j]).collect())
}

fn check_size(complex: &Complex) -> Result<()> {
    complex.ensure_nonempty()?;
    let n = complex.num_facets();
    if n > MAX_SEARCH_FACETS {
        return Err(Error::TooManyFacets {
            size: n,
            limit: MAX_SEARCH_FACETS,
        });
    }
    Ok(())
}

/// First leafless subcollection in search order: by size, then
/// lexicographically by facet indices.
fn leafless_witness(facets: &[Face], connected_only: bool) -> Option<Vec<usize>> {
    let n = facets.len();
    // One- and two-facet subcollections always have a leaf.
    for k in 3..=n {
        let level: Vec<u64> = (0..n)
            .combinations(k)
            .map(|c| c.into_iter().fold(0u64, |m, i| m | (1 << i)))
            .filter(|&m| !connected_only || mask_is_connected(facets, m))
            .collect();
        if let Some(&m) = par::find_first(&level, |&m| !mask_has_leaf(facets, m)) {
            return Some(bit_indices(m));
        }
    }
    None
}

/// Checks every nonempty connected subcollection for a leaf.
pub fn is_forest(complex: &Complex) -> Result<ForestCertificate> {
    check_size(complex)?;
    let witness = leafless_witness(complex.facets(), true);
    Ok(ForestCertificate {
        verdict: witness.is_none(),
        witness,
        connected: complex.is_connected()?,
    })
}

/// Same verdict as [`is_forest`] but searching all subcollections, connected
/// or not. Used to cross-check the connected restriction.
pub fn is_forest_all_subcollections(complex: &Complex) -> Result<ForestCertificate> {
    check_size(complex)?;
    let witness = leafless_witness(complex.facets(), false);
    Ok(ForestCertificate {
        verdict: witness.is_none(),
        witness,
        connected: complex.is_connected()?,
    })
}

/// A forest that is also connected. A disconnected forest fails without a
/// witness.
pub fn is_tree(complex: &Complex) -> Result<ForestCertificate> {
    let mut cert = is_forest(complex)?;
    cert.verdict = cert.verdict && cert.connected;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(facets: &[&str]) -> Complex {
        let raw: Vec<Vec<String>> = facets
            .iter()
            .map(|f| f.chars().map(|ch| ch.to_string()).collect())
            .collect();
        Complex::from_facets(&raw).unwrap()
    }

    #[test]
    fn mixed_tree_leaves() {
        let d = c(&["xyu", "xyz", "xzv"]);
        let l: Vec<_> = leaves(&d).unwrap().iter().map(|f| d.labels(*f)).collect();
        assert_eq!(l, vec![vec!["x", "y", "u"], vec!["x", "z", "v"]]);
        let r = leaf_report(&d, d.face(&["x", "y", "u"]).unwrap()).unwrap();
        assert!(r.is_leaf);
        assert_eq!(r.joints, vec![d.face(&["x", "y", "z"]).unwrap()]);
        assert_eq!(d.labels(r.free_vertices), vec!["u"]);
        assert!(is_tree(&d).unwrap().verdict);
    }

    #[test]
    fn leafless_complex_has_no_leaves() {
        let d = c(&["abc", "acd", "bcde"]);
        assert!(leaves(&d).unwrap().is_empty());
        let r = leaf_report(&d, d.face(&["b", "c", "d", "e"]).unwrap()).unwrap();
        assert!(!r.is_leaf);
        assert!(r.universal_set.is_empty());
        let cert = is_tree(&d).unwrap();
        assert!(!cert.verdict);
        assert_eq!(cert.witness, Some(vec![0, 1, 2]));
    }

    #[test]
    fn simplex_is_leaf() {
        let d = c(&["ab"]);
        let r = leaf_report(&d, d.facets()[0]).unwrap();
        assert!(r.is_leaf);
        assert!(r.universal_set.is_empty());
        assert!(is_tree(&d).unwrap().verdict);
    }

    #[test]
    fn disjoint_pair() {
        let d = c(&["ab", "cd"]);
        assert_eq!(leaves(&d).unwrap().len(), 2);
        let f = is_forest(&d).unwrap();
        assert!(f.verdict);
        let t = is_tree(&d).unwrap();
        assert!(!t.verdict);
        assert!(t.witness.is_none());
        assert!(!t.connected);
    }

    #[test]
    fn four_facet_non_tree() {
        let d = c(&["xyu", "xvz", "yzw", "xyz"]);
        let cert = is_tree(&d).unwrap();
        assert!(!cert.verdict);
        let w = cert.witness.unwrap();
        let labels: Vec<_> = w
            .iter()
            .map(|&i| d.labels(d.facets()[i]).concat())
            .collect();
        let mut sorted = labels.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["xvz", "xyu", "yzw"]);
        let sub = d.subcollection(&w).unwrap();
        assert!(leaves(&sub).unwrap().is_empty());
    }

    #[test]
    fn errors() {
        let d = c(&["ab", "bc"]);
        assert!(matches!(
            leaf_report(&d, Face(0b111)),
            Err(Error::NotAFacet)
        ));
        let e = Complex::empty(Default::default());
        assert!(matches!(leaves(&e), Err(Error::EmptyComplex)));
        assert!(matches!(is_tree(&e), Err(Error::EmptyComplex)));
    }
}
