//! Vertex covers and independent sets of facets.

use serde::Serialize;

use crate::complex::{bit_indices, Complex, Face};
use crate::error::{Error, Result};
use crate::par;

/// All minimal vertex covers of a complex, with the covering number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    /// Minimal covers in canonical order.
    pub covers: Vec<Face>,
    pub alpha: usize,
    pub unmixed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceReport {
    pub beta: usize,
    /// Independent sets of size `beta`, as facet indices.
    pub witnesses: Vec<Vec<usize>>,
    /// Every maximal independent set, as facet indices.
    pub maximal_sets: Vec<Vec<usize>>,
}

pub fn is_vertex_cover(complex: &Complex, candidate: Face) -> Result<bool> {
    if !candidate.is_subset(complex.universe().full()) {
        let bad = candidate
            .difference(complex.universe().full())
            .first()
            .unwrap_or(0);
        return Err(Error::UnknownVertex(format!("#{bad}")));
    }
    Ok(complex.facets().iter().all(|f| f.meets(candidate)))
}

pub fn minimal_vertex_covers(complex: &Complex) -> Result<CoverReport> {
    complex.ensure_nonempty()?;
    let covers = minimal_transversals(complex.facets());
    let alpha = covers.iter().map(|c| c.len()).min().unwrap_or(0);
    let unmixed = covers.iter().all(|c| c.len() == alpha);
    Ok(CoverReport {
        covers,
        alpha,
        unmixed,
    })
}

/// Covering number only.
pub fn alpha(complex: &Complex) -> Result<usize> {
    Ok(minimal_vertex_covers(complex)?.alpha)
}

/// Minimal transversals of a nonempty family of nonempty sets, in canonical
/// order.
///
/// Branch and bound: take the first set the partial choice misses and branch
/// on its vertices. A partial choice in which some vertex has no private set
/// can never become minimal, so that branch is cut. Vertices already tried at
/// a branch point are forbidden further down, so each minimal transversal is
/// produced exactly once.
pub(crate) fn minimal_transversals(sets: &[Face]) -> Vec<Face> {
    let Some(&first) = sets.first() else {
        return vec![Face::EMPTY];
    };
    let mut roots = Vec::new();
    let mut forbidden = Face::EMPTY;
    for v in first.iter() {
        roots.push((Face::singleton(v), forbidden));
        forbidden = forbidden.with(v);
    }
    let mut out: Vec<Face> = par::map(&roots, |&(chosen, forbidden)| {
        let mut found = Vec::new();
        branch(sets, chosen, forbidden, &mut found);
        found
    })
    .into_iter()
    .flatten()
    .collect();
    out.sort_by(Face::canonical_cmp);
    out
}

fn branch(sets: &[Face], chosen: Face, forbidden: Face, out: &mut Vec<Face>) {
    let Some(&missed) = sets.iter().find(|f| !f.meets(chosen)) else {
        out.push(chosen);
        return;
    };
    let mut forbidden = forbidden;
    for v in missed.difference(forbidden).iter() {
        let next = chosen.with(v);
        if irredundant(sets, next) {
            branch(sets, next, forbidden, out);
        }
        forbidden = forbidden.with(v);
    }
}

/// Every chosen vertex is the only chosen vertex of some set.
fn irredundant(sets: &[Face], chosen: Face) -> bool {
    chosen.iter().all(|v| {
        sets.iter()
            .any(|f| f.intersection(chosen) == Face::singleton(v))
    })
}

pub fn independence(complex: &Complex) -> Result<IndependenceReport> {
    independence_capped(complex, None)
}

/// As [`independence`], keeping at most `cap` witnesses.
pub fn independence_capped(complex: &Complex, cap: Option<usize>) -> Result<IndependenceReport> {
    complex.ensure_nonempty()?;
    let facets = complex.facets();
    let n = facets.len();
    // disjoint[i]: facets disjoint from facet i
    let disjoint: Vec<u64> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && !facets[i].meets(facets[j]))
                .fold(0u64, |m, j| m | (1 << j))
        })
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut maximal = Vec::new();
    bron_kerbosch(&disjoint, 0, all, 0, &mut maximal);
    let mut maximal_sets: Vec<Vec<usize>> = maximal.into_iter().map(bit_indices).collect();
    maximal_sets.sort();
    let beta = maximal_sets.iter().map(Vec::len).max().unwrap_or(0);
    let mut witnesses: Vec<Vec<usize>> = maximal_sets
        .iter()
        .filter(|s| s.len() == beta)
        .cloned()
        .collect();
    if let Some(cap) = cap {
        witnesses.truncate(cap);
    }
    Ok(IndependenceReport {
        beta,
        witnesses,
        maximal_sets,
    })
}

/// Maximal cliques of the graph given by adjacency masks, with pivoting.
fn bron_kerbosch(adj: &[u64], r: u64, p: u64, x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot_pool = p | x;
    let pivot = Face(pivot_pool)
        .iter()
        .max_by_key(|&u| (adj[u] & p).count_ones())
        .expect("nonempty pool");
    let mut p = p;
    let mut x = x;
    let mut candidates = p & !adj[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        bron_kerbosch(adj, r | (1 << v), p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(c: &Complex, covers: &[Face]) -> Vec<Vec<String>> {
        covers.iter().map(|f| c.labels(*f)).collect()
    }

    #[test]
    fn grafted_tree_covers() {
        let c = Complex::from_facets(&[vec!["x", "y", "z"], vec!["y", "z", "u"], vec!["u", "v"]])
            .unwrap();
        let r = minimal_vertex_covers(&c).unwrap();
        let mut got = labels(&c, &r.covers);
        got.iter_mut().for_each(|s| s.sort());
        got.sort();
        let want = vec![
            vec!["u", "x"],
            vec!["u", "y"],
            vec!["u", "z"],
            vec!["v", "y"],
            vec!["v", "z"],
        ];
        assert_eq!(got, want);
        assert_eq!(r.alpha, 2);
        assert!(r.unmixed);
        assert_eq!(independence(&c).unwrap().beta, 2);
    }

    #[test]
    fn two_edges_is_mixed() {
        let c = Complex::new(&["x", "y", "z"], &[vec!["x", "y"], vec!["x", "z"]]).unwrap();
        let r = minimal_vertex_covers(&c).unwrap();
        assert_eq!(labels(&c, &r.covers), vec![vec!["x"], vec!["y", "z"]]);
        assert_eq!(r.alpha, 1);
        assert!(!r.unmixed);
        assert_eq!(independence(&c).unwrap().beta, 1);
        assert!(is_vertex_cover(&c, c.face(&["x"]).unwrap()).unwrap());
        assert!(is_vertex_cover(&c, c.universe().full()).unwrap());
        assert!(is_vertex_cover(&c, Face(1 << 5)).is_err());
    }

    #[test]
    fn simplex_covers() {
        let c = Complex::from_facets(&[vec!["a", "b"]]).unwrap();
        let r = minimal_vertex_covers(&c).unwrap();
        assert_eq!(labels(&c, &r.covers), vec![vec!["a"], vec!["b"]]);
        assert_eq!(r.alpha, 1);
        assert!(r.unmixed);
    }

    #[test]
    fn disjoint_facets_are_independent() {
        let c = Complex::from_facets(&[vec!["a", "b"], vec!["c", "d"], vec!["e", "f"]]).unwrap();
        let r = independence(&c).unwrap();
        assert_eq!(r.beta, 3);
        assert_eq!(r.witnesses, vec![vec![0, 1, 2]]);
        let c = Complex::from_facets(&[vec!["x", "y"], vec!["u", "v"]]).unwrap();
        assert!(!is_vertex_cover(&c, c.face(&["x"]).unwrap()).unwrap());
    }

    #[test]
    fn witness_cap() {
        let c = Complex::from_facets(&[
            vec!["a", "b"],
            vec!["b", "c"],
            vec!["c", "d"],
            vec!["d", "a"],
        ])
        .unwrap();
        let r = independence_capped(&c, Some(1)).unwrap();
        assert_eq!(r.beta, 2);
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.maximal_sets.len(), 2);
    }

    #[test]
    fn empty_complex_errors() {
        let e = Complex::empty(Default::default());
        assert!(matches!(
            minimal_vertex_covers(&e),
            Err(Error::EmptyComplex)
        ));
        assert!(matches!(independence(&e), Err(Error::EmptyComplex)));
    }
}
