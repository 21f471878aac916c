//! Simplicial complexes stored by their facets.
//!
//! A [`Complex`] keeps a [`VertexUniverse`] (labels in declaration order) and a
//! list of [`Face`] bitmasks. Construction normalizes the facet list: non-maximal
//! and duplicate sets are dropped and the rest are sorted canonically, by
//! cardinality first and then lexicographically by vertex index.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest universe a [`Face`] bitmask can address.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices, as a bitmask over universe indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(pub u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Face {
        Face(indices.into_iter().fold(0u64, |m, i| m | (1u64 << i)))
    }

    pub fn singleton(i: usize) -> Face {
        Face(1u64 << i)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VERTICES && self.0 & (1u64 << i) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meets(self, other: Face) -> bool {
        self.0 & other.0 != 0
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, i: usize) -> Face {
        Face(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Face {
        Face(self.0 & !(1u64 << i))
    }

    /// Smallest vertex index, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Vertex indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Canonical order: cardinality, then lexicographic on sorted indices.
    pub fn canonical_cmp(&self, other: &Face) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| lex_cmp(*self, *other))
    }

    /// Re-indexes this face into the sub-universe `kept`, numbering the kept
    /// vertices consecutively in their original order.
    pub fn compress(self, kept: Face) -> Face {
        let mut out = 0u64;
        for (pos, i) in kept.iter().enumerate() {
            if self.contains(i) {
                out |= 1u64 << pos;
            }
        }
        Face(out)
    }
}

/// Lexicographic comparison of the sorted index lists of two sets.
fn lex_cmp(a: Face, b: Face) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let diff = a.0 ^ b.0;
    let low = diff & diff.wrapping_neg();
    // The first differing position is the lowest bit of the symmetric
    // difference; whichever set owns it has the smaller element there, unless
    // the other list has already ended (a proper prefix sorts first).
    let a_has = a.0 & low != 0;
    let below = low - 1;
    let rest_a = a.0 & !below;
    let rest_b = b.0 & !below;
    if a_has {
        if rest_b == 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    } else if rest_a == 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Drops duplicates and sets contained in another set, then sorts canonically.
pub(crate) fn maximal_sets(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_by(Face::canonical_cmp);
    kept
}

/// Drops duplicates and sets containing another set, then sorts canonically.
pub(crate) fn minimal_sets(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort_by(Face::canonical_cmp);
    kept
}

/// Ordered, duplicate-free vertex labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexUniverse {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VertexUniverse {
    pub fn new<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        let mut u = VertexUniverse::default();
        for l in labels {
            let l = l.as_ref();
            if u.index.contains_key(l) {
                return Err(Error::DuplicateVertex(l.to_string()));
            }
            u.push(l.to_string())?;
        }
        Ok(u)
    }

    pub(crate) fn push(&mut self, label: String) -> Result<usize> {
        if self.names.len() >= MAX_VERTICES {
            return Err(Error::UniverseTooLarge {
                size: self.names.len() + 1,
                limit: MAX_VERTICES,
            });
        }
        let i = self.names.len();
        self.index.insert(label.clone(), i);
        self.names.push(label);
        Ok(i)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    /// Every vertex of the universe.
    pub fn full(&self) -> Face {
        if self.names.len() == MAX_VERTICES {
            Face(u64::MAX)
        } else {
            Face((1u64 << self.names.len()) - 1)
        }
    }

    pub fn face<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face> {
        let mut f = Face::EMPTY;
        for l in labels {
            let l = l.as_ref();
            let i = self
                .index_of(l)
                .ok_or_else(|| Error::UnknownVertex(l.to_string()))?;
            f = f.with(i);
        }
        Ok(f)
    }

    pub fn labels(&self, face: Face) -> Vec<String> {
        face.iter().map(|i| self.names[i].clone()).collect()
    }

    /// The sub-universe on `kept`, in original order.
    pub fn restrict(&self, kept: Face) -> VertexUniverse {
        let mut u = VertexUniverse::default();
        for i in kept.iter() {
            // Cannot overflow: a sub-universe is no larger than its parent.
            u.push(self.names[i].clone()).expect("sub-universe fits");
        }
        u
    }
}

/// A simplicial complex given by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    universe: VertexUniverse,
    facets: Vec<Face>,
}

impl Complex {
    /// Builds a complex over `universe` from raw facets, keeping only the
    /// maximal ones. Universe vertices in no facet stay as isolated vertices.
    pub fn new<S: AsRef<str>, F: AsRef<[S]>>(universe: &[S], raw_facets: &[F]) -> Result<Self> {
        Complex::over(VertexUniverse::new(universe)?, raw_facets)
    }

    fn over<S: AsRef<str>, F: AsRef<[S]>>(
        universe: VertexUniverse,
        raw_facets: &[F],
    ) -> Result<Self> {
        let mut faces = Vec::with_capacity(raw_facets.len());
        for (k, raw) in raw_facets.iter().enumerate() {
            let raw = raw.as_ref();
            if raw.is_empty() {
                return Err(Error::EmptyFacet(k));
            }
            faces.push(universe.face(raw)?);
        }
        Ok(Complex {
            universe,
            facets: maximal_sets(faces),
        })
    }

    /// Builds a complex whose universe is the union of the facet labels, in
    /// order of first appearance.
    pub fn from_facets<S: AsRef<str>, F: AsRef<[S]>>(raw_facets: &[F]) -> Result<Self> {
        let mut labels: Vec<&str> = Vec::new();
        for raw in raw_facets {
            for l in raw.as_ref() {
                if !labels.contains(&l.as_ref()) {
                    labels.push(l.as_ref());
                }
            }
        }
        Complex::over(VertexUniverse::new(&labels)?, raw_facets)
    }

    /// Builds a complex from facet bitmasks over an existing universe.
    pub fn from_faces(universe: VertexUniverse, faces: Vec<Face>) -> Result<Self> {
        let full = universe.full();
        for (k, f) in faces.iter().enumerate() {
            if f.is_empty() {
                return Err(Error::EmptyFacet(k));
            }
            if !f.is_subset(full) {
                let bad = f.difference(full).first().unwrap_or(0);
                return Err(Error::UnknownVertex(format!("#{bad}")));
            }
        }
        Ok(Complex {
            universe,
            facets: maximal_sets(faces),
        })
    }

    /// The complex with no facets.
    pub fn empty(universe: VertexUniverse) -> Self {
        Complex {
            universe,
            facets: Vec::new(),
        }
    }

    pub fn universe(&self) -> &VertexUniverse {
        &self.universe
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub(crate) fn ensure_nonempty(&self) -> Result<()> {
        if self.facets.is_empty() {
            Err(Error::EmptyComplex)
        } else {
            Ok(())
        }
    }

    pub fn dimension(&self) -> Result<usize> {
        self.facets
            .iter()
            .map(|f| f.len() - 1)
            .max()
            .ok_or(Error::EmptyComplex)
    }

    /// Vertices lying in at least one facet.
    pub fn vertex_set(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |a, f| a.union(*f))
    }

    /// Universe vertices that lie in no facet.
    pub fn isolated_vertices(&self) -> Face {
        self.universe.full().difference(self.vertex_set())
    }

    pub fn facet_index(&self, face: Face) -> Option<usize> {
        self.facets.iter().position(|f| *f == face)
    }

    pub fn face<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face> {
        self.universe.face(labels)
    }

    pub fn labels(&self, face: Face) -> Vec<String> {
        self.universe.labels(face)
    }

    pub fn facet_labels(&self) -> Vec<Vec<String>> {
        self.facets.iter().map(|f| self.labels(*f)).collect()
    }

    /// Removes `facet`. The universe shrinks to the vertices still covered.
    /// Removing the only facet yields the empty complex.
    pub fn remove_facet(&self, facet: Face) -> Result<Complex> {
        let i = self.facet_index(facet).ok_or(Error::NotAFacet)?;
        Ok(self.without_facet(i).restrict_to_support())
    }

    /// Removes facet `i`, keeping the universe unchanged.
    pub(crate) fn without_facet(&self, i: usize) -> Complex {
        let mut facets = self.facets.clone();
        facets.remove(i);
        Complex {
            universe: self.universe.clone(),
            facets,
        }
    }

    /// The same facets over the sub-universe of covered vertices.
    pub fn restrict_to_support(&self) -> Complex {
        let support = self.vertex_set();
        Complex {
            universe: self.universe.restrict(support),
            facets: self.facets.iter().map(|f| f.compress(support)).collect(),
        }
    }

    /// The subcollection on the given facet indices, over the same universe.
    pub fn subcollection(&self, indices: &[usize]) -> Result<Complex> {
        if indices.is_empty() {
            return Err(Error::EmptySelection);
        }
        let mut faces = Vec::with_capacity(indices.len());
        for &i in indices {
            let f = self.facets.get(i).ok_or(Error::IndexOutOfRange(i))?;
            faces.push(*f);
        }
        Ok(Complex {
            universe: self.universe.clone(),
            facets: maximal_sets(faces),
        })
    }

    /// Facet indices grouped by connected component. Components are listed by
    /// their smallest facet index, and indices within a component ascend.
    pub fn component_indices(&self) -> Vec<Vec<usize>> {
        facet_components(&self.facets)
            .into_iter()
            .map(bit_indices)
            .collect()
    }

    pub fn is_connected(&self) -> Result<bool> {
        self.ensure_nonempty()?;
        Ok(facet_components(&self.facets).len() == 1)
    }

    pub fn connected_components(&self) -> Result<Vec<Complex>> {
        self.ensure_nonempty()?;
        Ok(self
            .component_indices()
            .into_iter()
            .map(|idx| Complex {
                universe: self.universe.clone(),
                facets: idx.iter().map(|&i| self.facets[i]).collect(),
            })
            .collect())
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, face) in self.facets.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.labels(*face).join(" "))?;
        }
        write!(f, ">")
    }
}

/// Indices of the set bits of a facet-selection mask.
pub(crate) fn bit_indices(mask: u64) -> Vec<usize> {
    Face(mask).iter().collect()
}

/// Connected components of a facet list, as masks over facet positions.
#[allow(clippy::needless_range_loop)]
pub(crate) fn facet_components(facets: &[Face]) -> Vec<u64> {
    let n = facets.len();
    let mut seen = 0u64;
    let mut comps = Vec::new();
    for start in 0..n {
        if seen & (1 << start) != 0 {
            continue;
        }
        let mut comp = 1u64 << start;
        let mut reach = facets[start];
        loop {
            let mut grew = false;
            for j in 0..n {
                if comp & (1 << j) == 0 && facets[j].meets(reach) {
                    comp |= 1 << j;
                    reach = reach.union(facets[j]);
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        seen |= comp;
        comps.push(comp);
    }
    comps
}

/// Whether the facets selected by `mask` form a connected complex.
pub(crate) fn mask_is_connected(facets: &[Face], mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let start = mask.trailing_zeros() as usize;
    let mut comp = 1u64 << start;
    let mut reach = facets[start];
    loop {
        let mut grew = false;
        let mut rest = mask & !comp;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if facets[j].meets(reach) {
                comp |= 1 << j;
                reach = reach.union(facets[j]);
                grew = true;
            }
        }
        if !grew {
            return comp == mask;
        }
    }
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

    #[test]
    fn builds_mixed_tree() {
        let c = mixed_tree();
        assert_eq!(c.num_facets(), 3);
        assert_eq!(c.dimension().unwrap(), 2);
        assert!(c.is_connected().unwrap());
    }

    #[test]
    fn drops_subsets_and_duplicates() {
        let c = Complex::from_facets(&[vec!["x"], vec!["x", "y"]]).unwrap();
        assert_eq!(c.facet_labels(), vec![vec!["x", "y"]]);
        let c = Complex::from_facets(&[vec!["a", "b"], vec!["a", "b"]]).unwrap();
        assert_eq!(c.num_facets(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Complex::new(&["x"], &[vec!["y"]]),
            Err(Error::UnknownVertex(l)) if l == "y"
        ));
        let empty: Vec<&str> = vec![];
        assert!(matches!(
            Complex::new(&["x"], &[vec!["x"], empty]),
            Err(Error::EmptyFacet(1))
        ));
        assert!(matches!(
            VertexUniverse::new(&["x", "x"]),
            Err(Error::DuplicateVertex(_))
        ));
    }

    #[test]
    fn isolated_vertices_are_kept() {
        let c = Complex::new(&["a", "b", "c"], &[vec!["a", "b"]]).unwrap();
        assert_eq!(c.universe().len(), 3);
        assert_eq!(c.labels(c.isolated_vertices()), vec!["c"]);
    }

    #[test]
    fn dimension_rule() {
        let c = Complex::from_facets(&[vec!["a"]]).unwrap();
        assert_eq!(c.dimension().unwrap(), 0);
        let c = Complex::from_facets(&[vec!["u", "v"], vec!["x", "y", "z"]]).unwrap();
        assert_eq!(c.dimension().unwrap(), 2);
        let e = Complex::empty(VertexUniverse::default());
        assert!(matches!(e.dimension(), Err(Error::EmptyComplex)));
    }

    #[test]
    fn remove_facet_shrinks_universe() {
        let c = Complex::from_facets(&[vec!["x", "y", "z"], vec!["y", "z", "u"], vec!["u", "v"]])
            .unwrap();
        let f = c.face(&["x", "y", "z"]).unwrap();
        let d = c.remove_facet(f).unwrap();
        assert_eq!(d.universe().names(), &["y", "z", "u", "v"]);
        assert_eq!(d.num_facets(), 2);
        assert!(matches!(c.remove_facet(Face(0b11)), Err(Error::NotAFacet)));

        let s = Complex::from_facets(&[vec!["a", "b"]]).unwrap();
        let e = s.remove_facet(s.facets()[0]).unwrap();
        assert!(e.is_empty());
        assert!(e.universe().is_empty());

        let two = Complex::from_facets(&[vec!["a", "b"], vec!["c", "d"]]).unwrap();
        let one = two.remove_facet(two.facets()[0]).unwrap();
        assert_eq!(one.facet_labels(), vec![vec!["c", "d"]]);
    }

    #[test]
    fn subcollection_selects_by_canonical_index() {
        // Universe in declaration order x y u z v.
        let c = Complex::from_facets(&[
            vec!["x", "y", "u"],
            vec!["x", "y", "z"],
            vec!["x", "z", "v"],
        ])
        .unwrap();
        let s = c.subcollection(&[0, 2]).unwrap();
        assert_eq!(
            s.facet_labels(),
            vec![vec!["x", "y", "u"], vec!["x", "z", "v"]]
        );
        assert_eq!(c.subcollection(&[0, 1, 2]).unwrap(), c);
        assert_eq!(c.subcollection(&[1]).unwrap().num_facets(), 1);
        assert!(matches!(c.subcollection(&[]), Err(Error::EmptySelection)));
        assert!(matches!(
            c.subcollection(&[3]),
            Err(Error::IndexOutOfRange(3))
        ));
    }

    #[test]
    fn components() {
        let c = Complex::from_facets(&[vec!["x", "y"], vec!["y", "z"]]).unwrap();
        assert!(c.is_connected().unwrap());
        let c = Complex::from_facets(&[vec!["x", "y"], vec!["u", "v"]]).unwrap();
        assert!(!c.is_connected().unwrap());
        assert_eq!(c.connected_components().unwrap().len(), 2);
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let a = Face::from_indices([0, 1, 3]);
        let b = Face::from_indices([0, 2, 4]);
        let c = Face::from_indices([0, 1, 2]);
        let d = Face::from_indices([5]);
        let mut v = vec![b, a, d, c];
        v.sort_by(Face::canonical_cmp);
        assert_eq!(v, vec![d, c, a, b]);
        // proper-prefix case only arises across sizes; lex_cmp still handles it
        assert_eq!(
            lex_cmp(Face::from_indices([0]), Face::from_indices([0, 1])),
            Ordering::Less
        );
        assert_eq!(
            lex_cmp(Face::from_indices([0, 2]), Face::from_indices([1])),
            Ordering::Less
        );
    }
}
