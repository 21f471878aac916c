//! Localization at vertex primes, and grafting.
//!
//! Localizing the facet ideal at a prime generated by a vertex set `S`
//! restricts every facet to `S` and keeps only the minimal restrictions. If a
//! restriction is empty the localized ideal is the unit ideal.
//!
//! A complex is grafted when its leaves are pairwise disjoint, cover every
//! vertex, and removing any non-leaf facet leaves a grafted complex.

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::{minimal_sets, Complex, Face, VertexUniverse};
use crate::error::{Error, Result};
use crate::tree::{free_in, leaf_positions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalizationKind {
    Complex,
    UnitIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizationResult {
    /// Kept vertices, in the original universe.
    pub kept: Face,
    /// The localized complex over the kept vertices; `None` for the unit ideal.
    pub complex: Option<Complex>,
}

impl LocalizationResult {
    pub fn kind(&self) -> LocalizationKind {
        if self.complex.is_some() {
            LocalizationKind::Complex
        } else {
            LocalizationKind::UnitIdeal
        }
    }
}

pub fn localize(complex: &Complex, kept: Face) -> Result<LocalizationResult> {
    complex.ensure_nonempty()?;
    let full = complex.universe().full();
    if !kept.is_subset(full) {
        let bad = kept.difference(full).first().unwrap_or(0);
        return Err(Error::UnknownVertex(format!("#{bad}")));
    }
    let restricted: Vec<Face> = complex
        .facets()
        .iter()
        .map(|f| f.intersection(kept))
        .collect();
    if restricted.iter().any(|f| f.is_empty()) {
        return Ok(LocalizationResult {
            kept,
            complex: None,
        });
    }
    let faces = minimal_sets(restricted)
        .into_iter()
        .map(|f| f.compress(kept))
        .collect();
    let local = Complex::from_faces(complex.universe().restrict(kept), faces)?;
    Ok(LocalizationResult {
        kept,
        complex: Some(local),
    })
}

pub fn localize_labels<S: AsRef<str>>(complex: &Complex, kept: &[S]) -> Result<LocalizationResult> {
    let kept = complex.face(kept)?;
    localize(complex, kept)
}

/// Leaves and deck of a grafted complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraftingDecomposition {
    pub leaves: Vec<Face>,
    pub deck: Vec<Face>,
}

impl GraftingDecomposition {
    pub fn r(&self) -> usize {
        self.leaves.len()
    }

    pub fn s(&self) -> usize {
        self.deck.len()
    }
}

/// Why a complex is not grafted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraftFailure {
    LeavesIntersect(Face, Face),
    UncoveredVertex(usize),
    /// Removing this deck facet leaves a complex that is not grafted.
    DeckRemoval(Face),
}

impl GraftFailure {
    pub fn describe(&self, universe: &VertexUniverse) -> String {
        match self {
            GraftFailure::LeavesIntersect(a, b) => format!(
                "leaves {{{}}} and {{{}}} intersect",
                universe.labels(*a).join(" "),
                universe.labels(*b).join(" ")
            ),
            GraftFailure::UncoveredVertex(v) => {
                format!("vertex {} lies in no leaf", universe.name(*v))
            }
            GraftFailure::DeckRemoval(g) => format!(
                "removing {{{}}} leaves a complex that is not grafted",
                universe.labels(*g).join(" ")
            ),
        }
    }
}

/// Memoized grafting check over subcollections, keyed by facet mask.
struct GraftChecker<'a> {
    facets: &'a [Face],
    memo: HashMap<u64, bool>,
}

impl GraftChecker<'_> {
    fn check(&mut self, mask: u64) -> std::result::Result<(), GraftFailure> {
        let positions: Vec<usize> = Face(mask).iter().collect();
        let sub: Vec<Face> = positions.iter().map(|&i| self.facets[i]).collect();
        let leaf_pos = leaf_positions(&sub);
        let leaves: Vec<Face> = leaf_pos.iter().map(|&i| sub[i]).collect();
        for (a, &fa) in leaves.iter().enumerate() {
            for &fb in &leaves[a + 1..] {
                if fa.meets(fb) {
                    return Err(GraftFailure::LeavesIntersect(fa, fb));
                }
            }
        }
        let covered = leaves.iter().fold(Face::EMPTY, |u, f| u.union(*f));
        let deck: Vec<usize> = (0..sub.len()).filter(|i| !leaf_pos.contains(i)).collect();
        for &d in &deck {
            if let Some(v) = sub[d].difference(covered).first() {
                return Err(GraftFailure::UncoveredVertex(v));
            }
        }
        for &d in &deck {
            let rest = mask & !(1u64 << positions[d]);
            if !self.grafted(rest) {
                return Err(GraftFailure::DeckRemoval(sub[d]));
            }
        }
        Ok(())
    }

    fn grafted(&mut self, mask: u64) -> bool {
        if let Some(&v) = self.memo.get(&mask) {
            return v;
        }
        let v = self.check(mask).is_ok();
        self.memo.insert(mask, v);
        v
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// The grafting decomposition, or the reason none exists.
pub fn grafting(
    complex: &Complex,
) -> Result<std::result::Result<GraftingDecomposition, GraftFailure>> {
    complex.ensure_nonempty()?;
    let facets = complex.facets();
    let mut checker = GraftChecker {
        facets,
        memo: HashMap::new(),
    };
    Ok(checker.check(full_mask(facets.len())).map(|()| {
        let leaf_pos = leaf_positions(facets);
        let (leaves, deck) =
            (0..facets.len()).fold((Vec::new(), Vec::new()), |(mut l, mut d), i| {
                if leaf_pos.contains(&i) {
                    l.push(facets[i]);
                } else {
                    d.push(facets[i]);
                }
                (l, d)
            });
        GraftingDecomposition { leaves, deck }
    }))
}

pub fn is_grafted(complex: &Complex) -> Result<Option<GraftingDecomposition>> {
    Ok(grafting(complex)?.ok())
}

/// Facets meeting `leaf`, ordered so that their intersections with it ascend
/// under inclusion. Fails with `ChainViolation` when two intersections are
/// incomparable.
pub fn embedded_chain(complex: &Complex, leaf: Face) -> Result<Vec<(Face, Face)>> {
    let li = complex.facet_index(leaf).ok_or(Error::NotAFacet)?;
    let mut chain: Vec<(Face, Face)> = complex
        .facets()
        .iter()
        .enumerate()
        .filter(|&(j, h)| j != li && h.meets(leaf))
        .map(|(_, h)| (*h, h.intersection(leaf)))
        .collect();
    chain.sort_by(|a, b| a.1.len().cmp(&b.1.len()).then(a.0.canonical_cmp(&b.0)));
    for w in chain.windows(2) {
        if !w[0].1.is_subset(w[1].1) {
            return Err(Error::ChainViolation { leaf: li });
        }
    }
    Ok(chain)
}

/// A grafted complex together with its verified decomposition.
#[derive(Clone, Debug)]
pub struct GraftResult {
    pub complex: Complex,
    pub decomposition: GraftingDecomposition,
}

/// Grafts one new leaf onto each class of `partition`: the class plus a fresh
/// vertex. Without a partition every vertex is its own class (whiskering).
pub fn graft<S: AsRef<str>>(
    complex: &Complex,
    partition: Option<&[Vec<S>]>,
) -> Result<GraftResult> {
    complex.ensure_nonempty()?;
    let support = complex.vertex_set();
    let classes: Vec<Face> = match partition {
        None => support.iter().map(Face::singleton).collect(),
        Some(p) => {
            let mut classes = Vec::with_capacity(p.len());
            for class in p {
                classes.push(complex.face(class)?);
            }
            classes
        }
    };
    graft_classes(complex, &classes)
}

pub fn graft_classes(complex: &Complex, classes: &[Face]) -> Result<GraftResult> {
    complex.ensure_nonempty()?;
    let support = complex.vertex_set();
    let mut seen = Face::EMPTY;
    for c in classes {
        if c.is_empty() {
            return Err(Error::BadPartition("empty class".into()));
        }
        if c.meets(seen) {
            return Err(Error::BadPartition("classes overlap".into()));
        }
        if !complex.facets().iter().any(|f| c.is_subset(*f)) {
            return Err(Error::BadPartition(format!(
                "class {{{}}} lies in no facet",
                complex.labels(*c).join(" ")
            )));
        }
        seen = seen.union(*c);
    }
    if seen != support {
        return Err(Error::BadPartition(
            "classes must cover exactly the vertices of the complex".into(),
        ));
    }

    let mut universe = complex.universe().clone();
    let mut faces = complex.facets().to_vec();
    for c in classes {
        let rep = universe
            .name(c.first().expect("nonempty class"))
            .to_string();
        let mut label = format!("{rep}'");
        while universe.contains(&label) {
            label.push('\'');
        }
        let fresh = universe.push(label)?;
        faces.push(c.with(fresh));
    }
    let grafted = Complex::from_faces(universe, faces)?;
    match grafting(&grafted)? {
        Ok(decomposition) => Ok(GraftResult {
            complex: grafted,
            decomposition,
        }),
        Err(why) => Err(Error::GraftVerificationFailed(
            why.describe(grafted.universe()),
        )),
    }
}

/// Free vertices of a leaf within the complex.
pub(crate) fn leaf_free_vertices(complex: &Complex, leaf: Face) -> Face {
    free_in(complex.facets()).intersection(leaf)
}
