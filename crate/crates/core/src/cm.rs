//! Cohen-Macaulay certification of facet ideals.
//!
//! Two independent routes:
//!
//! * the tree criterion: a tree is Cohen-Macaulay iff it is unmixed;
//! * Reisner's criterion on the Stanley-Reisner complex `Γ` of the facet
//!   ideal (faces of `Γ` are the vertex sets containing no facet). `R/I` is
//!   Cohen-Macaulay over a field iff every link in `Γ` has vanishing reduced
//!   homology below its dimension.
//!
//! For grafted complexes this module also builds the Artinian reduction `S`
//! and checks that polarizing `S` recovers the facet ideal exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::complex::{maximal_sets, Complex, Face};
use crate::covers::minimal_vertex_covers;
use crate::error::{Error, Result};
use crate::homology::{faces_of, reduced_homology};
use crate::ideal::{facet_ideal, nonface_facets};
use crate::par;
use crate::transform::{embedded_chain, is_grafted, leaf_free_vertices, GraftingDecomposition};
use crate::tree::{is_tree, leaf_positions};

/// Default universe bound for the homology oracle.
pub const DEFAULT_REISNER_VERTICES: usize = 16;

/// Cohen-Macaulayness of a tree, decided by unmixedness.
pub fn cm_tree(complex: &Complex) -> Result<bool> {
    if !is_tree(complex)?.verdict {
        return Err(Error::NotATree);
    }
    Ok(minimal_vertex_covers(complex)?.unmixed)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkRecord {
    /// Face of `Γ` whose link this is.
    pub face: Face,
    /// -1 for the link `{∅}`.
    pub link_dim: i32,
    /// Reduced Betti numbers in degrees `0..=link_dim`.
    pub reduced_betti: Vec<usize>,
    /// Torsion coefficients per degree.
    pub torsion: Vec<Vec<BigInt>>,
    pub torsion_primes: Vec<u64>,
    /// First degree below `link_dim` with nonzero homology over the requested
    /// field.
    pub failing_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    pub characteristic: u64,
    /// Dimension of `Γ`; equals the Krull dimension of `R/I` minus one.
    pub gamma_dim: i32,
    pub links: Vec<LinkRecord>,
    pub cm: bool,
    /// First failing `(face, degree)` in canonical face order.
    pub obstruction: Option<(Face, usize)>,
}

pub fn cm_reisner(complex: &Complex, characteristic: u64) -> Result<HomologyReport> {
    cm_reisner_bounded(complex, characteristic, DEFAULT_REISNER_VERTICES)
}

pub fn cm_reisner_bounded(
    complex: &Complex,
    characteristic: u64,
    bound: usize,
) -> Result<HomologyReport> {
    complex.ensure_nonempty()?;
    if characteristic != 0 && !is_prime(characteristic) {
        return Err(Error::InvalidCharacteristic(characteristic));
    }
    let n = complex.universe().len();
    if n > bound {
        return Err(Error::UniverseTooLarge {
            size: n,
            limit: bound,
        });
    }
    let gamma_facets = nonface_facets(&facet_ideal(complex));
    let gamma_dim = gamma_facets.iter().map(|f| f.len()).max().unwrap_or(0) as i32 - 1;
    let faces = faces_of(&gamma_facets);
    let links: Vec<LinkRecord> = par::map(&faces, |&sigma| {
        let link_facets = maximal_sets(
            gamma_facets
                .iter()
                .filter(|g| sigma.is_subset(**g))
                .map(|g| g.difference(sigma))
                .collect(),
        );
        let h = reduced_homology(&faces_of(&link_facets));
        let mut primes: Vec<u64> = h.torsion.iter().flatten().flat_map(prime_factors).collect();
        primes.sort_unstable();
        primes.dedup();
        LinkRecord {
            face: sigma,
            link_dim: h.dim,
            failing_degree: h.is_acyclic_below_top(characteristic),
            reduced_betti: h.betti,
            torsion: h.torsion,
            torsion_primes: primes,
        }
    });
    let obstruction = links
        .iter()
        .find_map(|l| l.failing_degree.map(|d| (l.face, d)));
    Ok(HomologyReport {
        characteristic,
        gamma_dim,
        cm: obstruction.is_none(),
        obstruction,
        links,
    })
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn prime_factors(t: &BigInt) -> Vec<u64> {
    let mut n = t.clone();
    let mut out = Vec::new();
    let mut d = 2u64;
    while !n.is_one() && !n.is_zero() {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            out.push(n.to_u64().unwrap_or(u64::MAX));
            break;
        }
        if n.is_multiple_of(&bd) {
            out.push(d);
            while n.is_multiple_of(&bd) {
                n /= &bd;
            }
        }
        d += 1;
    }
    out
}

/// The Artinian ring `S = k[y_1..y_r] / (y_i^(u_i+1), E_1..E_s)` of a grafted
/// complex, with the linear forms `y_i - x^i_k` that polarize it back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinianReduction {
    /// Designated free vertex `y_i` of each leaf.
    pub leaf_vars: Vec<usize>,
    /// `u_i + 1 = |F_i|`.
    pub exponents: Vec<u32>,
    /// Remaining vertices `x^i_1..x^i_{u_i}` of each leaf, in substitution order.
    pub substitutions: Vec<Vec<usize>>,
    /// Exponent vector over `y_1..y_r` for each deck facet.
    pub deck_monomials: Vec<Vec<u32>>,
    /// `(y_i, x^i_k)` pairs, leaf by leaf.
    pub linear_sequence: Vec<(usize, usize)>,
}

impl ArtinianReduction {
    /// Generators of `S` as exponent vectors: pure powers, then deck monomials.
    pub fn generators(&self) -> Vec<Vec<u32>> {
        let r = self.leaf_vars.len();
        let mut out: Vec<Vec<u32>> = (0..r)
            .map(|i| {
                let mut e = vec![0; r];
                e[i] = self.exponents[i];
                e
            })
            .collect();
        out.extend(self.deck_monomials.iter().cloned());
        out
    }
}

pub fn artinian_reduction(
    complex: &Complex,
    dec: &GraftingDecomposition,
) -> Result<ArtinianReduction> {
    let facets = complex.facets();
    let mut leaf_set: Vec<Face> = leaf_positions(facets)
        .into_iter()
        .map(|i| facets[i])
        .collect();
    let mut given = dec.leaves.clone();
    leaf_set.sort();
    given.sort();
    if leaf_set != given || dec.leaves.len() + dec.deck.len() != facets.len() {
        return Err(Error::NotGrafted);
    }
    let covered = dec.leaves.iter().fold(Face::EMPTY, |u, f| u.union(*f));
    if dec.leaves.iter().map(|f| f.len()).sum::<usize>() != covered.len()
        || dec
            .deck
            .iter()
            .any(|g| !g.is_subset(covered) || complex.facet_index(*g).is_none())
    {
        return Err(Error::NotGrafted);
    }

    let mut leaf_vars = Vec::new();
    let mut exponents = Vec::new();
    let mut substitutions = Vec::new();
    let mut linear_sequence = Vec::new();
    for &leaf in &dec.leaves {
        // a leaf of a complex with two or more facets always has a free vertex
        let y = leaf_free_vertices(complex, leaf)
            .first()
            .ok_or(Error::NotGrafted)?;
        let chain = embedded_chain(complex, leaf)?;
        let rank = |x: usize| {
            chain
                .iter()
                .position(|(_, c)| c.contains(x))
                .unwrap_or(chain.len())
        };
        let mut xs: Vec<usize> = leaf.without(y).iter().collect();
        xs.sort_by_key(|&x| (rank(x), x));
        linear_sequence.extend(xs.iter().map(|&x| (y, x)));
        leaf_vars.push(y);
        exponents.push(leaf.len() as u32);
        substitutions.push(xs);
    }
    let deck_monomials = dec
        .deck
        .iter()
        .map(|g| {
            dec.leaves
                .iter()
                .map(|f| g.intersection(*f).len() as u32)
                .collect()
        })
        .collect();
    Ok(ArtinianReduction {
        leaf_vars,
        exponents,
        substitutions,
        deck_monomials,
        linear_sequence,
    })
}

/// A square-free ideal produced by polarization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    /// Original variables followed by the fresh ones, in creation order.
    pub variables: Vec<String>,
    /// Supports of the generators as variable indices, in input order.
    pub generators: Vec<Vec<usize>>,
    /// `(base, fresh)` pairs; each stands for the linear form `fresh - base`.
    pub sequence: Vec<(usize, usize)>,
}

/// Polarizes a monomial ideal one variable at a time.
///
/// While some generator has a variable `x` to a power of two or more, a fresh
/// variable `x'` replaces one factor of `x` in every generator divisible by
/// `x`, and `x' - x` joins the sequence. `generators` are exponent vectors
/// over `variables`.
pub fn polarize<S: AsRef<str>>(variables: &[S], generators: &[Vec<u32>]) -> Polarization {
    let mut names: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
    let mut gens: Vec<Vec<u32>> = generators.to_vec();
    let mut sequence = Vec::new();
    let mut splits = vec![0usize; names.len()];
    while let Some(x) =
        (0..names.len()).find(|&x| gens.iter().any(|g| g.get(x).copied().unwrap_or(0) >= 2))
    {
        splits[x] += 1;
        let mut label = format!("{}{}", names[x], "'".repeat(splits[x]));
        while names.contains(&label) {
            label.push('\'');
        }
        let fresh = names.len();
        names.push(label);
        splits.push(0);
        for g in gens.iter_mut() {
            g.resize(names.len(), 0);
            if g[x] >= 1 {
                g[x] -= 1;
                g[fresh] = 1;
            }
        }
        sequence.push((x, fresh));
    }
    let generators = gens
        .iter()
        .map(|g| (0..g.len()).filter(|&v| g[v] > 0).collect())
        .collect();
    Polarization {
        variables: names,
        generators,
        sequence,
    }
}

/// Polarizes the Artinian reduction of a grafted complex and compares the
/// result with its facet ideal, mapping the `k`-th fresh copy of `y_i` to
/// `x^i_k`.
pub fn verify_polarization_roundtrip(complex: &Complex) -> Result<bool> {
    let dec = is_grafted(complex)?.ok_or(Error::NotGrafted)?;
    let ar = artinian_reduction(complex, &dec)?;
    let names: Vec<&str> = ar
        .leaf_vars
        .iter()
        .map(|&y| complex.universe().name(y))
        .collect();
    let pol = polarize(&names, &ar.generators());

    let r = ar.leaf_vars.len();
    let mut vertex_of: Vec<usize> = ar.leaf_vars.clone();
    vertex_of.resize(pol.variables.len(), usize::MAX);
    let mut used = vec![0usize; pol.variables.len()];
    for &(base, fresh) in &pol.sequence {
        if base >= r {
            return Ok(false);
        }
        let Some(&x) = ar.substitutions[base].get(used[base]) else {
            return Ok(false);
        };
        used[base] += 1;
        vertex_of[fresh] = x;
    }
    if (0..r).any(|i| used[i] != ar.substitutions[i].len()) {
        return Ok(false);
    }
    let mut recovered: Vec<Face> = pol
        .generators
        .iter()
        .map(|g| Face::from_indices(g.iter().map(|&v| vertex_of[v])))
        .collect();
    let mut facets = complex.facets().to_vec();
    recovered.sort();
    facets.sort();
    Ok(recovered == facets)
}
