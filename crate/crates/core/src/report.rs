//! Label-based JSON views of the analysis results.

use serde::Serialize;

use crate::cm::{
    cm_reisner, cm_tree, verify_polarization_roundtrip, ArtinianReduction, HomologyReport,
};
use crate::complex::{Complex, Face};
use crate::covers::{independence_capped, minimal_vertex_covers, IndependenceReport};
use crate::error::Result;
use crate::ideal::decompose;
use crate::io::ComplexJson;
use crate::transform::{GraftingDecomposition, LocalizationKind, LocalizationResult};
use crate::tree::{is_tree, joints, leaf_report, leaves};

fn labels(c: &Complex, faces: &[Face]) -> Vec<Vec<String>> {
    faces.iter().map(|f| c.labels(*f)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexSummary {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
    pub dimension: Option<usize>,
    pub connected: bool,
}

impl ComplexSummary {
    pub fn new(c: &Complex) -> Self {
        ComplexSummary {
            vertices: c.universe().names().to_vec(),
            facets: c.facet_labels(),
            dimension: c.dimension().ok(),
            connected: c.is_connected().unwrap_or(false),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverJson {
    pub alpha: usize,
    pub beta: usize,
    pub unmixed: bool,
    pub covers: Vec<Vec<String>>,
    /// Maximum independent sets as facet indices.
    pub independent_sets: Vec<Vec<usize>>,
}

pub fn cover_json(c: &Complex, witness_cap: Option<usize>) -> Result<CoverJson> {
    let covers = minimal_vertex_covers(c)?;
    let ind = independence_capped(c, witness_cap)?;
    Ok(CoverJson {
        alpha: covers.alpha,
        beta: ind.beta,
        unmixed: covers.unmixed,
        covers: labels(c, &covers.covers),
        independent_sets: ind.witnesses,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeJson {
    pub tree: bool,
    pub witness: Option<Vec<usize>>,
}

pub fn tree_json(c: &Complex) -> Result<TreeJson> {
    let cert = is_tree(c)?;
    Ok(TreeJson {
        tree: cert.verdict,
        witness: cert.witness,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LeafJson {
    pub facet: Vec<String>,
    pub universal_set: Vec<Vec<String>>,
    pub joints: Vec<Vec<String>>,
    pub free_vertices: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LeavesJson {
    pub leaves: Vec<LeafJson>,
    pub joints: Vec<Vec<String>>,
}

pub fn leaves_json(c: &Complex) -> Result<LeavesJson> {
    let reports = leaves(c)?
        .into_iter()
        .map(|f| {
            let r = leaf_report(c, f)?;
            Ok(LeafJson {
                facet: c.labels(r.facet),
                universal_set: labels(c, &r.universal_set),
                joints: labels(c, &r.joints),
                free_vertices: c.labels(r.free_vertices),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LeavesJson {
        leaves: reports,
        joints: labels(c, &joints(c)?),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GraftingJson {
    pub leaves: Vec<Vec<String>>,
    pub deck: Vec<Vec<String>>,
    pub r: usize,
    pub s: usize,
}

impl GraftingJson {
    pub fn new(c: &Complex, d: &GraftingDecomposition) -> Self {
        GraftingJson {
            leaves: labels(c, &d.leaves),
            deck: labels(c, &d.deck),
            r: d.r(),
            s: d.s(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionJson {
    pub primes: Vec<Vec<String>>,
    pub krull_dim: usize,
    pub height: usize,
}

pub fn decomposition_json(c: &Complex) -> Result<DecompositionJson> {
    let d = decompose(c)?;
    Ok(DecompositionJson {
        primes: labels(c, &d.primes),
        krull_dim: d.krull_dim,
        height: d.height,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LinkJson {
    pub face: Vec<String>,
    pub link_dim: i32,
    pub reduced_betti: Vec<usize>,
    /// Torsion coefficients as decimal strings, per degree.
    pub torsion: Vec<Vec<String>>,
    pub failing_degree: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionJson {
    pub face: Vec<String>,
    pub degree: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyJson {
    pub characteristic: u64,
    pub cm: bool,
    pub gamma_dim: i32,
    pub torsion_primes: Vec<u64>,
    pub obstruction: Option<ObstructionJson>,
    pub links: Vec<LinkJson>,
}

impl HomologyJson {
    pub fn new(c: &Complex, h: &HomologyReport) -> Self {
        let mut primes: Vec<u64> = h
            .links
            .iter()
            .flat_map(|l| l.torsion_primes.iter().copied())
            .collect();
        primes.sort_unstable();
        primes.dedup();
        HomologyJson {
            characteristic: h.characteristic,
            cm: h.cm,
            gamma_dim: h.gamma_dim,
            torsion_primes: primes,
            obstruction: h.obstruction.map(|(f, d)| ObstructionJson {
                face: c.labels(f),
                degree: d,
            }),
            links: h
                .links
                .iter()
                .map(|l| LinkJson {
                    face: c.labels(l.face),
                    link_dim: l.link_dim,
                    reduced_betti: l.reduced_betti.clone(),
                    torsion: l
                        .torsion
                        .iter()
                        .map(|t| t.iter().map(|x| x.to_string()).collect())
                        .collect(),
                    failing_degree: l.failing_degree,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalizationJson {
    pub kind: LocalizationKind,
    pub kept: Vec<String>,
    pub complex: Option<ComplexJson>,
    pub covers: Option<Vec<Vec<String>>>,
}

pub fn localization_json(original: &Complex, r: &LocalizationResult) -> Result<LocalizationJson> {
    let covers = match &r.complex {
        Some(c) => Some(labels(c, &minimal_vertex_covers(c)?.covers)),
        None => None,
    };
    Ok(LocalizationJson {
        kind: r.kind(),
        kept: original.labels(r.kept),
        complex: r.complex.as_ref().map(ComplexJson::from),
        covers,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ArtinianJson {
    pub leaf_vars: Vec<String>,
    pub exponents: Vec<u32>,
    pub substitutions: Vec<Vec<String>>,
    pub deck_monomials: Vec<Vec<u32>>,
    /// Linear forms `y - x` as `[y, x]` pairs.
    pub linear_sequence: Vec<[String; 2]>,
}

impl ArtinianJson {
    pub fn new(c: &Complex, a: &ArtinianReduction) -> Self {
        let name = |v: usize| c.universe().name(v).to_string();
        ArtinianJson {
            leaf_vars: a.leaf_vars.iter().map(|&v| name(v)).collect(),
            exponents: a.exponents.clone(),
            substitutions: a
                .substitutions
                .iter()
                .map(|s| s.iter().map(|&v| name(v)).collect())
                .collect(),
            deck_monomials: a.deck_monomials.clone(),
            linear_sequence: a
                .linear_sequence
                .iter()
                .map(|&(y, x)| [name(y), name(x)])
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CmJson {
    /// Present when the input is a tree.
    pub tree: Option<bool>,
    pub reisner: Option<HomologyJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub complex: ComplexSummary,
    pub covers: CoverJson,
    pub independence: IndependenceReport,
    pub leaves: Vec<Vec<String>>,
    pub tree: TreeJson,
    pub grafting: Option<GraftingJson>,
    pub decomposition: DecompositionJson,
    pub polarization_roundtrip: Option<bool>,
    pub cm: CmJson,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    /// Run the homology oracle over this characteristic.
    pub reisner: Option<u64>,
    pub witness_cap: Option<usize>,
}

pub fn analyze(c: &Complex, opts: AnalyzeOptions) -> Result<AnalysisReport> {
    let tree = tree_json(c)?;
    let grafting = crate::transform::is_grafted(c)?;
    let cm_tree_verdict = if tree.tree { Some(cm_tree(c)?) } else { None };
    let reisner = match opts.reisner {
        Some(p) => Some(HomologyJson::new(c, &cm_reisner(c, p)?)),
        None => None,
    };
    Ok(AnalysisReport {
        complex: ComplexSummary::new(c),
        covers: cover_json(c, opts.witness_cap)?,
        independence: independence_capped(c, opts.witness_cap)?,
        leaves: labels(c, &leaves(c)?),
        polarization_roundtrip: match grafting {
            Some(_) => Some(verify_polarization_roundtrip(c)?),
            None => None,
        },
        grafting: grafting.as_ref().map(|d| GraftingJson::new(c, d)),
        tree,
        decomposition: decomposition_json(c)?,
        cm: CmJson {
            tree: cm_tree_verdict,
            reisner,
        },
    })
}
