//! `facets`: command-line front end for the facet-ideals library.

mod pretty;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use facet_ideals::cm::{artinian_reduction, polarize, verify_polarization_roundtrip};
use facet_ideals::io::{parse_any, ComplexJson};
use facet_ideals::report::{self, AnalyzeOptions, ArtinianJson, GraftingJson, HomologyJson};
use facet_ideals::{
    cm_reisner, cm_tree, facet_ideal, generate, graft, is_grafted, is_tree, localize_labels,
    nonface_ideal, par, Complex, GeneratorConfig, GeneratorMode,
};

#[derive(Parser, Debug)]
#[command(
    name = "facets",
    version,
    about = "Facet ideals of simplicial complexes"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Shorthand for `--format pretty`.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for enumeration and homology.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Tree,
    Reisner,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Random,
    #[value(alias = "random_tree")]
    RandomTree,
    #[value(alias = "random_grafted")]
    RandomGrafted,
}

impl From<Mode> for GeneratorMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Random => GeneratorMode::Random,
            Mode::RandomTree => GeneratorMode::RandomTree,
            Mode::RandomGrafted => GeneratorMode::RandomGrafted,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Full report: covers, independence, leaves, tree, grafting, primes, CM.
    Analyze {
        input: PathBuf,
        /// Also run the homology oracle over this characteristic.
        #[arg(long = "char")]
        characteristic: Option<u64>,
    },
    /// Minimal vertex covers and maximum independent facet sets.
    Covers { input: PathBuf },
    /// Leaves with their universal sets, joints and free vertices.
    Leaves { input: PathBuf },
    /// Tree recognition; exits 1 with a leafless witness when not a tree.
    IsTree { input: PathBuf },
    /// Localization at the complement of the kept vertices.
    Localize {
        input: PathBuf,
        /// Kept vertices, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<String>,
    },
    /// Grafts a leaf onto each class of a partition of the vertices.
    Graft {
        input: PathBuf,
        /// Classes separated by `|`, vertices by spaces or commas. Default:
        /// one class per vertex.
        #[arg(long)]
        partition: Option<String>,
    },
    /// Facet or non-face ideal generators.
    Ideal {
        input: PathBuf,
        #[arg(long, conflicts_with = "nonface")]
        facet: bool,
        #[arg(long)]
        nonface: bool,
    },
    /// Minimal primes, height and Krull dimension of the facet ideal.
    Decompose { input: PathBuf },
    /// Cohen-Macaulay test; exits 1 when the verdict is negative.
    Cm {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Field characteristic: 0 or a prime.
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
    /// Polarizes the Artinian reduction of a grafted complex and compares
    /// with its facet ideal; exits 1 on mismatch.
    PolarizeCheck { input: PathBuf },
    /// Prints a seeded random complex as JSON.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Mode::Random)]
        mode: Mode,
        /// Maximum number of vertices.
        #[arg(long, default_value_t = 10)]
        vertices: usize,
        /// Maximum number of facets.
        #[arg(long, default_value_t = 8)]
        facets: usize,
        #[arg(long, default_value_t = 4)]
        max_facet_size: usize,
    },
}

fn read_input(path: &PathBuf) -> anyhow::Result<Complex> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(parse_any(&text)?)
}

fn parse_partition(spec: &str) -> anyhow::Result<Vec<Vec<String>>> {
    let classes: Vec<Vec<String>> = spec
        .split('|')
        .map(|c| {
            c.split(|ch: char| ch.is_whitespace() || ch == ',')
                .filter(|s| !s.is_empty())
                .map(str::to_string)
                .collect()
        })
        .collect();
    if classes.iter().any(Vec::is_empty) {
        bail!("empty class in partition `{spec}`");
    }
    Ok(classes)
}

/// A rendered result and whether its verdict was positive.
struct Outcome {
    value: Value,
    ok: bool,
}

fn value<T: Serialize>(x: &T) -> anyhow::Result<Value> {
    Ok(serde_json::to_value(x)?)
}

fn done<T: Serialize>(x: &T) -> anyhow::Result<Outcome> {
    Ok(Outcome {
        value: value(x)?,
        ok: true,
    })
}

fn run(verb: &Verb) -> anyhow::Result<Outcome> {
    match verb {
        Verb::Analyze {
            input,
            characteristic,
        } => {
            let c = read_input(input)?;
            let opts = AnalyzeOptions {
                reisner: *characteristic,
                witness_cap: None,
            };
            done(&report::analyze(&c, opts)?)
        }
        Verb::Covers { input } => done(&report::cover_json(&read_input(input)?, None)?),
        Verb::Leaves { input } => done(&report::leaves_json(&read_input(input)?)?),
        Verb::IsTree { input } => {
            let t = report::tree_json(&read_input(input)?)?;
            Ok(Outcome {
                ok: t.tree,
                value: value(&t)?,
            })
        }
        Verb::Localize { input, keep } => {
            let c = read_input(input)?;
            let r = localize_labels(&c, keep)?;
            done(&report::localization_json(&c, &r)?)
        }
        Verb::Graft { input, partition } => {
            let c = read_input(input)?;
            let classes = partition.as_deref().map(parse_partition).transpose()?;
            let g = graft(&c, classes.as_deref())?;
            done(&json!({
                "complex": ComplexJson::from(&g.complex),
                "decomposition": GraftingJson::new(&g.complex, &g.decomposition),
            }))
        }
        Verb::Ideal { input, nonface, .. } => {
            let c = read_input(input)?;
            let ideal = if *nonface {
                nonface_ideal(&c)?
            } else {
                facet_ideal(&c)
            };
            done(&facet_ideals::ideal::IdealJson::from(&ideal))
        }
        Verb::Decompose { input } => done(&report::decomposition_json(&read_input(input)?)?),
        Verb::Cm {
            input,
            method,
            characteristic,
        } => {
            let c = read_input(input)?;
            let tree = match method {
                Method::Tree => Some(cm_tree(&c)?),
                Method::Both if is_tree(&c)?.verdict => Some(cm_tree(&c)?),
                _ => None,
            };
            let reisner = match method {
                Method::Tree => None,
                _ => Some(cm_reisner(&c, *characteristic)?),
            };
            let ok = tree.unwrap_or(true) && reisner.as_ref().is_none_or(|r| r.cm);
            let agree = match (tree, &reisner) {
                (Some(t), Some(r)) => Some(t == r.cm),
                _ => None,
            };
            Ok(Outcome {
                ok,
                value: json!({
                    "cm": ok,
                    "tree": tree,
                    "methods_agree": agree,
                    "reisner": reisner.as_ref().map(|r| HomologyJson::new(&c, r)),
                }),
            })
        }
        Verb::PolarizeCheck { input } => {
            let c = read_input(input)?;
            let dec = is_grafted(&c)?.ok_or(facet_ideals::Error::NotGrafted)?;
            let ar = artinian_reduction(&c, &dec)?;
            let names: Vec<&str> = ar.leaf_vars.iter().map(|&y| c.universe().name(y)).collect();
            let pol = polarize(&names, &ar.generators());
            let roundtrip = verify_polarization_roundtrip(&c)?;
            let polarized: Vec<Vec<&str>> = pol
                .generators
                .iter()
                .map(|g| g.iter().map(|&v| pol.variables[v].as_str()).collect())
                .collect();
            Ok(Outcome {
                ok: roundtrip,
                value: json!({
                    "roundtrip": roundtrip,
                    "artinian": ArtinianJson::new(&c, &ar),
                    "polarized": polarized,
                }),
            })
        }
        Verb::Random {
            seed,
            mode,
            vertices,
            facets,
            max_facet_size,
        } => {
            let cfg = GeneratorConfig {
                seed: *seed,
                mode: (*mode).into(),
                min_vertices: 3.min(*vertices),
                max_vertices: *vertices,
                max_facets: *facets,
                max_facet_size: *max_facet_size,
            };
            done(&ComplexJson::from(&generate(&cfg)?))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        par::configure_threads(jobs);
    }
    let pretty = cli.pretty || cli.format == Format::Pretty;
    match run(&cli.verb) {
        Ok(out) => {
            if pretty {
                print!("{}", pretty::render(&out.value));
            } else {
                println!("{}", out.value);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
