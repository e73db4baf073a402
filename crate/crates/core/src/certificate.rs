//! Certificates for distinguishing numbers and their independent check.
//!
//! A certificate carries a coloring with `dist` colors (the upper bound)
//! and a tagged argument that `dist - 1` colors do not suffice (the lower
//! bound). [`verify_certificate`] rebuilds the graph from `n`, `k`, `I`
//! and re-derives both.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::aut::{find_nontrivial, is_distinguishing_with, Coloring, SearchConfig};
use crate::combinatorics::{binom_u64, KSubset};
use crate::dist::{find_distinguishing_coloring, is_asymmetric_determining_set, DistCase, PairSwapBreaker};
use crate::error::Error;
use crate::graph::{Graph, MergedJohnsonSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum UpperMethod {
    #[serde(rename = "complete-graph")]
    CompleteGraph,
    #[serde(rename = "detset-asymmetric")]
    DetsetAsymmetric,
    #[serde(rename = "random-3")]
    Random3,
    #[serde(rename = "matching-formula")]
    MatchingFormula,
    #[serde(rename = "exhaustive")]
    Exhaustive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LowerMethod {
    #[serde(rename = "trivial")]
    Trivial,
    #[serde(rename = "exhaustive-(r-1)")]
    ExhaustiveBelow,
    #[serde(rename = "pair-swap-construction")]
    PairSwapConstruction,
    #[serde(rename = "pigeonhole-count")]
    PigeonholeCount,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperBound {
    pub method: UpperMethod,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detset: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBound {
    pub method: LowerMethod,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredVertex {
    /// Sorted 1-based elements of the vertex's `k`-subset.
    pub vertex: Vec<usize>,
    /// 1-based color.
    pub color: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub k: usize,
    #[serde(rename = "I")]
    pub index_set: Vec<usize>,
    pub dist: usize,
    pub coloring: Vec<ColoredVertex>,
    pub upper: UpperBound,
    pub lower: LowerBound,
}

impl Certificate {
    /// Packs a 0-based coloring of `g` (built from `spec`) with 1-based
    /// colors; `dist` is the number of colors used.
    pub fn new(
        spec: &MergedJohnsonSpec,
        g: &Graph,
        coloring: &Coloring,
        upper: UpperBound,
        lower: LowerBound,
    ) -> crate::error::Result<Self> {
        let coloring_entries = (0..g.n_vertices())
            .map(|v| {
                let label = g.label(v).ok_or_else(|| Error::Internal("graph has no labels".into()))?;
                Ok(ColoredVertex {
                    vertex: label.elements(),
                    color: coloring.color(v) + 1,
                })
            })
            .collect::<crate::error::Result<Vec<_>>>()?;
        Ok(Certificate {
            n: spec.n(),
            k: spec.k(),
            index_set: spec.index_set().to_vec(),
            dist: coloring.used_colors(),
            coloring: coloring_entries,
            upper,
            lower,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn spec(&self) -> crate::error::Result<MergedJohnsonSpec> {
        MergedJohnsonSpec::canonicalize(self.n, self.k, &self.index_set)
    }
}

/// Why a certificate was rejected.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Rejection {
    #[error("invalid spec: {0}")]
    Spec(Error),
    #[error("malformed coloring: {0}")]
    Coloring(String),
    #[error("color {color} outside 1..={dist}")]
    ColorOutOfRange { color: usize, dist: usize },
    #[error("color-preserving automorphism found")]
    NotDistinguishing,
    #[error("upper bound: {0}")]
    Upper(String),
    #[error("lower bound: {0}")]
    Lower(String),
    #[error("{0}")]
    Engine(Error),
}

impl Rejection {
    /// Short stable tag for scripts.
    pub fn code(&self) -> &'static str {
        match self {
            Rejection::Spec(_) => "invalid-spec",
            Rejection::Coloring(_) => "malformed-coloring",
            Rejection::ColorOutOfRange { .. } => "color-out-of-range",
            Rejection::NotDistinguishing => "not-distinguishing",
            Rejection::Upper(_) => "upper-bound",
            Rejection::Lower(_) => "lower-bound",
            Rejection::Engine(_) => "engine",
        }
    }

    /// Engine failures keep their error; everything else becomes internal.
    pub fn into_error(self) -> Error {
        match self {
            Rejection::Engine(e) => e,
            other => Error::Internal(other.to_string()),
        }
    }
}

impl From<Error> for Rejection {
    fn from(e: Error) -> Self {
        Rejection::Engine(e)
    }
}

/// Random 2-colorings the pair-swap lower bound is re-run on.
pub const PAIR_SWAP_SAMPLE: usize = 64;

pub fn verify_certificate(cert: &Certificate) -> Result<(), Rejection> {
    verify_certificate_with(cert, &SearchConfig::default())
}

pub fn verify_certificate_with(cert: &Certificate, config: &SearchConfig) -> Result<(), Rejection> {
    let spec = cert.spec().map_err(Rejection::Spec)?;
    if (spec.n(), spec.k(), spec.index_set()) != (cert.n, cert.k, cert.index_set.as_slice()) {
        return Err(Rejection::Spec(Error::InvalidSpec("spec is not in canonical form".into())));
    }
    let g = Graph::build(&spec)?;
    let coloring = read_coloring(cert, &g)?;
    if !is_distinguishing_with(&g, &coloring, config)? {
        return Err(Rejection::NotDistinguishing);
    }
    check_upper(cert, &g, &coloring, config)?;
    check_lower(cert, &spec, &g, &coloring, config)
}

fn read_coloring(cert: &Certificate, g: &Graph) -> Result<Coloring, Rejection> {
    let nv = g.n_vertices();
    if cert.coloring.len() != nv {
        return Err(Rejection::Coloring(format!("{} entries for {nv} vertices", cert.coloring.len())));
    }
    let mut colors = vec![None; nv];
    for entry in &cert.coloring {
        if !entry.vertex.windows(2).all(|w| w[0] < w[1]) {
            return Err(Rejection::Coloring(format!("vertex {:?} is not sorted", entry.vertex)));
        }
        let set = KSubset::from_elements(cert.n, &entry.vertex)
            .map_err(|e| Rejection::Coloring(format!("vertex {:?}: {e}", entry.vertex)))?;
        let v = g
            .vertex_of(&set)
            .ok_or_else(|| Rejection::Coloring(format!("vertex {:?} is not a {}-subset", entry.vertex, cert.k)))?;
        if entry.color == 0 || entry.color > cert.dist {
            return Err(Rejection::ColorOutOfRange {
                color: entry.color,
                dist: cert.dist,
            });
        }
        if colors[v].replace(entry.color - 1).is_some() {
            return Err(Rejection::Coloring(format!("vertex {:?} listed twice", entry.vertex)));
        }
    }
    let colors = colors.into_iter().map(|c| c.expect("every vertex seen")).collect();
    Coloring::new(colors, cert.dist.max(1)).map_err(Rejection::Engine)
}

fn check_upper(cert: &Certificate, g: &Graph, coloring: &Coloring, config: &SearchConfig) -> Result<(), Rejection> {
    match cert.upper.method {
        UpperMethod::DetsetAsymmetric => {
            let labels = cert
                .upper
                .detset
                .as_ref()
                .ok_or_else(|| Rejection::Upper("detset-asymmetric without a detset".into()))?;
            let mut set = Vec::with_capacity(labels.len());
            for elements in labels {
                let v = KSubset::from_elements(cert.n, elements)
                    .ok()
                    .and_then(|s| g.vertex_of(&s))
                    .ok_or_else(|| Rejection::Upper(format!("detset entry {elements:?} is not a vertex")))?;
                set.push(v);
            }
            if !is_asymmetric_determining_set(g, &set, config)? {
                return Err(Rejection::Upper("detset is not an asymmetric determining set".into()));
            }
            if cert.dist != 2 || set.iter().any(|&v| coloring.color(v) != coloring.color(set[0])) {
                return Err(Rejection::Upper("detset is not one color class of a 2-coloring".into()));
            }
        }
        UpperMethod::CompleteGraph if !g.is_complete() => {
            return Err(Rejection::Upper("graph is not complete".into()));
        }
        _ => {}
    }
    Ok(())
}

fn check_lower(
    cert: &Certificate,
    spec: &MergedJohnsonSpec,
    g: &Graph,
    coloring: &Coloring,
    config: &SearchConfig,
) -> Result<(), Rejection> {
    let r = cert.dist;
    let fail = |why: String| Err(Rejection::Lower(why));
    match cert.lower.method {
        LowerMethod::Trivial => match r {
            0 | 1 => Ok(()),
            2 if find_nontrivial(g, None, &[], config)?.is_some() => Ok(()),
            2 => fail("graph is asymmetric, one color suffices".into()),
            _ => fail(format!("trivial bound cannot certify {r} colors")),
        },
        LowerMethod::ExhaustiveBelow => match find_distinguishing_coloring(g, r - 1, config)? {
            None => Ok(()),
            Some(_) => fail(format!("a distinguishing coloring with {} colors exists", r - 1)),
        },
        LowerMethod::PairSwapConstruction => {
            if r != 3 {
                return fail(format!("pair swaps rule out 2 colors, not {}", r - 1));
            }
            let breaker = PairSwapBreaker::new(spec).map_err(|e| Rejection::Lower(e.to_string()))?;
            let nv = g.n_vertices();
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            let mut samples = vec![
                Coloring::from_colors(vec![0; nv]),
                Coloring::new(
                    (0..nv).map(|v| usize::from(!g.label(v).expect("labelled").contains(1))).collect(),
                    2,
                )?,
                Coloring::new(coloring.colors().iter().map(|&c| c.min(1)).collect(), 2)?,
            ];
            for _ in 0..PAIR_SWAP_SAMPLE {
                samples.push(Coloring::new((0..nv).map(|_| rng.gen_range(0..2)).collect(), 2)?);
            }
            for c in &samples {
                breaker
                    .breaking_automorphism(c)
                    .map_err(|e| Rejection::Lower(format!("no breaker: {e}")))?;
            }
            Ok(())
        }
        LowerMethod::PigeonholeCount => {
            if g.is_complete() {
                return if r == g.n_vertices() {
                    Ok(())
                } else {
                    fail(format!("complete graph on {} vertices needs that many colors", g.n_vertices()))
                };
            }
            if crate::dist::classify_dist(spec) != DistCase::Matching {
                return fail("pigeonhole count applies to matchings and complete graphs only".into());
            }
            let pairs = binom_u64(spec.n(), spec.k()) / 2;
            let below = ((r - 1) * r.saturating_sub(2) / 2) as u64;
            if below < pairs {
                Ok(())
            } else {
                fail(format!("C({},2) = {below} covers {pairs} pairs", r - 1))
            }
        }
    }
}
