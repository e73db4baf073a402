//! Distinguishing numbers of merged Johnson graphs.
//!
//! [`distinguishing_number`] sorts a spec into one of eight cases, builds a
//! distinguishing coloring for it, attaches evidence that no coloring with
//! fewer colors exists, and checks the result before returning it as a
//! [`Certificate`].

use std::fmt;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::aut::{
    find_nontrivial, is_asymmetric, is_automorphism, is_determining_set_with, is_distinguishing_with,
    is_set_distinguishing, Coloring, SearchConfig, VertexPermutation, DEFAULT_NODE_BUDGET,
};
use crate::certificate::{verify_certificate_with, Certificate, LowerBound, LowerMethod, UpperBound, UpperMethod};
use crate::combinatorics::{binom_u64, window, KSubset, Permutation};
use crate::error::{Error, Result};
use crate::graph::{Graph, MergedJohnsonSpec};
use crate::group_actions::{classify, induced_vertex_perm, AutCase};

/// Parameter families that need different colorings, plus complete graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DistCase {
    /// `k = 1` or `I = {1..k}`.
    Complete,
    /// `2 <= k < (n-1)/2`, not `J(12,4)_{1,3}` or `J(12,4)_{2,4}`.
    Generic,
    /// `J(12,4)_{1,3}` and `J(12,4)_{2,4}`.
    TwelveFour,
    /// `J(5,2)_{1}` and `J(5,2)_{2}`.
    Petersen,
    /// `k = (n-1)/2`, `I != k+1-I`.
    OddPlain,
    /// `k = (n-1)/2`, `I = k+1-I`.
    OddExtended,
    /// `n = 2k`, `I' != I''`, `I` neither `{k}` nor `{1..k-1}`.
    HalfDirect,
    /// `n = 2k`, `I' = I''`, `I` neither `{k}` nor `{1..k-1}`.
    HalfPairSwap,
    /// `n = 2k`, `I = {k}` or `{1..k-1}`: a perfect matching or its complement.
    Matching,
}

impl DistCase {
    /// Case number 1 to 8; `None` for complete graphs.
    pub fn number(self) -> Option<u8> {
        match self {
            DistCase::Complete => None,
            DistCase::Generic => Some(1),
            DistCase::TwelveFour => Some(2),
            DistCase::Petersen => Some(3),
            DistCase::OddPlain => Some(4),
            DistCase::OddExtended => Some(5),
            DistCase::HalfDirect => Some(6),
            DistCase::HalfPairSwap => Some(7),
            DistCase::Matching => Some(8),
        }
    }
}

impl fmt::Display for DistCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.number() {
            Some(c) => write!(f, "case {c}"),
            None => write!(f, "complete graph"),
        }
    }
}

pub fn classify_dist(spec: &MergedJohnsonSpec) -> DistCase {
    if spec.k() == 1 || spec.is_full() {
        return DistCase::Complete;
    }
    if spec.n() == 5 {
        return DistCase::Petersen;
    }
    match classify(spec).expect("k >= 2 and I proper").case {
        AutCase::Symmetric => DistCase::Generic,
        AutCase::Orthogonal => DistCase::TwelveFour,
        AutCase::OddSymmetric => DistCase::OddPlain,
        AutCase::OddExtended => DistCase::OddExtended,
        AutCase::HalfDirect => DistCase::HalfDirect,
        AutCase::HalfPairSwap => DistCase::HalfPairSwap,
        AutCase::HalfWreath => DistCase::Matching,
    }
}

#[derive(Clone, Debug)]
pub struct DistOptions {
    /// Seed for every randomized step.
    pub seed: u64,
    pub node_budget: u64,
    /// Draws allowed for the random three-coloring.
    pub max_attempts: usize,
    /// Candidate sets tried by the randomized determining-set search.
    pub detset_attempts: usize,
}

impl Default for DistOptions {
    fn default() -> Self {
        DistOptions {
            seed: 0,
            node_budget: DEFAULT_NODE_BUDGET,
            max_attempts: 100,
            detset_attempts: 2000,
        }
    }
}

impl DistOptions {
    pub fn search_config(&self) -> SearchConfig {
        SearchConfig {
            node_budget: self.node_budget,
        }
    }
}

/// Smallest `r` with `C(r,2) >= C(2m,m)/2`.
pub fn case8_value(m: u64) -> u64 {
    let pairs = binom_u64(2 * m as usize, m as usize) / 2;
    let mut r = 2u64;
    while r * (r - 1) / 2 < pairs {
        r += 1;
    }
    r
}

/// Complementary pairs `{v, v̄}` of `J(2m,m)`, each given as
/// `(side containing 1, other side)` in colex order of the first.
pub fn complementary_pairs(m: usize) -> Vec<(usize, usize)> {
    crate::combinatorics::all_subsets(2 * m, m)
        .filter(|v| v.contains(1))
        .map(|v| (v.rank() as usize, v.complement().rank() as usize))
        .collect()
}

/// Gives each complementary pair its own unordered pair of colors out of
/// `r`, taking pairs in lexicographic order; the side containing 1 gets
/// the smaller color.
pub fn matching_coloring(m: usize, r: usize) -> Result<Coloring> {
    let components = complementary_pairs(m);
    let available = (r * r.saturating_sub(1) / 2) as u64;
    if available < components.len() as u64 {
        return Err(Error::TooFewColors {
            colors: r,
            pairs: available,
            components: components.len() as u64,
        });
    }
    let color_pairs = (0..r).flat_map(|a| (a + 1..r).map(move |b| (a, b)));
    let mut colors = vec![0; 2 * components.len()];
    for (&(side, other), (a, b)) in components.iter().zip(color_pairs) {
        colors[side] = a;
        colors[other] = b;
    }
    Coloring::new(colors, r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetsetFamily {
    /// `J(12,4)_{1,3}`.
    TwelveFour,
    /// `J(2m+1,m)_{1,m}`, `m >= 3`.
    OddOneM(usize),
    /// `J(2m,m)_{1}`, `m >= 3`.
    HalfOne(usize),
}

fn windows(phi: &Permutation, k: usize) -> impl Iterator<Item = usize> + '_ {
    (1..=phi.points() as i64).map(move |j| window(phi, j, k).rank() as usize)
}

fn vertex(n: usize, elements: &[usize]) -> Result<usize> {
    Ok(KSubset::from_elements(n, elements)?.rank() as usize)
}

fn push_unique(set: &mut Vec<usize>, v: usize) {
    if !set.contains(&v) {
        set.push(v);
    }
}

fn x_set(m: usize) -> Vec<usize> {
    (1..=m - 2).chain([m, m + 2]).collect()
}

fn y_set(m: usize) -> Vec<usize> {
    (2..=m - 1).chain([m + 1, m + 3]).collect()
}

/// The determining sets built from cyclic windows for the three covered
/// families. Any other spec is `UncoveredFamily`.
pub fn determining_set_for(spec: &MergedJohnsonSpec) -> Result<(Vec<usize>, DetsetFamily)> {
    let (n, k) = (spec.n(), spec.k());
    let set = spec.index_set();
    let id = Permutation::identity(n);
    if n == 12 && k == 4 && set == [1, 3] {
        let mut s = Vec::new();
        for phi in [id, Permutation::transposition(1, n)?, Permutation::transposition(2, n)?] {
            for v in windows(&phi, k) {
                push_unique(&mut s, v);
            }
        }
        return Ok((s, DetsetFamily::TwelveFour));
    }
    if k >= 3 && n == 2 * k + 1 && set == [1, k] {
        let s = windows(&id, k).take(k + 2).collect();
        return Ok((s, DetsetFamily::OddOneM(k)));
    }
    if k >= 3 && n == 2 * k && set == [1] {
        let mut s: Vec<usize> = windows(&id, k).collect();
        push_unique(&mut s, vertex(n, &x_set(k))?);
        return Ok((s, DetsetFamily::HalfOne(k)));
    }
    Err(Error::UncoveredFamily(spec.to_string()))
}

/// The set whose induced subgraph is asymmetric in the named cases:
/// the determining set plus `X_1` for `J(12,4)`, plus `X_2, Y_2` for the
/// odd family, and windows plus `X_3, Y_3, Z_3` for the half family when
/// `Z_3` fits inside `[2m]`.
pub fn constructed_asymmetric_set(family: DetsetFamily) -> Result<Vec<usize>> {
    match family {
        DetsetFamily::TwelveFour => {
            let spec = MergedJohnsonSpec::canonicalize(12, 4, &[1, 3])?;
            let (mut s, _) = determining_set_for(&spec)?;
            push_unique(&mut s, vertex(12, &[1, 3, 5, 7])?);
            Ok(s)
        }
        DetsetFamily::OddOneM(m) => {
            let n = 2 * m + 1;
            let mut s: Vec<usize> = windows(&Permutation::identity(n), m).take(m + 2).collect();
            push_unique(&mut s, vertex(n, &x_set(m))?);
            push_unique(&mut s, vertex(n, &y_set(m))?);
            Ok(s)
        }
        DetsetFamily::HalfOne(m) => {
            let n = 2 * m;
            if m + 5 > n {
                return Err(Error::Precondition(format!("Z_3 needs m >= 5, got m = {m}")));
            }
            let z: Vec<usize> = (4..=m + 1).chain([m + 3, m + 5]).collect();
            let mut s: Vec<usize> = windows(&Permutation::identity(n), m).collect();
            for extra in [x_set(m), y_set(m), z] {
                push_unique(&mut s, vertex(n, &extra)?);
            }
            Ok(s)
        }
    }
}

/// Whether `set` is a determining set whose induced subgraph is asymmetric.
pub fn is_asymmetric_determining_set(g: &Graph, set: &[usize], config: &SearchConfig) -> Result<bool> {
    Ok(is_asymmetric(&g.induced_subgraph(set)?)? && is_determining_set_with(g, set, config)?)
}

/// Colors `set` by `set_colors` and everything else with one new color.
pub fn coloring_from_detset(g: &Graph, set: &[usize], set_colors: &[usize]) -> Result<Coloring> {
    if !is_determining_set_with(g, set, &SearchConfig::default())? {
        return Err(Error::NotDetermining);
    }
    if !is_set_distinguishing(g, set, set_colors)? {
        return Err(Error::NotSetDistinguishing);
    }
    let fresh = set_colors.iter().max().map_or(0, |c| c + 1);
    let mut colors = vec![fresh; g.n_vertices()];
    for (&v, &c) in set.iter().zip(set_colors) {
        colors[v] = c;
    }
    let used = if set.len() == g.n_vertices() { fresh } else { fresh + 1 };
    Coloring::new(colors, used.max(1))
}

/// Windows `V_1..V_n`, then windows plus random vertices, until one is a
/// determining set with asymmetric induced subgraph. The number of extra
/// vertices rises by one every four attempts and wraps around once it
/// reaches all remaining vertices.
pub fn search_asymmetric_detset(
    g: &Graph,
    spec: &MergedJohnsonSpec,
    seed: u64,
    attempts: usize,
    config: &SearchConfig,
) -> Result<Vec<usize>> {
    let mut base = Vec::new();
    for v in windows(&Permutation::identity(spec.n()), spec.k()) {
        push_unique(&mut base, v);
    }
    let rest: Vec<usize> = (0..g.n_vertices()).filter(|v| !base.contains(v)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..attempts {
        let extra = if attempt == 0 || rest.is_empty() { 0 } else { 1 + (attempt - 1) / 4 % rest.len() };
        let mut set = base.clone();
        set.extend(sample(&mut rng, rest.len(), extra).iter().map(|i| rest[i]));
        if is_asymmetric_determining_set(g, &set, config)? {
            return Ok(set);
        }
    }
    Err(Error::AttemptsExhausted(attempts))
}

/// Finds a non-identity automorphism of a graph with `n = 2k` and
/// `I' = I''` that preserves a given two-coloring.
///
/// If some vertex shares its color with its complement, the pair swap on
/// it works. Otherwise every pair is colored antipodally, and the induced
/// transposition `(1 2)` followed by pair swaps on the pairs it miscolors
/// works.
pub struct PairSwapBreaker {
    graph: Graph,
    complement: Vec<usize>,
    phi: VertexPermutation,
}

impl PairSwapBreaker {
    pub fn new(spec: &MergedJohnsonSpec) -> Result<Self> {
        if spec.n() != 2 * spec.k() || spec.k() < 2 || spec.i_prime() != spec.i_double_prime() {
            return Err(Error::Precondition(format!("{spec}: needs n = 2k >= 4 and I' = I''")));
        }
        if spec.is_full() {
            return Err(Error::Precondition(format!("{spec}: I must be proper")));
        }
        let graph = Graph::build(spec)?;
        let complement = (0..graph.n_vertices())
            .map(|v| graph.label(v).expect("labelled").complement().rank() as usize)
            .collect();
        let phi = induced_vertex_perm(&Permutation::transposition(1, spec.n())?, spec)?;
        Ok(PairSwapBreaker { graph, complement, phi })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn breaking_automorphism(&self, c: &Coloring) -> Result<VertexPermutation> {
        let nv = self.graph.n_vertices();
        if c.len() != nv {
            return Err(Error::SizeMismatch { expected: nv, found: c.len() });
        }
        if c.used_colors() > 2 {
            return Err(Error::Precondition("needs a coloring with at most 2 colors".into()));
        }
        let psi = match (0..nv).find(|&u| c.color(u) == c.color(self.complement[u])) {
            Some(u) => VertexPermutation::swap(nv, u, self.complement[u]),
            None => {
                let images = (0..nv)
                    .map(|u| {
                        let w = self.phi.apply(u);
                        if c.color(w) == c.color(u) {
                            w
                        } else {
                            self.complement[w]
                        }
                    })
                    .collect();
                VertexPermutation::new(images)?
            }
        };
        if psi.is_identity() || !c.preserved_by(&psi) || !is_automorphism(&self.graph, &psi)? {
            return Err(Error::Internal("pair-swap breaker failed its check".into()));
        }
        Ok(psi)
    }
}

pub fn breaking_automorphism(spec: &MergedJohnsonSpec, c: &Coloring) -> Result<VertexPermutation> {
    PairSwapBreaker::new(spec)?.breaking_automorphism(c)
}

/// Random colorings with `c(u) != c(ū)`: each complementary pair gets one
/// of the three 2-subsets of `{1,2,3}` uniformly and a uniform
/// orientation. Returns the first distinguishing one and the number of
/// draws used.
pub fn random_3_coloring(
    spec: &MergedJohnsonSpec,
    seed: u64,
    max_attempts: usize,
    config: &SearchConfig,
) -> Result<(Coloring, usize)> {
    if spec.n() != 2 * spec.k() || spec.k() < 2 {
        return Err(Error::Precondition(format!("{spec}: needs n = 2k >= 4")));
    }
    let g = Graph::build(spec)?;
    let pairs = complementary_pairs(spec.k());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const COLOR_PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];
    for attempt in 1..=max_attempts {
        let mut colors = vec![0; g.n_vertices()];
        for &(u, w) in &pairs {
            let (a, b) = COLOR_PAIRS[rng.gen_range(0..3)];
            let (a, b) = if rng.gen() { (a, b) } else { (b, a) };
            colors[u] = a;
            colors[w] = b;
        }
        let c = Coloring::new(colors, 3)?;
        if is_distinguishing_with(&g, &c, config)? {
            return Ok((c, attempt));
        }
    }
    Err(Error::AttemptsExhausted(max_attempts))
}

/// Upper limit on colorings an exhaustive search will visit.
pub const ENUMERATION_BUDGET: u64 = 100_000_000;

/// Colorings with at most `r` colors up to renaming colors: restricted
/// growth strings, where each vertex takes a color at most one above the
/// largest used so far.
fn for_each_coloring(nv: usize, r: usize, mut visit: impl FnMut(&[usize]) -> Result<bool>) -> Result<bool> {
    if nv == 0 {
        return visit(&[]);
    }
    let mut c = vec![0usize; nv];
    let mut prefix_max = vec![0usize; nv];
    loop {
        if visit(&c)? {
            return Ok(true);
        }
        // next restricted growth string
        let mut i = nv - 1;
        loop {
            if i == 0 {
                return Ok(false);
            }
            let cap = (prefix_max[i - 1] + 1).min(r - 1);
            if c[i] < cap {
                c[i] += 1;
                prefix_max[i] = prefix_max[i - 1].max(c[i]);
                for j in i + 1..nv {
                    c[j] = 0;
                    prefix_max[j] = prefix_max[i];
                }
                break;
            }
            i -= 1;
        }
    }
}

fn check_enumeration_budget(nv: usize, r: usize) -> Result<()> {
    if coloring_classes(nv, r) > ENUMERATION_BUDGET {
        return Err(Error::EnumerationBudget(format!("{nv} vertices with {r} colors")));
    }
    Ok(())
}

/// A distinguishing coloring with at most `r` colors, by exhaustive search.
pub fn find_distinguishing_coloring(g: &Graph, r: usize, config: &SearchConfig) -> Result<Option<Coloring>> {
    let nv = g.n_vertices();
    if r == 0 {
        return Ok(None);
    }
    check_enumeration_budget(nv, r)?;
    let mut found = None;
    for_each_coloring(nv, r, |c| {
        let coloring = Coloring::from_colors(c.to_vec());
        if is_distinguishing_with(g, &coloring, config)? {
            found = Some(coloring);
            return Ok(true);
        }
        Ok(false)
    })?;
    Ok(found)
}

/// Number of colorings with at most `r` colors up to renaming.
pub fn coloring_classes(nv: usize, r: usize) -> u64 {
    // sum of Stirling numbers of the second kind S(nv, j), j <= r
    let mut row = vec![0u64; r + 1];
    row[0] = 1;
    for _ in 0..nv {
        for j in (1..=r).rev() {
            row[j] = row[j].saturating_mul(j as u64).saturating_add(row[j - 1]);
        }
        row[0] = 0;
    }
    row.iter().fold(0u64, |a, &b| a.saturating_add(b))
}

/// The distinguishing number of `g` by exhaustive search over colorings
/// with up to `max_r` colors.
pub fn brute_force_dist(g: &Graph, max_r: usize) -> Result<usize> {
    brute_force_coloring(g, max_r, &SearchConfig::default()).map(|c| c.used_colors())
}

fn brute_force_coloring(g: &Graph, max_r: usize, config: &SearchConfig) -> Result<Coloring> {
    for r in 1..=max_r {
        if let Some(c) = find_distinguishing_coloring(g, r, config)? {
            return Ok(c);
        }
    }
    Err(Error::NoColoringWithin(max_r))
}

/// The distinguishing number of a spec's graph, with a checked certificate.
pub fn distinguishing_number(spec: &MergedJohnsonSpec) -> Result<Certificate> {
    distinguishing_number_with(spec, &DistOptions::default())
}

pub fn distinguishing_number_with(spec: &MergedJohnsonSpec, opts: &DistOptions) -> Result<Certificate> {
    let case = classify_dist(spec);
    let g = Graph::build(spec)?;
    let config = opts.search_config();
    let (coloring, upper) = upper_bound(spec, case, &g, opts)?;
    let dist = coloring.used_colors();
    let lower = lower_bound(case, &g, dist, &config)?;
    let cert = Certificate::new(spec, &g, &coloring, upper, lower)?;
    verify_certificate_with(&cert, &config).map_err(|r| r.into_error())?;
    Ok(cert)
}

fn detset_upper(g: &Graph, set: Vec<usize>, seed: Option<u64>) -> Result<(Coloring, UpperBound)> {
    let coloring = coloring_from_detset(g, &set, &vec![0; set.len()])?;
    let labels = set
        .iter()
        .map(|&v| g.label(v).expect("labelled").elements())
        .collect();
    Ok((
        coloring,
        UpperBound {
            method: UpperMethod::DetsetAsymmetric,
            detset: Some(labels),
            seed,
        },
    ))
}

/// The case's constructed set if it works on this graph, else a seeded
/// random search.
fn detset_for_case(
    spec: &MergedJohnsonSpec,
    family: Option<DetsetFamily>,
    g: &Graph,
    opts: &DistOptions,
) -> Result<(Coloring, UpperBound)> {
    let config = opts.search_config();
    if let Some(family) = family {
        if let Ok(set) = constructed_asymmetric_set(family) {
            if g.n_vertices() == family_vertex_count(family) && is_asymmetric_determining_set(g, &set, &config)? {
                return detset_upper(g, set, None);
            }
        }
    }
    let set = search_asymmetric_detset(g, spec, opts.seed, opts.detset_attempts, &config)?;
    detset_upper(g, set, Some(opts.seed))
}

fn family_vertex_count(family: DetsetFamily) -> usize {
    match family {
        DetsetFamily::TwelveFour => 495,
        DetsetFamily::OddOneM(m) => binom_u64(2 * m + 1, m) as usize,
        DetsetFamily::HalfOne(m) => binom_u64(2 * m, m) as usize,
    }
}

fn upper_bound(
    spec: &MergedJohnsonSpec,
    case: DistCase,
    g: &Graph,
    opts: &DistOptions,
) -> Result<(Coloring, UpperBound)> {
    let (n, k) = (spec.n(), spec.k());
    let plain = |method| UpperBound {
        method,
        detset: None,
        seed: None,
    };
    match case {
        DistCase::Complete => {
            let nv = g.n_vertices();
            Ok((Coloring::new((0..nv).collect(), nv)?, plain(UpperMethod::CompleteGraph)))
        }
        DistCase::Generic | DistCase::OddPlain => detset_for_case(spec, None, g, opts),
        DistCase::TwelveFour => detset_for_case(spec, Some(DetsetFamily::TwelveFour), g, opts),
        DistCase::OddExtended => detset_for_case(spec, Some(DetsetFamily::OddOneM(k)), g, opts),
        DistCase::HalfDirect => detset_for_case(spec, Some(DetsetFamily::HalfOne(k)), g, opts),
        DistCase::Petersen => Ok((
            brute_force_coloring(g, 4, &opts.search_config())?,
            plain(UpperMethod::Exhaustive),
        )),
        DistCase::HalfPairSwap => {
            let (c, _) = random_3_coloring(spec, opts.seed, opts.max_attempts, &opts.search_config())?;
            Ok((
                c,
                UpperBound {
                    method: UpperMethod::Random3,
                    detset: None,
                    seed: Some(opts.seed),
                },
            ))
        }
        DistCase::Matching => {
            let r = case8_value((n / 2) as u64) as usize;
            Ok((matching_coloring(k, r)?, plain(UpperMethod::MatchingFormula)))
        }
    }
}

/// Largest `(r-1)^nv` the exhaustive lower bound will enumerate.
pub const EXHAUSTIVE_LOWER_LIMIT: f64 = 1e6;

fn lower_bound(case: DistCase, g: &Graph, dist: usize, config: &SearchConfig) -> Result<LowerBound> {
    let nv = g.n_vertices();
    let lower = |method, detail: String| Ok(LowerBound { method, detail });
    match case {
        DistCase::Complete => {
            return lower(
                LowerMethod::PigeonholeCount,
                format!("complete graph on {nv} vertices: two vertices of one color can be swapped"),
            )
        }
        DistCase::Matching => {
            let pairs = nv / 2;
            let r = dist - 1;
            return lower(
                LowerMethod::PigeonholeCount,
                format!("C({r},2) = {} < {pairs} complementary pairs", r * (r.saturating_sub(1)) / 2),
            );
        }
        _ => {}
    }
    match dist {
        0 | 1 => lower(LowerMethod::Trivial, "at least one color".into()),
        2 => {
            let witness = find_nontrivial(g, None, &[], config)?;
            match witness {
                Some(_) => lower(LowerMethod::Trivial, "automorphism group is nontrivial".into()),
                None => Err(Error::Internal("asymmetric graph claimed to need 2 colors".into())),
            }
        }
        r if ((r - 1) as f64).powi(nv as i32) <= EXHAUSTIVE_LOWER_LIMIT => lower(
            LowerMethod::ExhaustiveBelow,
            format!(
                "none of the {} colorings with at most {} colors is distinguishing",
                coloring_classes(nv, r - 1),
                r - 1
            ),
        ),
        3 if case == DistCase::HalfPairSwap => lower(
            LowerMethod::PairSwapConstruction,
            "every 2-coloring is kept by a pair swap or a corrected induced transposition".into(),
        ),
        r => Err(Error::Internal(format!("no lower-bound method for r = {r} on {nv} vertices"))),
    }
}
