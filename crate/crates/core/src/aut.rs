//! Automorphism search by individualization and equitable refinement.
//!
//! The search walks a first path of individualizations down to a discrete
//! partition, then climbs back up level by level. At level `i` it computes
//! the orbit of the first path's branching vertex under the pointwise
//! stabilizer of the earlier branching vertices, by looking in each sibling
//! subtree for a leaf equivalent to the first leaf. The group order is the
//! product of those orbit lengths.
//!
//! Colorings restrict the search to color-preserving automorphisms, and
//! fixed vertices become singleton cells of the starting partition.

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default node budget: number of refinements per search.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// A vertex coloring with colors `0..num_colors`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, num_colors: usize) -> Result<Self> {
        if let Some(&bad) = colors.iter().find(|&&c| c >= num_colors) {
            return Err(Error::InvalidSpec(format!(
                "color {bad} out of range for {num_colors} colors"
            )));
        }
        Ok(Coloring { colors, num_colors })
    }

    /// Number of colors is one more than the largest entry.
    pub fn from_colors(colors: Vec<usize>) -> Self {
        let num_colors = colors.iter().max().map_or(1, |m| m + 1);
        Coloring { colors, num_colors }
    }

    pub fn uniform(n_vertices: usize) -> Self {
        Coloring {
            colors: vec![0; n_vertices],
            num_colors: 1,
        }
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of colors that actually occur.
    pub fn used_colors(&self) -> usize {
        let mut seen = vec![false; self.num_colors];
        self.colors.iter().for_each(|&c| seen[c] = true);
        seen.iter().filter(|&&s| s).count()
    }

    pub fn preserved_by(&self, p: &VertexPermutation) -> bool {
        p.len() == self.len() && (0..self.len()).all(|v| self.colors[p.apply(v)] == self.colors[v])
    }
}

/// A permutation of vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexPermutation {
    images: Vec<usize>,
}

impl VertexPermutation {
    pub fn identity(n: usize) -> Self {
        VertexPermutation {
            images: (0..n).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(Error::NotAPermutation(format!("vertex map {images:?}")));
            }
            seen[x] = true;
        }
        Ok(VertexPermutation { images })
    }

    /// Exchange `a` and `b`, fixing everything else.
    pub fn swap(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a, b);
        p
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &VertexPermutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(VertexPermutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        VertexPermutation { images: inv }
    }

    pub fn moved_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().enumerate().filter(|(i, x)| i != *x).map(|(i, _)| i)
    }
}

/// Whether `p` maps edges to edges (and so non-edges to non-edges).
pub fn is_automorphism(g: &Graph, p: &VertexPermutation) -> Result<bool> {
    if p.len() != g.n_vertices() {
        return Err(Error::SizeMismatch {
            expected: g.n_vertices(),
            found: p.len(),
        });
    }
    Ok(preserves_edges(g, p.images()))
}

fn preserves_edges(g: &Graph, images: &[usize]) -> bool {
    // a bijection sending edges into edges is onto the edge set
    (0..g.n_vertices()).all(|u| {
        let gu = images[u];
        g.degree(u) == g.degree(gu) && g.neighbors(u).all(|v| g.adjacent(gu, images[v]))
    })
}

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub leaves: u64,
    pub max_depth: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub generators: Vec<VertexPermutation>,
    pub group_order: BigUint,
    pub stats: SearchStats,
}

/// Automorphisms of `g` preserving `coloring` (if any) and fixing every
/// vertex of `fixed`.
pub fn search(g: &Graph, coloring: Option<&Coloring>, fixed: &[usize]) -> Result<SearchResult> {
    search_with(g, coloring, fixed, &SearchConfig::default())
}

pub fn search_with(
    g: &Graph,
    coloring: Option<&Coloring>,
    fixed: &[usize],
    config: &SearchConfig,
) -> Result<SearchResult> {
    let mut s = Searcher::new(g, coloring, fixed, config, false)?;
    s.run()?;
    Ok(s.finish())
}

/// Some non-identity automorphism under the same constraints as
/// [`search`], or `None` when the constrained group is trivial.
pub fn find_nontrivial(
    g: &Graph,
    coloring: Option<&Coloring>,
    fixed: &[usize],
    config: &SearchConfig,
) -> Result<Option<VertexPermutation>> {
    let mut s = Searcher::new(g, coloring, fixed, config, true)?;
    s.run()?;
    Ok(s.generators.into_iter().next())
}

pub fn is_asymmetric(g: &Graph) -> Result<bool> {
    Ok(find_nontrivial(g, None, &[], &SearchConfig::default())?.is_none())
}

pub fn is_determining_set(g: &Graph, set: &[usize]) -> Result<bool> {
    is_determining_set_with(g, set, &SearchConfig::default())
}

pub fn is_determining_set_with(g: &Graph, set: &[usize], config: &SearchConfig) -> Result<bool> {
    Ok(find_nontrivial(g, None, set, config)?.is_none())
}

pub fn is_distinguishing(g: &Graph, c: &Coloring) -> Result<bool> {
    is_distinguishing_with(g, c, &SearchConfig::default())
}

pub fn is_distinguishing_with(g: &Graph, c: &Coloring, config: &SearchConfig) -> Result<bool> {
    Ok(find_nontrivial(g, Some(c), &[], config)?.is_none())
}

/// Whether every automorphism that stabilizes `set` and preserves the
/// colors `set_colors` on it (aligned with `set`) fixes `set` pointwise.
pub fn is_set_distinguishing(g: &Graph, set: &[usize], set_colors: &[usize]) -> Result<bool> {
    if set.len() != set_colors.len() {
        return Err(Error::SizeMismatch {
            expected: set.len(),
            found: set_colors.len(),
        });
    }
    let outside = set_colors.iter().max().map_or(0, |m| m + 1);
    let mut colors = vec![outside; g.n_vertices()];
    for (&v, &c) in set.iter().zip(set_colors) {
        if v >= g.n_vertices() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                count: g.n_vertices(),
            });
        }
        if colors[v] != outside {
            return Err(Error::DuplicateVertex(v));
        }
        colors[v] = c;
    }
    let coloring = Coloring::new(colors, outside + 1)?;
    let result = search(g, Some(&coloring), &[])?;
    Ok(result
        .generators
        .iter()
        .all(|p| set.iter().all(|&v| p.apply(v) == v)))
}

/// Ordered partition of the vertex set into cells.
#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    pos: Vec<usize>,
    /// position -> start of its cell
    cell_of: Vec<usize>,
    /// indexed by cell start
    cell_len: Vec<usize>,
    ncells: usize,
}

impl Partition {
    fn from_cells(n: usize, cells: &[Vec<usize>]) -> Self {
        let mut p = Partition {
            lab: Vec::with_capacity(n),
            pos: vec![0; n],
            cell_of: vec![0; n],
            cell_len: vec![0; n],
            ncells: 0,
        };
        for cell in cells.iter().filter(|c| !c.is_empty()) {
            let start = p.lab.len();
            for &v in cell {
                p.pos[v] = p.lab.len();
                p.cell_of[p.lab.len()] = start;
                p.lab.push(v);
            }
            p.cell_len[start] = cell.len();
            p.ncells += 1;
        }
        p
    }

    fn is_discrete(&self) -> bool {
        self.ncells == self.lab.len()
    }

    fn cell_starts(&self) -> impl Iterator<Item = usize> + '_ {
        let n = self.lab.len();
        let mut s = 0;
        std::iter::from_fn(move || {
            if s >= n {
                return None;
            }
            let cur = s;
            s += self.cell_len[cur];
            Some(cur)
        })
    }

    /// First smallest non-singleton cell.
    fn target_cell(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in self.cell_starts() {
            let len = self.cell_len[s];
            if len > 1 && best.is_none_or(|b| len < self.cell_len[b]) {
                best = Some(s);
                if len == 2 {
                    break;
                }
            }
        }
        best
    }

    fn cell(&self, start: usize) -> &[usize] {
        &self.lab[start..start + self.cell_len[start]]
    }

    /// Split `v` off the front of its cell; returns the singleton's start.
    fn individualize(&mut self, v: usize) -> usize {
        let p = self.pos[v];
        let s = self.cell_of[p];
        let len = self.cell_len[s];
        let other = self.lab[s];
        self.lab.swap(s, p);
        self.pos[other] = p;
        self.pos[v] = s;
        self.cell_len[s] = 1;
        if len > 1 {
            self.cell_len[s + 1] = len - 1;
            for q in s + 1..s + len {
                self.cell_of[q] = s + 1;
            }
            self.ncells += 1;
        }
        s
    }
}

fn mix(h: u64, x: u64) -> u64 {
    (h ^ x.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_add(h << 6).wrapping_add(h >> 2))
        .wrapping_mul(0x0100_0000_01b3)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so representatives are orbit minima
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    fn absorb(&mut self, p: &VertexPermutation) {
        for (i, &x) in p.images().iter().enumerate() {
            self.union(i, x);
        }
    }
}

struct FirstLevel {
    node: Partition,
    target: usize,
    vertex: usize,
}

struct Searcher<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    fixed: Vec<usize>,
    budget: u64,
    stop_at_first: bool,
    generators: Vec<VertexPermutation>,
    order: BigUint,
    stats: SearchStats,
    started: Instant,
    /// refinement trace hash at each depth of the first path
    traces: Vec<u64>,
    levels: Vec<FirstLevel>,
    first_leaf: Vec<usize>,
    root: Option<Partition>,
    // scratch
    mask: Vec<u64>,
    counts: Vec<usize>,
}

impl<'a> Searcher<'a> {
    fn new(
        g: &'a Graph,
        coloring: Option<&Coloring>,
        fixed: &[usize],
        config: &SearchConfig,
        stop_at_first: bool,
    ) -> Result<Self> {
        let n = g.n_vertices();
        let colors = match coloring {
            Some(c) if c.len() != n => {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: c.len(),
                })
            }
            Some(c) => c.colors().to_vec(),
            None => vec![0; n],
        };
        let mut seen = vec![false; n];
        for &v in fixed {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, count: n });
            }
            if seen[v] {
                return Err(Error::DuplicateVertex(v));
            }
            seen[v] = true;
        }
        Ok(Searcher {
            g,
            colors,
            fixed: fixed.to_vec(),
            budget: config.node_budget,
            stop_at_first,
            generators: Vec::new(),
            order: BigUint::one(),
            stats: SearchStats::default(),
            started: Instant::now(),
            traces: Vec::new(),
            levels: Vec::new(),
            first_leaf: Vec::new(),
            root: None,
            mask: vec![0; g.words()],
            counts: vec![0; n],
        })
    }

    fn initial_partition(&self) -> Partition {
        let n = self.g.n_vertices();
        let mut is_fixed = vec![false; n];
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for &v in &self.fixed {
            is_fixed[v] = true;
            cells.push(vec![v]);
        }
        let ncolors = self.colors.iter().max().map_or(0, |m| m + 1);
        let mut by_color = vec![Vec::new(); ncolors];
        for v in 0..n {
            if !is_fixed[v] {
                by_color[self.colors[v]].push(v);
            }
        }
        cells.extend(by_color);
        Partition::from_cells(n, &cells)
    }

    fn tick(&mut self) -> Result<()> {
        self.stats.nodes += 1;
        if self.stats.nodes > self.budget {
            return Err(Error::NodeBudget(self.budget));
        }
        Ok(())
    }

    /// Equitable refinement starting from the splitter cells in `queue`.
    /// Returns a hash of the splitting history, which is invariant under
    /// automorphisms and so must agree between equivalent nodes.
    fn refine(&mut self, p: &mut Partition, queue: Vec<usize>) -> Result<u64> {
        self.tick()?;
        let n = p.lab.len();
        let mut active = vec![false; n];
        let mut queue: VecDeque<usize> = queue.into();
        for &s in &queue {
            active[s] = true;
        }
        let mut trace: u64 = 0xcbf2_9ce4_8422_2325;
        let mut pieces: Vec<(usize, usize)> = Vec::new();
        while let Some(w) = queue.pop_front() {
            active[w] = false;
            if p.is_discrete() {
                break;
            }
            self.mask.iter_mut().for_each(|m| *m = 0);
            for &v in p.cell(w) {
                self.mask[v / 64] |= 1 << (v % 64);
            }
            trace = mix(trace, w as u64);
            let mut s = 0;
            while s < n {
                let len = p.cell_len[s];
                if len == 1 {
                    s += 1;
                    continue;
                }
                let mut lo = usize::MAX;
                let mut hi = 0;
                for &v in &p.lab[s..s + len] {
                    let c: usize = self
                        .g
                        .row(v)
                        .iter()
                        .zip(&self.mask)
                        .map(|(a, b)| (a & b).count_ones() as usize)
                        .sum();
                    self.counts[v] = c;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    s += len;
                    continue;
                }
                let counts = &self.counts;
                p.lab[s..s + len].sort_unstable_by_key(|&v| (counts[v], v));
                pieces.clear();
                let mut piece_start = s;
                for q in s..s + len {
                    let v = p.lab[q];
                    p.pos[v] = q;
                    if q > s && counts[v] != counts[p.lab[q - 1]] {
                        pieces.push((piece_start, q - piece_start));
                        piece_start = q;
                    }
                }
                pieces.push((piece_start, s + len - piece_start));
                trace = mix(trace, s as u64);
                for &(ps, pl) in &pieces {
                    p.cell_len[ps] = pl;
                    for q in ps..ps + pl {
                        p.cell_of[q] = ps;
                    }
                    trace = mix(trace, (counts[p.lab[ps]] as u64) << 32 | pl as u64);
                }
                p.ncells += pieces.len() - 1;
                if active[s] {
                    for &(ps, _) in &pieces[1..] {
                        active[ps] = true;
                        queue.push_back(ps);
                    }
                } else {
                    let largest = pieces
                        .iter()
                        .enumerate()
                        .max_by_key(|(i, (_, l))| (*l, std::cmp::Reverse(*i)))
                        .map(|(i, _)| i)
                        .unwrap_or(0);
                    for (i, &(ps, _)) in pieces.iter().enumerate() {
                        if i != largest {
                            active[ps] = true;
                            queue.push_back(ps);
                        }
                    }
                }
                s += len;
            }
        }
        Ok(mix(trace, p.ncells as u64))
    }

    fn run(&mut self) -> Result<()> {
        let mut root = self.initial_partition();
        let all: Vec<usize> = root.cell_starts().collect();
        let t = self.refine(&mut root, all)?;
        self.traces.push(t);
        self.root = Some(root.clone());

        let mut node = root;
        while let Some(target) = node.target_cell() {
            let vertex = *node.cell(target).iter().min().expect("non-empty cell");
            let mut child = node.clone();
            let s = child.individualize(vertex);
            let t = self.refine(&mut child, vec![s])?;
            self.traces.push(t);
            self.levels.push(FirstLevel {
                node,
                target,
                vertex,
            });
            node = child;
        }
        self.first_leaf = node.lab;
        self.stats.leaves = 1;
        self.stats.max_depth = self.levels.len();

        for i in (0..self.levels.len()).rev() {
            let mut uf = UnionFind::new(self.g.n_vertices());
            for gen in &self.generators {
                uf.absorb(gen);
            }
            let level = &self.levels[i];
            let v = level.vertex;
            let mut cell = level.node.cell(level.target).to_vec();
            cell.sort_unstable();
            let mut failed: Vec<usize> = Vec::new();
            for &w in &cell {
                if w == v || uf.find(w) == uf.find(v) {
                    continue;
                }
                let rw = uf.find(w);
                if failed.iter().any(|&f| uf.find(f) == rw) {
                    continue;
                }
                let parent = self.levels[i].node.clone();
                let mut path: Vec<usize> = self.levels[..i].iter().map(|l| l.vertex).collect();
                path.extend_from_slice(&self.fixed);
                match self.explore(&parent, w, i + 1, &mut path)? {
                    Some(gamma) => {
                        uf.absorb(&gamma);
                        self.generators.push(gamma);
                        if self.stop_at_first {
                            return Ok(());
                        }
                    }
                    None => failed.push(w),
                }
            }
            let rv = uf.find(v);
            let orbit = cell.iter().filter(|&&w| uf.find(w) == rv).count();
            self.order *= orbit as u64;
        }
        Ok(())
    }

    /// Look for a leaf equivalent to the first leaf below the child of
    /// `parent` that individualizes `w` at `depth`.
    fn explore(
        &mut self,
        parent: &Partition,
        w: usize,
        depth: usize,
        path: &mut Vec<usize>,
    ) -> Result<Option<VertexPermutation>> {
        let mut node = parent.clone();
        let s = node.individualize(w);
        let t = self.refine(&mut node, vec![s])?;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        if self.traces.get(depth) != Some(&t) {
            return Ok(None);
        }
        if node.is_discrete() {
            self.stats.leaves += 1;
            return Ok(self.leaf_automorphism(&node.lab));
        }
        let Some(target) = node.target_cell() else {
            return Ok(None);
        };
        match self.levels.get(depth) {
            Some(l) if l.target == target && l.node.cell_len[l.target] == node.cell_len[target] => {}
            _ => return Ok(None),
        }
        path.push(w);
        let mut cell = node.cell(target).to_vec();
        cell.sort_unstable();
        // children in one orbit of the path stabilizer lead to equivalent subtrees
        let mut uf = UnionFind::new(self.g.n_vertices());
        for gen in &self.generators {
            if path.iter().all(|&x| gen.apply(x) == x) {
                uf.absorb(gen);
            }
        }
        let mut tried: Vec<usize> = Vec::new();
        let mut found = None;
        for &u in &cell {
            let ru = uf.find(u);
            if tried.contains(&ru) {
                continue;
            }
            tried.push(ru);
            if let Some(gamma) = self.explore(&node, u, depth + 1, path)? {
                found = Some(gamma);
                break;
            }
        }
        path.pop();
        Ok(found)
    }

    fn leaf_automorphism(&self, lab: &[usize]) -> Option<VertexPermutation> {
        let mut images = vec![0; lab.len()];
        for (a, &b) in self.first_leaf.iter().zip(lab) {
            images[*a] = b;
        }
        let colors_ok = (0..images.len()).all(|v| self.colors[images[v]] == self.colors[v]);
        let fixed_ok = self.fixed.iter().all(|&v| images[v] == v);
        (colors_ok && fixed_ok && preserves_edges(self.g, &images))
            .then_some(VertexPermutation { images })
    }

    fn finish(mut self) -> SearchResult {
        self.stats.elapsed = self.started.elapsed();
        SearchResult {
            generators: self.generators,
            group_order: self.order,
            stats: self.stats,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Permutation;
    use crate::graph::MergedJohnsonSpec;

    fn johnson(n: usize, k: usize, i: &[usize]) -> Graph {
        Graph::build(&MergedJohnsonSpec::canonicalize(n, k, i).unwrap()).unwrap()
    }

    fn order(g: &Graph) -> u64 {
        let r = search(g, None, &[]).unwrap();
        for p in &r.generators {
            assert!(is_automorphism(g, p).unwrap());
        }
        r.group_order.try_into().unwrap()
    }

    #[test]
    fn small_group_orders() {
        assert_eq!(order(&Graph::complete(4)), 24);
        assert_eq!(order(&Graph::empty(5)), 120);
        assert_eq!(order(&Graph::cycle(5)), 10);
        assert_eq!(order(&Graph::cycle(6)), 12);
        assert_eq!(order(&Graph::path(3)), 2);
        assert_eq!(order(&Graph::path(1)), 1);
        assert_eq!(order(&Graph::empty(0)), 1);
        assert_eq!(order(&johnson(5, 2, &[2])), 120);
        // S_2 wr S_3
        assert_eq!(order(&johnson(4, 2, &[2])), 48);
        // J(6,2) is the triangular graph T(6): S_6
        assert_eq!(order(&johnson(6, 2, &[1])), 720);
    }

    #[test]
    fn asymmetric_graph() {
        // smallest asymmetric graphs have six vertices
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 4), (3, 5)]).unwrap();
        assert_eq!(order(&g), 1);
        assert!(is_asymmetric(&g).unwrap());
        assert!(!is_asymmetric(&Graph::complete(2)).unwrap());
    }

    #[test]
    fn automorphism_predicate() {
        let g = johnson(5, 2, &[2]);
        assert!(is_automorphism(&g, &VertexPermutation::identity(10)).unwrap());
        // the 5-cycle (1 2 3 4 5) acting on 2-subsets
        let sigma = Permutation::long_cycle(5);
        let labels = g.labels().unwrap();
        let images: Vec<usize> = labels
            .iter()
            .map(|m| g.vertex_of(&m.image(&sigma).unwrap()).unwrap())
            .collect();
        assert!(is_automorphism(&g, &VertexPermutation::new(images).unwrap()).unwrap());

        let p3 = Graph::path(3);
        assert!(!is_automorphism(&p3, &VertexPermutation::swap(3, 0, 1)).unwrap());
        assert!(is_automorphism(&p3, &VertexPermutation::swap(3, 0, 2)).unwrap());
        assert!(is_automorphism(&p3, &VertexPermutation::identity(4)).is_err());
    }

    #[test]
    fn determining_sets() {
        let c5 = Graph::cycle(5);
        assert!(is_determining_set(&c5, &[0, 1]).unwrap());
        assert!(!is_determining_set(&c5, &[0]).unwrap());
        let all: Vec<usize> = (0..5).collect();
        assert!(is_determining_set(&c5, &all).unwrap());
        assert_eq!(
            is_determining_set(&c5, &[]).unwrap(),
            is_asymmetric(&c5).unwrap()
        );
        assert!(is_determining_set(&c5, &[0, 0]).is_err());
    }

    #[test]
    fn distinguishing_colorings() {
        let k3 = Graph::complete(3);
        assert!(is_distinguishing(&k3, &Coloring::from_colors(vec![0, 1, 2])).unwrap());
        assert!(!is_distinguishing(&k3, &Coloring::from_colors(vec![0, 1, 1])).unwrap());
        assert!(!is_distinguishing(&k3, &Coloring::from_colors(vec![2, 2, 2])).unwrap());
    }

    #[test]
    fn petersen_has_no_distinguishing_2_coloring() {
        let g = johnson(5, 2, &[2]);
        for mask in 0u32..1 << 10 {
            let c = Coloring::from_colors((0..10).map(|v| (mask >> v & 1) as usize).collect());
            assert!(!is_distinguishing(&g, &c).unwrap(), "mask {mask:b}");
        }
    }

    #[test]
    fn set_distinguishing() {
        let c5 = Graph::cycle(5);
        assert!(is_set_distinguishing(&c5, &[2], &[0]).unwrap());
        let c4 = Graph::cycle(4);
        assert!(!is_set_distinguishing(&c4, &[0, 2], &[0, 0]).unwrap());
        assert!(is_set_distinguishing(&c4, &[0, 2], &[0, 1]).unwrap());
        assert!(is_set_distinguishing(&c4, &[0, 2], &[0]).is_err());
    }

    #[test]
    fn colored_and_fixed_orders() {
        let g = johnson(5, 2, &[2]);
        // stabilizer of a vertex of the Petersen graph has order 12
        let r = search(&g, None, &[0]).unwrap();
        assert_eq!(r.group_order, BigUint::from(12u32));
        for p in &r.generators {
            assert_eq!(p.apply(0), 0);
        }
        let mut colors = vec![0; 10];
        colors[0] = 1;
        let r = search(&g, Some(&Coloring::from_colors(colors.clone())), &[]).unwrap();
        assert_eq!(r.group_order, BigUint::from(12u32));
        let c = Coloring::from_colors(colors);
        for p in &r.generators {
            assert!(c.preserved_by(p));
        }
    }

    #[test]
    fn node_budget_is_a_hard_error() {
        let g = johnson(6, 3, &[1]);
        let cfg = SearchConfig { node_budget: 3 };
        assert!(matches!(search_with(&g, None, &[], &cfg), Err(Error::NodeBudget(3))));
    }

    #[test]
    fn vertex_transitive_orders_divisible_by_vertex_count() {
        for (n, k, i) in [(6, 2, vec![2]), (7, 3, vec![1]), (8, 4, vec![1, 3]), (6, 3, vec![2])] {
            let g = johnson(n, k, &i);
            let r = search(&g, None, &[]).unwrap();
            assert_eq!(&r.group_order % g.n_vertices(), BigUint::default());
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn graph_strategy() -> impl Strategy<Value = Graph> {
            (2usize..=9).prop_flat_map(|n| {
                let pairs: Vec<(usize, usize)> =
                    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                let m = pairs.len();
                proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
                    let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(e, _)| *e).collect();
                    Graph::from_edges(n, &edges).unwrap()
                })
            })
        }

        /// Brute-force group order over all n! permutations.
        fn brute_order(g: &Graph, colors: &[usize], fixed: &[usize]) -> u64 {
            fn rec(g: &Graph, colors: &[usize], fixed: &[usize], cur: &mut Vec<usize>, used: &mut Vec<bool>) -> u64 {
                let n = g.n_vertices();
                let u = cur.len();
                if u == n {
                    return 1;
                }
                let mut total = 0;
                for x in 0..n {
                    if used[x] || colors[x] != colors[u] || (fixed.contains(&u) && x != u) {
                        continue;
                    }
                    if (0..u).any(|w| g.adjacent(u, w) != g.adjacent(x, cur[w])) {
                        continue;
                    }
                    used[x] = true;
                    cur.push(x);
                    total += rec(g, colors, fixed, cur, used);
                    cur.pop();
                    used[x] = false;
                }
                total
            }
            rec(g, colors, fixed, &mut Vec::new(), &mut vec![false; g.n_vertices()])
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]

            #[test]
            fn order_matches_brute_force(g in graph_strategy(), seed in any::<u64>()) {
                let n = g.n_vertices();
                let colors: Vec<usize> = (0..n).map(|v| ((seed >> (v % 64)) & 1) as usize).collect();
                let fixed: Vec<usize> = if seed % 3 == 0 { vec![(seed as usize) % n] } else { vec![] };
                let c = Coloring::from_colors(colors.clone());
                let r = search(&g, Some(&c), &fixed).unwrap();
                prop_assert_eq!(r.group_order, BigUint::from(brute_order(&g, &colors, &fixed)));
                for p in &r.generators {
                    prop_assert!(is_automorphism(&g, p).unwrap());
                    prop_assert!(c.preserved_by(p));
                    prop_assert!(fixed.iter().all(|&v| p.apply(v) == v));
                }
            }

            #[test]
            fn order_invariant_under_relabeling(
                g in graph_strategy(),
                shuffle in Just((0..9).collect::<Vec<usize>>()).prop_shuffle(),
            ) {
                let n = g.n_vertices();
                let perm: Vec<usize> = {
                    let mut p: Vec<usize> = shuffle.into_iter().filter(|&x| x < n).collect();
                    p.truncate(n);
                    p
                };
                let h = g.relabel(&perm).unwrap();
                prop_assert_eq!(search(&g, None, &[]).unwrap().group_order, search(&h, None, &[]).unwrap().group_order);
            }

            #[test]
            fn determining_sets_are_monotone(g in graph_strategy(), a in any::<u16>(), b in any::<u16>()) {
                let n = g.n_vertices();
                let small: Vec<usize> = (0..n).filter(|v| a >> v & 1 == 1).collect();
                let large: Vec<usize> = (0..n).filter(|v| (a | b) >> v & 1 == 1).collect();
                if is_determining_set(&g, &small).unwrap() {
                    prop_assert!(is_determining_set(&g, &large).unwrap());
                }
                let all: Vec<usize> = (0..n).collect();
                prop_assert!(is_determining_set(&g, &all).unwrap());
            }
        }
    }
}
