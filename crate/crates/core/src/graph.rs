//! Merged Johnson graphs and the few derived graphs the engine needs.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::combinatorics::{all_subsets, binom, binom_u64, KSubset, MAX_GROUND};
use crate::error::{Error, Result};

/// Default cap on `C(n, k)` for [`Graph::build`].
pub const DEFAULT_VERTEX_BUDGET: u64 = 1_000_000;

/// The parameters `(n, k, I)` of `J(n,k)_I`, with `k <= n/2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MergedJohnsonSpec {
    n: usize,
    k: usize,
    index_set: Vec<usize>,
}

impl MergedJohnsonSpec {
    /// Validate `(n, k, I)` and replace `k` by `n - k` when `k > n/2`.
    /// Two `k`-subsets are adjacent when they meet in `k - i` elements for
    /// some `i` in `I`; complementing every subset carries `J(n,k)_I` onto
    /// `J(n,n-k)_I`, so the swap does not change the graph.
    pub fn canonicalize(n: usize, k: usize, index_set: &[usize]) -> Result<Self> {
        if !(2..=MAX_GROUND).contains(&n) {
            return Err(Error::InvalidSpec(format!("n = {n} must lie in 2..={MAX_GROUND}")));
        }
        if k == 0 || k >= n {
            return Err(Error::InvalidSpec(format!("k = {k} must lie in 1..={}", n - 1)));
        }
        if index_set.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        let k = k.min(n - k);
        let mut set: Vec<usize> = index_set.to_vec();
        set.sort_unstable();
        set.dedup();
        for &i in &set {
            if i == 0 || i > k {
                return Err(Error::IndexOutOfRange { index: i, max: k });
            }
        }
        Ok(MergedJohnsonSpec {
            n,
            k,
            index_set: set,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The index set `I`, sorted.
    pub fn index_set(&self) -> &[usize] {
        &self.index_set
    }

    /// `I` without `k`.
    pub fn i_prime(&self) -> Vec<usize> {
        self.index_set.iter().copied().filter(|&i| i != self.k).collect()
    }

    /// `{ k - i : i in I' }`, sorted.
    pub fn i_double_prime(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.i_prime().iter().map(|&i| self.k - i).collect();
        v.sort_unstable();
        v
    }

    /// `{ t - i : i in I }`, sorted; `None` if some value would be negative.
    pub fn shifted(&self, t: usize) -> Option<Vec<usize>> {
        let mut v = Vec::with_capacity(self.index_set.len());
        for &i in &self.index_set {
            v.push(t.checked_sub(i)?);
        }
        v.sort_unstable();
        Some(v)
    }

    /// Half the central binomial coefficient when `n` is even.
    pub fn e(&self) -> Option<BigUint> {
        self.n.is_multiple_of(2).then(|| binom(self.n as u64, self.n as u64 / 2) / 2u32)
    }

    /// `I = {1, ..., k}`: the graph is complete.
    pub fn is_full(&self) -> bool {
        self.index_set.len() == self.k
    }

    pub fn vertex_count(&self) -> u64 {
        binom_u64(self.n, self.k)
    }

    /// The spec with index set `{1..k} \ I`, whose graph is the complement.
    /// `None` when that set is empty.
    pub fn complement_spec(&self) -> Option<MergedJohnsonSpec> {
        let rest: Vec<usize> = (1..=self.k).filter(|i| !self.index_set.contains(i)).collect();
        (!rest.is_empty()).then_some(MergedJohnsonSpec {
            n: self.n,
            k: self.k,
            index_set: rest,
        })
    }

    /// Bit `s` set when intersection size `s` means adjacency.
    fn adjacent_sizes(&self) -> u64 {
        self.index_set.iter().fold(0, |acc, &i| acc | 1 << (self.k - i))
    }
}

impl fmt::Display for MergedJohnsonSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.index_set.iter().map(|i| i.to_string()).collect();
        write!(f, "J({},{})_{{{}}}", self.n, self.k, parts.join(","))
    }
}

/// A simple graph on vertices `0..n_vertices` with one packed bit row per
/// vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n_vertices: usize,
    words: usize,
    rows: Vec<u64>,
    labels: Option<Vec<KSubset>>,
    origin: Option<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} vertices, {} edges)", self.n_vertices, self.edge_count())
    }
}

impl Graph {
    pub fn empty(n_vertices: usize) -> Self {
        let words = n_vertices.div_ceil(64).max(1);
        Graph {
            n_vertices,
            words,
            rows: vec![0; words * n_vertices],
            labels: None,
            origin: None,
        }
    }

    pub fn complete(n_vertices: usize) -> Self {
        Self::empty(n_vertices).complement()
    }

    pub fn cycle(n_vertices: usize) -> Self {
        let edges: Vec<_> = (0..n_vertices).map(|i| (i, (i + 1) % n_vertices)).collect();
        Self::from_edges(n_vertices, &edges).expect("cycle edges are in range")
    }

    pub fn path(n_vertices: usize) -> Self {
        let edges: Vec<_> = (1..n_vertices).map(|i| (i - 1, i)).collect();
        Self::from_edges(n_vertices, &edges).expect("path edges are in range")
    }

    /// Loops are rejected; repeated edges are merged.
    pub fn from_edges(n_vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n_vertices);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n_vertices {
                    return Err(Error::VertexOutOfRange {
                        vertex: x,
                        count: n_vertices,
                    });
                }
            }
            if u == v {
                return Err(Error::InvalidSpec(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub fn build(spec: &MergedJohnsonSpec) -> Result<Self> {
        Self::build_with_budget(spec, DEFAULT_VERTEX_BUDGET)
    }

    /// Vertices are the `k`-subsets in colex order.
    pub fn build_with_budget(spec: &MergedJohnsonSpec, budget: u64) -> Result<Self> {
        let count = spec.vertex_count();
        if count > budget {
            return Err(Error::VertexBudget {
                vertices: count,
                budget,
            });
        }
        let labels: Vec<KSubset> = all_subsets(spec.n, spec.k).collect();
        let sizes = spec.adjacent_sizes();
        let mut g = Self::empty(labels.len());
        for (u, a) in labels.iter().enumerate() {
            for (v, b) in labels.iter().enumerate().skip(u + 1) {
                let s = (a.bits() & b.bits()).count_ones();
                if sizes >> s & 1 == 1 {
                    g.set_edge(u, v);
                }
            }
        }
        g.labels = Some(labels);
        Ok(g)
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Words per adjacency row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bit_iter(self.row(u))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n_vertices).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n_vertices).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn label(&self, u: usize) -> Option<KSubset> {
        self.labels.as_ref().map(|l| l[u])
    }

    pub fn labels(&self) -> Option<&[KSubset]> {
        self.labels.as_deref()
    }

    /// Index of the vertex labelled `s`.
    pub fn vertex_of(&self, s: &KSubset) -> Option<usize> {
        let labels = self.labels.as_ref()?;
        if self.origin.is_none() {
            let r = s.rank() as usize;
            return (r < labels.len() && labels[r] == *s).then_some(r);
        }
        labels.iter().position(|l| l == s)
    }

    /// For induced subgraphs, the vertex index each vertex had in the
    /// graph it was cut from.
    pub fn origin(&self) -> Option<&[usize]> {
        self.origin.as_deref()
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        let tail = self.n_vertices % 64;
        for u in 0..self.n_vertices {
            let row = &mut g.rows[u * self.words..(u + 1) * self.words];
            for w in row.iter_mut() {
                *w = !*w;
            }
            if tail != 0 {
                row[self.words - 1] &= (1u64 << tail) - 1;
            }
            if self.n_vertices == 0 {
                continue;
            }
            row[u / 64] &= !(1 << (u % 64));
        }
        g
    }

    /// The subgraph induced on `subset`, in the given order.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n_vertices];
        for &v in subset {
            if v >= self.n_vertices {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: self.n_vertices,
                });
            }
            if seen[v] {
                return Err(Error::DuplicateVertex(v));
            }
            seen[v] = true;
        }
        let mut g = Graph::empty(subset.len());
        for (a, &u) in subset.iter().enumerate() {
            for (b, &v) in subset.iter().enumerate().skip(a + 1) {
                if self.adjacent(u, v) {
                    g.set_edge(a, b);
                }
            }
        }
        g.labels = self.labels.as_ref().map(|l| subset.iter().map(|&v| l[v]).collect());
        g.origin = Some(match &self.origin {
            Some(o) => subset.iter().map(|&v| o[v]).collect(),
            None => subset.to_vec(),
        });
        Ok(g)
    }

    /// Vertices grouped by degree.
    pub fn degree_partition(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for u in 0..self.n_vertices {
            out.entry(self.degree(u)).or_default().push(u);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n_vertices];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n_vertices {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n_vertices).all(|u| self.degree(u) + 1 == self.n_vertices)
    }

    pub fn is_edgeless(&self) -> bool {
        self.rows.iter().all(|&w| w == 0)
    }

    /// The isomorphic graph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n_vertices {
            return Err(Error::SizeMismatch {
                expected: self.n_vertices,
                found: perm.len(),
            });
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.n_vertices, &edges)
    }
}

/// Indices of set bits across a slice of words.
pub(crate) fn bit_iter(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + b)
        })
    })
}
