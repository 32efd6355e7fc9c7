//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bit row per vertex, so vertex sets are
//! plain bitmasks ([`VertexSet`]) and component scans are word operations.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order a [`Graph`] can hold.
pub const MAX_ORDER: usize = 64;

/// A set of vertices as a bitmask; vertex `v` is bit `v`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn range(start: usize, end: usize) -> Self {
        VertexSet(Self::full(end).0 & !Self::full(start).0)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Total order used for reporting: by size, then lexicographically on
    /// the ascending vertex lists.
    pub fn report_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Simple undirected loop-free graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Component structure of a graph: `o = i + odd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentStats {
    pub components: Vec<VertexSet>,
    /// Isolated vertices.
    pub isolated: usize,
    /// Nontrivial odd components.
    pub odd: usize,
}

impl ComponentStats {
    /// All odd components, trivial ones included.
    pub fn odd_total(&self) -> usize {
        self.isolated + self.odd
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasicKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Empty,
}

impl Graph {
    /// Edgeless graph `nK1`.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::OutOfRange {
                    what: "edge",
                    detail: format!("loop at vertex {u}"),
                });
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from bit rows; rows must already be symmetric and loop-free.
    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        debug_assert!((0..n).all(|v| adj[v] >> v & 1 == 0));
        debug_assert!((0..n).all(|u| (0..n).all(|v| (adj[u] >> v & 1) == (adj[v] >> u & 1))));
        Graph { n, adj }
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn build_basic(kind: BasicKind, sizes: &[usize]) -> Result<Self> {
        let arity = if kind == BasicKind::CompleteBipartite {
            2
        } else {
            1
        };
        if sizes.len() != arity {
            return Err(Error::OutOfRange {
                what: "size list",
                detail: format!("{kind:?} takes {arity} size(s), got {}", sizes.len()),
            });
        }
        let min = if kind == BasicKind::Cycle { 3 } else { 1 };
        if let Some(&bad) = sizes.iter().find(|&&s| s < min) {
            return Err(Error::OutOfRange {
                what: "size",
                detail: format!("{kind:?} needs sizes >= {min}, got {bad}"),
            });
        }
        match kind {
            BasicKind::Path => Self::path(sizes[0]),
            BasicKind::Cycle => Self::cycle(sizes[0]),
            BasicKind::Complete => Self::complete(sizes[0]),
            BasicKind::CompleteBipartite => Self::complete_bipartite(sizes[0], sizes[1]),
            BasicKind::Empty => Self::empty(sizes[0]),
        }
    }

    /// `P_n` with edges `(i, i+1)`.
    pub fn path(n: usize) -> Result<Self> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// `C_n` in traversal order; needs `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::OutOfRange {
                what: "cycle length",
                detail: format!("{n} < 3"),
            });
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n).0;
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        Self::empty(a)?.join(&Self::empty(b)?)
    }

    /// `S_{n,k} = K_k ∨ (n-k)K1`: clique on `0..k`, independent set `k..n`.
    pub fn split_star(n: usize, k: usize) -> Result<Self> {
        if k < 1 || k > n {
            return Err(Error::OutOfRange {
                what: "split star",
                detail: format!("need 1 <= k <= n, got n = {n}, k = {k}"),
            });
        }
        Self::complete(k)?.join(&Self::empty(n - k)?)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !VertexSet::full(u + 1).0)
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// `G ∨ H`: vertices of `H` are shifted by `|G|`.
    pub fn join(&self, other: &Graph) -> Result<Self> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n).0;
        let right = VertexSet::range(self.n, g.n).0;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// `G ∪ H`: vertices of `H` are shifted by `|G|`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Induced subgraph on `V - S`; survivors keep their relative order.
    pub fn delete_vertices(&self, set: VertexSet) -> Result<Self> {
        if let Some(v) = set.difference(self.vertices()).first() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let keep: Vec<usize> = self.vertices().difference(set).to_vec();
        let mut new_index = [usize::MAX; MAX_ORDER];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                VertexSet(self.adj[v] & !set.0)
                    .iter()
                    .fold(0u64, |row, u| row | 1 << new_index[u])
            })
            .collect();
        Ok(Graph { n: keep.len(), adj })
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        g
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.set_edge(u, v);
        g
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in VertexSet(self.adj[u]).iter() {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier).iter() {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// `(i(G - S), odd(G - S))` without materialising `G - S`.
    pub fn removal_counts(&self, removed: VertexSet) -> (usize, usize) {
        let mut rest = VertexSet::full(self.n).0 & !removed.0;
        let (mut isolated, mut odd) = (0, 0);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if self.adj[v] & rest == 0 {
                isolated += 1;
                rest &= !(1 << v);
                continue;
            }
            let comp = self.reach(v, rest);
            if comp.count_ones() % 2 == 1 {
                odd += 1;
            }
            rest &= !comp;
        }
        (isolated, odd)
    }

    pub fn component_stats(&self) -> ComponentStats {
        let mut rest = VertexSet::full(self.n).0;
        let mut components = Vec::new();
        let (mut isolated, mut odd) = (0, 0);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let comp = self.reach(v, rest);
            match comp.count_ones() {
                1 => isolated += 1,
                c if c % 2 == 1 => odd += 1,
                _ => {}
            }
            components.push(VertexSet(comp));
            rest &= !comp;
        }
        ComponentStats {
            components,
            isolated,
            odd,
        }
    }

    /// True iff the graph has exactly one component (the null graph has none).
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reach(0, VertexSet::full(self.n).0).count_ones() as usize == self.n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
