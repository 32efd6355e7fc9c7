//! Canonical forms, isomorphism and generation of connected graphs.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::read_graph6_file;

/// Largest order [`canonical_form`] accepts (120 pair bits fit in a `u128`).
pub const MAX_CANONICAL_ORDER: usize = 16;
/// Largest order [`connected_graphs`] generates without an external file.
pub const MAX_BUILTIN_ORDER: usize = 8;

/// Upper-triangle adjacency string, minimal over all labelings that respect
/// the refined degree partition. Pair `(i, j)`, `i < j`, sits at position
/// `j(j−1)/2 + i`; position 0 is the most significant bit, so integer order
/// is lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u128,
}

impl CanonicalForm {
    /// The graph this form encodes, in canonical labeling.
    pub fn to_graph(&self) -> Graph {
        let n = self.n;
        let total = n * n.saturating_sub(1) / 2;
        let mut adj = vec![0u64; n];
        let mut pos = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (total - 1 - pos) & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                pos += 1;
            }
        }
        Graph::from_rows(n, adj)
    }
}

/// Ordered equitable refinement of the degree partition. Returns the cell
/// index of every vertex; cells are numbered by an isomorphism-invariant
/// order.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut cell: Vec<usize> = {
        let degs: BTreeSet<usize> = (0..n).map(|v| g.degree(v)).collect();
        let degs: Vec<usize> = degs.into_iter().collect();
        (0..n)
            .map(|v| degs.binary_search(&g.degree(v)).unwrap())
            .collect()
    };
    let mut count = cell.iter().max().map_or(0, |m| m + 1);
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut c = vec![0usize; count];
                for u in g.neighbors(v).iter() {
                    c[cell[u]] += 1;
                }
                (cell[v], c)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sig.iter().collect();
        let distinct: Vec<&(usize, Vec<usize>)> = distinct.into_iter().collect();
        let next: Vec<usize> = sig
            .iter()
            .map(|s| distinct.binary_search(&s).unwrap())
            .collect();
        let next_count = distinct.len();
        cell = next;
        if next_count == count {
            return cell;
        }
        count = next_count;
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    /// For each position, the cell it must be filled from.
    slot_cell: Vec<usize>,
    cell: Vec<usize>,
    twins: Vec<u64>,
    order: Vec<usize>,
    best: Option<u128>,
}

impl CanonSearch<'_> {
    fn total_bits(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// `prefix` holds the bits of columns `1..j`; `tight` is true while that
    /// prefix equals the best string's prefix.
    fn search(&mut self, j: usize, placed: u64, prefix: u128, tight: bool) {
        if j == self.n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let want = self.slot_cell[j];
        let mut tried = 0u64;
        let candidates: Vec<usize> = (0..self.n)
            .filter(|&v| placed >> v & 1 == 0 && self.cell[v] == want)
            .collect();
        for v in candidates {
            if self.twins[v] & tried != 0 {
                continue;
            }
            tried |= 1 << v;
            let nbrs = self.g.neighbors(v).0;
            let mut p = prefix;
            for i in 0..j {
                p = p << 1 | (nbrs >> self.order[i] & 1) as u128;
            }
            let mut still_tight = false;
            if tight {
                if let Some(best) = self.best {
                    let done = j * (j + 1) / 2;
                    let best_prefix = best >> (self.total_bits() - done);
                    if p > best_prefix {
                        continue;
                    }
                    still_tight = p == best_prefix;
                }
            }
            self.order[j] = v;
            self.search(j + 1, placed | 1 << v, p, still_tight);
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: MAX_CANONICAL_ORDER,
        });
    }
    if n <= 1 {
        return Ok(CanonicalForm { n, bits: 0 });
    }
    let cell = refine(g);
    let mut slot_cell = cell.clone();
    slot_cell.sort_unstable();
    // u, v are twins when swapping them is an automorphism
    let twins = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| {
                    u != v && {
                        let strip = !(1u64 << u | 1u64 << v);
                        g.neighbors(u).0 & strip == g.neighbors(v).0 & strip
                    }
                })
                .fold(0u64, |acc, u| acc | 1 << u)
        })
        .collect();
    let mut s = CanonSearch {
        g,
        n,
        slot_cell,
        cell,
        twins,
        order: vec![0; n],
        best: None,
    };
    s.search(0, 0, 0, true);
    Ok(CanonicalForm {
        n,
        bits: s.best.expect("at least one labeling"),
    })
}

pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(canonical_form(g)?.to_graph())
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() {
        return Ok(false);
    }
    if g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        // still enforce the order cap for a consistent contract
        if g.order() > MAX_CANONICAL_ORDER {
            return Err(Error::OrderTooLarge {
                n: g.order(),
                max: MAX_CANONICAL_ORDER,
            });
        }
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Canonical forms of all graphs (connected or not) on `n` vertices.
fn all_forms(n: usize) -> &'static BTreeSet<CanonicalForm> {
    static CACHE: [OnceLock<BTreeSet<CanonicalForm>>; MAX_BUILTIN_ORDER + 1] =
        [const { OnceLock::new() }; MAX_BUILTIN_ORDER + 1];
    CACHE[n].get_or_init(|| {
        if n <= 1 {
            return BTreeSet::from([CanonicalForm { n, bits: 0 }]);
        }
        // every graph on n vertices is a graph on n-1 vertices plus one more
        let smaller: Vec<Graph> = all_forms(n - 1)
            .iter()
            .map(CanonicalForm::to_graph)
            .collect();
        smaller
            .par_iter()
            .flat_map_iter(|base| {
                let extended = base
                    .disjoint_union(&Graph::empty(1).expect("order 1"))
                    .expect("n <= 8");
                (0..1u64 << (n - 1)).map(move |nbrs| {
                    let g = VertexSet(nbrs)
                        .iter()
                        .fold(extended.clone(), |g, u| g.with_edge(u, n - 1));
                    canonical_form(&g).expect("n <= 8")
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect()
    })
}

/// One connected graph per isomorphism class, in canonical labeling and
/// increasing canonical-form order.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_BUILTIN_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: MAX_BUILTIN_ORDER,
        });
    }
    Ok(all_forms(n)
        .iter()
        .map(CanonicalForm::to_graph)
        .filter(Graph::is_connected)
        .collect())
}

/// Where a harness run takes its graphs from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    /// Built-in generation of all connected graphs of this order.
    Enumerated(usize),
    /// A graph6 file, one graph per line.
    Graph6File(PathBuf),
    /// Explicit graphs, e.g. a sampled set.
    Explicit { label: String, graphs: Vec<Graph> },
}

impl GraphSource {
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        match self {
            GraphSource::Enumerated(n) => connected_graphs(*n),
            GraphSource::Graph6File(path) => read_graph6_file(path),
            GraphSource::Explicit { graphs, .. } => Ok(graphs.clone()),
        }
    }

    pub fn is_exhaustive(&self) -> bool {
        !matches!(self, GraphSource::Explicit { .. })
    }

    pub fn describe(&self) -> String {
        match self {
            GraphSource::Enumerated(n) => format!("enumerated connected graphs, n = {n}"),
            GraphSource::Graph6File(p) => format!("graph6 file {}", p.display()),
            GraphSource::Explicit { label, graphs } => format!("{label} ({} graphs)", graphs.len()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_graph_same_form() {
        let c3 = Graph::cycle(3).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(canonical_form(&c3).unwrap(), canonical_form(&k3).unwrap());
    }

    #[test]
    fn automorphism_invariance() {
        let p4 = Graph::path(4).unwrap();
        let rev = p4.permuted(&[3, 2, 1, 0]);
        assert_eq!(canonical_form(&p4).unwrap(), canonical_form(&rev).unwrap());
        let star = Graph::complete_bipartite(1, 3).unwrap();
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&star).unwrap());
    }

    #[test]
    fn isomorphism_examples() {
        let s = Graph::split_star(6, 2).unwrap();
        let j = Graph::complete(2)
            .unwrap()
            .join(&Graph::empty(4).unwrap())
            .unwrap();
        assert!(are_isomorphic(&s, &j).unwrap());
        let a = Graph::complete(1)
            .unwrap()
            .join(
                &Graph::complete(3)
                    .unwrap()
                    .disjoint_union(&Graph::empty(2).unwrap())
                    .unwrap(),
            )
            .unwrap();
        let b = Graph::complete(1)
            .unwrap()
            .join(
                &Graph::complete(2)
                    .unwrap()
                    .disjoint_union(&Graph::empty(3).unwrap())
                    .unwrap(),
            )
            .unwrap();
        assert!(!are_isomorphic(&a, &b).unwrap());
        assert!(!are_isomorphic(&a, &Graph::complete(5).unwrap()).unwrap());
    }

    #[test]
    fn form_round_trips_through_graph() {
        let g = Graph::split_star(7, 3).unwrap();
        let f = canonical_form(&g).unwrap();
        let h = f.to_graph();
        assert!(h.order() == 7 && h.size() == g.size());
        assert_eq!(canonical_form(&h).unwrap(), f);
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn order_caps() {
        assert!(connected_graphs(9).is_err());
        assert!(connected_graphs(0).is_err());
        assert!(canonical_form(&Graph::empty(17).unwrap()).is_err());
        assert!(canonical_form(&Graph::complete(16).unwrap()).is_ok());
    }

    #[test]
    fn regular_graphs_with_large_cells() {
        // Petersen graph: vertex-transitive, no twins
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let pet = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        let shuffled = pet.permuted(&[3, 7, 1, 9, 0, 5, 2, 8, 6, 4]);
        assert!(are_isomorphic(&pet, &shuffled).unwrap());
        let c10 = Graph::cycle(10).unwrap();
        let two_c5 = Graph::cycle(5)
            .unwrap()
            .disjoint_union(&Graph::cycle(5).unwrap())
            .unwrap();
        assert!(!are_isomorphic(&c10, &two_c5).unwrap());
    }
}
