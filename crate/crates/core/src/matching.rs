//! Integer k-matchings: the k-Berge–Tutte deficiency, k-barriers, the
//! subset characterisations of perfect k-matchings, GFC_k, GBC_k and
//! k-d-criticality, and a constructive search used as an independent oracle.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order for which the 2^n subset scans are attempted.
pub const DEFAULT_SUBSET_CAP: usize = 20;
/// Default number of search states `direct_search` may visit.
pub const DEFAULT_SEARCH_BUDGET: usize = 20_000_000;
/// Largest per-vertex target `direct_search` accepts.
pub const MAX_SEARCH_CAP: u32 = 7;

/// Value of the k-Berge–Tutte expression for one subset.
pub fn barrier_value(k: u32, isolated: usize, odd: usize, size: usize) -> i64 {
    let k = k as i64;
    let base = k * isolated as i64 - k * size as i64;
    if k % 2 == 0 {
        base
    } else {
        base + odd as i64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Barrier {
    pub set: VertexSet,
    /// `i(G − S)`.
    pub isolated: usize,
    /// `odd(G − S)`.
    pub odd: usize,
}

impl Barrier {
    pub fn size(&self) -> usize {
        self.set.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeficiencyReport {
    pub k: u32,
    /// `def_k(G)`.
    pub value: i64,
    /// Every maximising subset, by size then lexicographically.
    pub barriers: Vec<Barrier>,
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(Error::OrderTooLarge {
            n: g.order(),
            max: cap,
        });
    }
    Ok(())
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0..1u64 << n).map(VertexSet)
}

/// `def_k(G)` with all k-barriers.
pub fn deficiency(g: &Graph, k: u32) -> Result<DeficiencyReport> {
    deficiency_capped(g, k, DEFAULT_SUBSET_CAP)
}

pub fn deficiency_capped(g: &Graph, k: u32, cap: usize) -> Result<DeficiencyReport> {
    if k < 1 {
        return Err(Error::InvalidQuery("k must be at least 1".into()));
    }
    check_cap(g, cap)?;
    let mut value = i64::MIN;
    let mut barriers = Vec::new();
    for set in subsets(g.order()) {
        let (isolated, odd) = g.removal_counts(set);
        let v = barrier_value(k, isolated, odd, set.len());
        if v > value {
            value = v;
            barriers.clear();
        }
        if v == value {
            barriers.push(Barrier { set, isolated, odd });
        }
    }
    barriers.sort_by(|a, b| a.set.report_cmp(&b.set));
    Ok(DeficiencyReport { k, value, barriers })
}

pub fn k_barriers(g: &Graph, k: u32) -> Result<Vec<VertexSet>> {
    Ok(deficiency(g, k)?
        .barriers
        .into_iter()
        .map(|b| b.set)
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    PerfectKMatching,
    /// Generalised factor-critical.
    Gfc,
    /// Generalised bicritical.
    Gbc,
    KdCritical,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::PerfectKMatching => "perfect-k-matching",
            Property::Gfc => "gfc",
            Property::Gbc => "gbc",
            Property::KdCritical => "kd-critical",
        })
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "perfect-k-matching" | "pkm" | "perfect" => Ok(Property::PerfectKMatching),
            "gfc" => Ok(Property::Gfc),
            "gbc" => Ok(Property::Gbc),
            "kd-critical" | "kd" | "k-d-critical" => Ok(Property::KdCritical),
            other => Err(Error::InvalidQuery(format!("unknown property {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PropertyQuery {
    pub property: Property,
    pub k: u32,
    /// Deficiency at the exceptional vertex; k-d-critical only.
    pub d: Option<u32>,
}

impl PropertyQuery {
    pub fn perfect(k: u32) -> Self {
        PropertyQuery {
            property: Property::PerfectKMatching,
            k,
            d: None,
        }
    }

    pub fn gfc(k: u32) -> Self {
        PropertyQuery {
            property: Property::Gfc,
            k,
            d: None,
        }
    }

    pub fn gbc(k: u32) -> Self {
        PropertyQuery {
            property: Property::Gbc,
            k,
            d: None,
        }
    }

    pub fn kd_critical(k: u32, d: u32) -> Self {
        PropertyQuery {
            property: Property::KdCritical,
            k,
            d: Some(d),
        }
    }

    /// Checks the query against its own constraints and the order `n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        let k = self.k;
        if k < 1 {
            return Err(Error::InvalidQuery("k must be at least 1".into()));
        }
        if self.property != Property::KdCritical && self.d.is_some() {
            return Err(Error::InvalidQuery(format!(
                "d only applies to kd-critical, not {}",
                self.property
            )));
        }
        match self.property {
            Property::PerfectKMatching => {
                if k % 2 == 1 && n % 2 == 1 {
                    return Err(Error::Parity(format!(
                        "a perfect {k}-matching needs even order for odd k, but n = {n}"
                    )));
                }
            }
            Property::Gfc | Property::Gbc => {
                if k < 2 {
                    return Err(Error::InvalidQuery(format!(
                        "{} needs k >= 2",
                        self.property
                    )));
                }
                if n < 3 {
                    return Err(Error::InvalidQuery(format!(
                        "{} needs n >= 3",
                        self.property
                    )));
                }
                let want_odd = self.property == Property::Gfc;
                if (n % 2 == 1) != want_odd {
                    return Err(Error::Parity(format!(
                        "{} is defined for {} order, but n = {n}",
                        self.property,
                        if want_odd { "odd" } else { "even" }
                    )));
                }
            }
            Property::KdCritical => {
                let d = self
                    .d
                    .ok_or_else(|| Error::InvalidQuery("kd-critical needs d".into()))?;
                if k < 3 || k.is_multiple_of(2) {
                    return Err(Error::InvalidQuery(format!(
                        "kd-critical needs odd k >= 3, got {k}"
                    )));
                }
                if d < 1 || d >= k {
                    return Err(Error::InvalidQuery(format!(
                        "kd-critical needs 1 <= d < k, got d = {d}, k = {k}"
                    )));
                }
                if n < 3 {
                    return Err(Error::InvalidQuery("kd-critical needs n >= 3".into()));
                }
                if n % 2 != d as usize % 2 {
                    return Err(Error::Parity(format!(
                        "kd-critical needs n = d (mod 2), got n = {n}, d = {d}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether `set` lies in the quantifier range of the characterisation.
    fn in_range(&self, set: VertexSet, n: usize) -> bool {
        match self.property {
            Property::PerfectKMatching => true,
            Property::Gfc | Property::Gbc => !set.is_empty() && set.len() < n,
            Property::KdCritical => !set.is_empty(),
        }
    }

    /// Whether the characterising inequality holds for `set`.
    fn inequality_holds(&self, isolated: usize, odd: usize, size: usize) -> bool {
        let k = self.k as i64;
        let (i, odd, s) = (isolated as i64, odd as i64, size as i64);
        let even = self.k.is_multiple_of(2);
        match self.property {
            Property::PerfectKMatching if even => i <= s,
            Property::PerfectKMatching => odd + k * i <= k * s,
            Property::Gfc | Property::Gbc if even => i < s,
            Property::Gfc => odd + k * i < k * s,
            Property::Gbc => odd + k * i <= k * s - 2,
            Property::KdCritical => odd + k * i <= k * s - self.d.unwrap_or(0) as i64,
        }
    }
}

impl fmt::Display for PropertyQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (k = {}", self.property, self.k)?;
        if let Some(d) = self.d {
            write!(f, ", d = {d}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    /// A subset violating the characterisation, smallest first.
    pub witness: Option<VertexSet>,
}

/// True iff `set` is in the query's range and breaks its inequality.
pub fn violates(g: &Graph, q: &PropertyQuery, set: VertexSet) -> bool {
    if !q.in_range(set, g.order()) {
        return false;
    }
    let (isolated, odd) = g.removal_counts(set);
    !q.inequality_holds(isolated, odd, set.len())
}

/// Decides the property through its subset characterisation.
pub fn decide_property(g: &Graph, q: &PropertyQuery) -> Result<Verdict> {
    decide_property_capped(g, q, DEFAULT_SUBSET_CAP)
}

pub fn decide_property_capped(g: &Graph, q: &PropertyQuery, cap: usize) -> Result<Verdict> {
    q.validate(g.order())?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    check_cap(g, cap)?;
    let witness = subsets(g.order())
        .filter(|&s| violates(g, q, s))
        .min_by(VertexSet::report_cmp);
    Ok(Verdict {
        holds: witness.is_none(),
        witness,
    })
}

/// `i(G − S) ≤ |S|` for every `S`: perfect k-matchings for even k, and
/// fractional perfect matchings.
pub fn isolated_criterion(g: &Graph) -> Result<bool> {
    check_cap(g, DEFAULT_SUBSET_CAP)?;
    Ok(subsets(g.order()).all(|s| g.removal_counts(s).0 <= s.len()))
}

/// Edge weights `f: E → {0..k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KMatching {
    pub k: u32,
    pub weights: BTreeMap<(usize, usize), u32>,
}

impl KMatching {
    pub fn weighted_degree(&self, v: usize) -> u32 {
        self.weights
            .iter()
            .filter(|((a, b), _)| *a == v || *b == v)
            .map(|(_, &w)| w)
            .sum()
    }

    /// Weights within `0..=k` on edges of `g`, weighted degree ≤ k everywhere.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.weights
            .iter()
            .all(|(&(u, v), &w)| g.has_edge(u, v) && w <= self.k)
            && (0..g.order()).all(|v| self.weighted_degree(v) <= self.k)
    }
}

struct Search<'a> {
    edges: Vec<(usize, usize)>,
    last_edge: Vec<usize>,
    remaining: Vec<u32>,
    cap: u32,
    need: Vec<u32>,
    weights: Vec<u32>,
    failed: HashSet<(usize, u64)>,
    visited: usize,
    budget: usize,
    _graph: &'a Graph,
}

impl Search<'_> {
    fn key(&self) -> u64 {
        self.need.iter().fold(0u64, |acc, &r| acc << 3 | r as u64)
    }

    fn run(&mut self, j: usize) -> Result<bool> {
        if j == self.edges.len() {
            return Ok(self.need.iter().all(|&r| r == 0));
        }
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        let key = (j, self.key());
        if self.failed.contains(&key) {
            return Ok(false);
        }
        let (u, v) = self.edges[j];
        let mut hi = self.cap.min(self.need[u]).min(self.need[v]);
        let mut lo = 0u32;
        for x in [u, v] {
            // capacity left on x's later edges
            let later = (self.remaining[x] - 1) * self.cap;
            lo = lo.max(self.need[x].saturating_sub(later));
            if self.last_edge[x] == j {
                lo = lo.max(self.need[x]);
                hi = hi.min(self.need[x]);
            }
        }
        if lo <= hi {
            self.remaining[u] -= 1;
            self.remaining[v] -= 1;
            for w in (lo..=hi).rev() {
                self.need[u] -= w;
                self.need[v] -= w;
                self.weights[j] = w;
                let found = self.run(j + 1)?;
                self.need[u] += w;
                self.need[v] += w;
                if found {
                    self.remaining[u] += 1;
                    self.remaining[v] += 1;
                    return Ok(true);
                }
            }
            self.remaining[u] += 1;
            self.remaining[v] += 1;
        }
        self.failed.insert(key);
        Ok(false)
    }
}

/// Searches for edge weights in `0..=cap` giving every vertex weighted
/// degree exactly `targets[v]`.
///
/// Depth-first over the edges (most constrained first) with forced values
/// on each vertex's last edge, a capacity lower bound, and memoised failed
/// states. `Ok(None)` is a proof of absence.
pub fn direct_search(g: &Graph, targets: &[u32], cap: u32) -> Result<Option<KMatching>> {
    direct_search_with_budget(g, targets, cap, DEFAULT_SEARCH_BUDGET)
}

pub fn direct_search_with_budget(
    g: &Graph,
    targets: &[u32],
    cap: u32,
    budget: usize,
) -> Result<Option<KMatching>> {
    let n = g.order();
    if targets.len() != n {
        return Err(Error::InvalidQuery(format!(
            "{} targets for {n} vertices",
            targets.len()
        )));
    }
    if cap > MAX_SEARCH_CAP || n > 21 {
        return Err(Error::InvalidQuery(format!(
            "direct search supports cap <= {MAX_SEARCH_CAP} and n <= 21"
        )));
    }
    if let Some(t) = targets.iter().find(|&&t| t > cap) {
        return Err(Error::InvalidQuery(format!("target {t} exceeds cap {cap}")));
    }
    if targets.iter().sum::<u32>() % 2 == 1 {
        return Ok(None);
    }
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.sort_by_key(|&(u, v)| std::cmp::Reverse(g.degree(u).min(g.degree(v))));
    let mut last_edge = vec![usize::MAX; n];
    let mut remaining = vec![0u32; n];
    for (j, &(u, v)) in edges.iter().enumerate() {
        last_edge[u] = j;
        last_edge[v] = j;
        remaining[u] += 1;
        remaining[v] += 1;
    }
    if (0..n).any(|v| remaining[v] == 0 && targets[v] > 0) {
        return Ok(None);
    }
    let mut search = Search {
        weights: vec![0; edges.len()],
        edges,
        last_edge,
        remaining,
        cap,
        need: targets.to_vec(),
        failed: HashSet::new(),
        visited: 0,
        budget,
        _graph: g,
    };
    if !search.run(0)? {
        return Ok(None);
    }
    let weights = search
        .edges
        .iter()
        .zip(&search.weights)
        .filter(|(_, &w)| w > 0)
        .map(|(&e, &w)| (e, w))
        .collect();
    Ok(Some(KMatching { k: cap, weights }))
}

/// Decides the property from its definition rather than the subset characterisations:
/// perfect k-matchings and k-d-criticality (and GFC_k for odd k ≥ 3, as the
/// d = 1 case) by constructive search; the remaining GFC_k/GBC_k cases by
/// checking that ∅ is the only k-barrier.
pub fn direct_property_oracle(g: &Graph, q: &PropertyQuery) -> Result<bool> {
    let n = g.order();
    let k = q.k;
    match q.property {
        Property::PerfectKMatching => {
            if k < 1 {
                return Err(Error::InvalidQuery("k must be at least 1".into()));
            }
            Ok(direct_search(g, &vec![k; n], k)?.is_some())
        }
        Property::KdCritical => {
            q.validate(n)?;
            every_vertex_deficient(g, k, q.d.unwrap_or(0))
        }
        Property::Gfc if k % 2 == 1 => {
            q.validate(n)?;
            every_vertex_deficient(g, k, 1)
        }
        Property::Gfc | Property::Gbc => {
            q.validate(n)?;
            Ok(g.is_connected() && k_barriers(g, k)? == [VertexSet::EMPTY])
        }
    }
}

fn every_vertex_deficient(g: &Graph, k: u32, d: u32) -> Result<bool> {
    let n = g.order();
    for v in 0..n {
        let mut targets = vec![k; n];
        targets[v] = k - d;
        if direct_search(g, &targets, k)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn pendant_clique(n: usize) -> Graph {
        Graph::complete(1)
            .unwrap()
            .join(
                &Graph::complete(n - 2)
                    .unwrap()
                    .disjoint_union(&Graph::empty(1).unwrap())
                    .unwrap(),
            )
            .unwrap()
    }

    #[test]
    fn deficiency_k4() {
        let r = deficiency(&Graph::complete(4).unwrap(), 3).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.barriers[0].set, VertexSet::EMPTY);
    }

    #[test]
    fn deficiency_star() {
        let star = Graph::complete_bipartite(1, 3).unwrap();
        let r = deficiency(&star, 3).unwrap();
        assert_eq!(r.value, 6);
        assert_eq!(r.barriers.len(), 1);
        assert_eq!(r.barriers[0].set, set(&[0]));
        assert_eq!((r.barriers[0].isolated, r.barriers[0].odd), (3, 0));
    }

    #[test]
    fn split_star_clique_barrier_value() {
        for n in [6usize, 8, 10] {
            for k in [1u32, 3, 5] {
                let g = Graph::split_star(n, n / 2 - 1).unwrap();
                let clique = VertexSet::full(n / 2 - 1);
                let (i, odd) = g.removal_counts(clique);
                let lhs = odd as i64 + k as i64 * i as i64;
                assert_eq!(lhs, k as i64 * (n as i64 / 2 + 1));
                assert!(deficiency(&g, k).unwrap().value >= 2);
            }
        }
    }

    #[test]
    fn apex_barrier_of_pendant_clique() {
        for n in [5usize, 7] {
            let g = pendant_clique(n);
            let r = deficiency(&g, 3).unwrap();
            assert_eq!(r.value, 1);
            assert!(r.barriers.iter().any(|b| b.set == set(&[0])));
            let (i, odd) = g.removal_counts(set(&[0]));
            assert_eq!(barrier_value(3, i, odd, 1), 1);
        }
    }

    #[test]
    fn gfc_graph_has_only_empty_barrier() {
        for n in [3usize, 5, 7] {
            assert_eq!(
                k_barriers(&Graph::complete(n).unwrap(), 3).unwrap(),
                vec![VertexSet::EMPTY]
            );
        }
    }

    #[test]
    fn barrier_listing_order() {
        // P4 with k = 2: value 0, many maximisers
        let r = deficiency(&Graph::path(4).unwrap(), 2).unwrap();
        let sets: Vec<VertexSet> = r.barriers.iter().map(|b| b.set).collect();
        let mut sorted = sets.clone();
        sorted.sort_by(VertexSet::report_cmp);
        assert_eq!(sets, sorted);
        assert_eq!(sets[0], VertexSet::EMPTY);
    }

    #[test]
    fn cycles_have_perfect_matchings() {
        for n in [4usize, 6, 8] {
            for k in [1u32, 3, 5] {
                let v =
                    decide_property(&Graph::cycle(n).unwrap(), &PropertyQuery::perfect(k)).unwrap();
                assert!(v.holds && v.witness.is_none());
            }
        }
    }

    #[test]
    fn split_star_lacks_perfect_matching() {
        for n in [6usize, 8] {
            let g = Graph::split_star(n, n / 2 - 1).unwrap();
            for k in [1u32, 3, 5] {
                let v = decide_property(&g, &PropertyQuery::perfect(k)).unwrap();
                assert!(!v.holds);
                assert!(violates(
                    &g,
                    &PropertyQuery::perfect(k),
                    VertexSet::full(n / 2 - 1)
                ));
            }
        }
    }

    #[test]
    fn complete_graph_kd_critical() {
        let k5 = Graph::complete(5).unwrap();
        assert!(
            decide_property(&k5, &PropertyQuery::kd_critical(3, 1))
                .unwrap()
                .holds
        );
        assert!(direct_property_oracle(&k5, &PropertyQuery::kd_critical(3, 1)).unwrap());
        assert!(matches!(
            decide_property(&k5, &PropertyQuery::kd_critical(3, 3)),
            Err(Error::InvalidQuery(_))
        ));
        assert!(matches!(
            decide_property(&k5, &PropertyQuery::kd_critical(3, 2)),
            Err(Error::Parity(_))
        ));
    }

    #[test]
    fn parity_and_query_errors() {
        let k3 = Graph::complete(3).unwrap();
        assert!(matches!(
            decide_property(&k3, &PropertyQuery::perfect(3)),
            Err(Error::Parity(_))
        ));
        assert!(
            decide_property(&k3, &PropertyQuery::perfect(2))
                .unwrap()
                .holds
        );
        assert!(matches!(
            decide_property(&k3, &PropertyQuery::gbc(2)),
            Err(Error::Parity(_))
        ));
        let k4 = Graph::complete(4).unwrap();
        assert!(matches!(
            decide_property(&k4, &PropertyQuery::gfc(3)),
            Err(Error::Parity(_))
        ));
        assert!(matches!(
            decide_property(&k3, &PropertyQuery::gfc(1)),
            Err(Error::InvalidQuery(_))
        ));
        assert!(matches!(
            decide_property(&k3, &PropertyQuery::kd_critical(4, 1)),
            Err(Error::InvalidQuery(_))
        ));
        let two = Graph::empty(4).unwrap();
        assert!(matches!(
            decide_property(&two, &PropertyQuery::perfect(2)),
            Err(Error::Disconnected)
        ));
        let big = Graph::complete(22).unwrap();
        assert!(matches!(
            decide_property(&big, &PropertyQuery::perfect(2)),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn kd_range_includes_whole_vertex_set() {
        // S = V gives odd + k i = 0 <= k n - d, never a violation; the
        // proper-subset and subset ranges therefore agree
        for n in 3..8 {
            let g = Graph::complete(n).unwrap();
            let q = PropertyQuery::kd_critical(5, if n % 2 == 1 { 1 } else { 2 });
            assert!(q.in_range(VertexSet::full(n), n));
            assert!(!violates(&g, &q, VertexSet::full(n)));
        }
    }

    #[test]
    fn search_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let m = direct_search(&c4, &[3; 4], 3).unwrap().unwrap();
        assert!(m.is_valid_for(&c4));
        assert!((0..4).all(|v| m.weighted_degree(v) == 3));
        assert!(direct_search(&Graph::cycle(5).unwrap(), &[3; 5], 3)
            .unwrap()
            .is_none());
        let star = Graph::complete_bipartite(1, 3).unwrap();
        assert!(direct_search(&star, &[1; 4], 1).unwrap().is_none());
        assert!(direct_search(&star, &[3, 1, 1, 1], 3).unwrap().is_some());
        assert!(direct_search(&Graph::empty(1).unwrap(), &[0], 1)
            .unwrap()
            .is_some());
        assert!(direct_search(&star, &[4, 1, 1, 1], 3).is_err());
    }

    #[test]
    fn search_budget() {
        let g = Graph::split_star(12, 5).unwrap();
        assert!(matches!(
            direct_search_with_budget(&g, &[5; 12], 5, 10),
            Err(Error::BudgetExceeded { budget: 10 })
        ));
    }

    #[test]
    fn oracle_agrees_on_small_families() {
        for n in [5usize, 7] {
            let g = Graph::complete(n).unwrap();
            assert!(direct_property_oracle(&g, &PropertyQuery::gfc(3)).unwrap());
            assert!(decide_property(&g, &PropertyQuery::gfc(3)).unwrap().holds);
            let g = pendant_clique(n);
            assert!(!direct_property_oracle(&g, &PropertyQuery::gfc(3)).unwrap());
            assert!(!decide_property(&g, &PropertyQuery::gfc(3)).unwrap().holds);
            assert!(!direct_property_oracle(&g, &PropertyQuery::gfc(2)).unwrap());
        }
    }

    #[test]
    fn witness_is_smallest_violator() {
        let g = pendant_clique(5);
        let v = decide_property(&g, &PropertyQuery::kd_critical(3, 1)).unwrap();
        assert_eq!(v.witness, Some(set(&[0])));
    }

    #[test]
    fn property_names_round_trip() {
        for p in [
            Property::PerfectKMatching,
            Property::Gfc,
            Property::Gbc,
            Property::KdCritical,
        ] {
            assert_eq!(p.to_string().parse::<Property>().unwrap(), p);
        }
        assert!("nope".parse::<Property>().is_err());
    }
}
