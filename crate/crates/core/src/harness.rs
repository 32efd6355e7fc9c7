//! Verification of the spectral sufficient conditions over whole graph
//! classes, sharpness checks, minimizer search and the comparison sweeps
//! between extremal families.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{canonical_form, CanonicalForm, GraphSource};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::write_graph6;
use crate::matching::{decide_property, violates, PropertyQuery};
use crate::quotient::{closed_form_lambda1, FamilySpec};
use crate::spectra::{
    distance_spectral_radius, Comparison, SolverConfig, DEFAULT_EPS, DEFAULT_TOL,
};

/// Formats `x` with `digits` significant digits in plain notation.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding can carry into a new leading digit
    if decimals > 0
        && s.trim_start_matches('-')
            .replace('.', "")
            .trim_start_matches('0')
            .len()
            > digits
    {
        return format!("{x:.prec$}", prec = decimals - 1);
    }
    s
}

fn round_sig(x: f64) -> f64 {
    format_sig(x, 10).parse().unwrap_or(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    /// Perfect k-matchings, odd k, even order.
    T1,
    /// k-d-criticality, odd k.
    T2,
    /// Generalised factor-criticality, odd k and odd order.
    T3,
    /// Generalised bicriticality, odd k and even order.
    T4,
    /// Generalised factor-criticality or bicriticality for even k.
    T5,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "T1" => Ok(TheoremId::T1),
            "T2" => Ok(TheoremId::T2),
            "T3" => Ok(TheoremId::T3),
            "T4" => Ok(TheoremId::T4),
            "T5" => Ok(TheoremId::T5),
            _ => Err(Error::InvalidSpec(format!(
                "unknown theorem {s:?}; expected T1..T5"
            ))),
        }
    }
}

/// Which half of a two-branch statement applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// Orders whose threshold graph is built from a single apex.
    Apex,
    /// Small even orders whose threshold graph is a split star.
    SmallEven,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TheoremSpec {
    pub id: TheoremId,
    pub n: usize,
    pub k: u32,
    pub d: Option<u32>,
}

impl fmt::Display for TheoremSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={} k={}", self.id, self.n, self.k)?;
        if let Some(d) = self.d {
            write!(f, " d={d}")?;
        }
        Ok(())
    }
}

impl TheoremSpec {
    pub fn new(id: TheoremId, n: usize, k: u32, d: Option<u32>) -> Result<Self> {
        let spec = TheoremSpec { id, n, k, d };
        spec.validate()?;
        Ok(spec)
    }

    fn bad(&self, why: &str) -> Error {
        Error::InvalidSpec(format!("{self}: {why}"))
    }

    pub fn validate(&self) -> Result<()> {
        let (n, k) = (self.n, self.k);
        if self.id != TheoremId::T2 && self.d.is_some() {
            return Err(self.bad("d applies only to T2"));
        }
        if n > 16 {
            return Err(self.bad("orders above 16 are beyond the isomorphism test"));
        }
        match self.id {
            TheoremId::T1 => {
                if k % 2 == 0 {
                    return Err(self.bad("needs odd k"));
                }
                if n < 6 || n % 2 == 1 {
                    return Err(self.bad("needs even n >= 6"));
                }
            }
            TheoremId::T2 => {
                let d = self.d.ok_or_else(|| self.bad("needs d"))?;
                if k < 3 || k % 2 == 0 {
                    return Err(self.bad("needs odd k >= 3"));
                }
                if d < 1 || d >= k {
                    return Err(self.bad("needs 1 <= d < k"));
                }
                if n < 3 {
                    return Err(self.bad("needs n >= 3"));
                }
                if n % 2 != d as usize % 2 {
                    return Err(Error::Parity(format!("{self}: needs n = d (mod 2)")));
                }
            }
            TheoremId::T3 => {
                if k < 3 || k % 2 == 0 {
                    return Err(self.bad("needs odd k >= 3"));
                }
                if n < 3 || n % 2 == 0 {
                    return Err(self.bad("needs odd n >= 3"));
                }
            }
            TheoremId::T4 => {
                if k < 3 || k % 2 == 0 {
                    return Err(self.bad("needs odd k >= 3"));
                }
                if n < 4 || n % 2 == 1 {
                    return Err(self.bad("needs even n >= 4"));
                }
            }
            TheoremId::T5 => {
                if k < 2 || k % 2 == 1 {
                    return Err(self.bad("needs even k >= 2"));
                }
                if n < 3 {
                    return Err(self.bad("needs n >= 3"));
                }
            }
        }
        Ok(())
    }

    pub fn branch(&self) -> Branch {
        let small_even = self.n.is_multiple_of(2) && self.n <= 8;
        match self.id {
            TheoremId::T1 if small_even => Branch::SmallEven,
            TheoremId::T2 | TheoremId::T4 | TheoremId::T5 if small_even => Branch::SmallEven,
            _ => Branch::Apex,
        }
    }

    /// The property the statement concludes.
    pub fn query(&self) -> PropertyQuery {
        match self.id {
            TheoremId::T1 => PropertyQuery::perfect(self.k),
            TheoremId::T2 => PropertyQuery::kd_critical(self.k, self.d.unwrap_or(1)),
            TheoremId::T3 => PropertyQuery::gfc(self.k),
            TheoremId::T4 => PropertyQuery::gbc(self.k),
            TheoremId::T5 if self.n % 2 == 1 => PropertyQuery::gfc(self.k),
            TheoremId::T5 => PropertyQuery::gbc(self.k),
        }
    }

    /// The graph defining the threshold, which is also the unique exception.
    pub fn exceptional_family(&self) -> FamilySpec {
        let n = self.n;
        match (self.id, self.branch()) {
            (TheoremId::T1, Branch::SmallEven) => FamilySpec::SplitStar { n, k: n / 2 - 1 },
            (TheoremId::T1, Branch::Apex) => FamilySpec::TwoPendantClique { n },
            (_, Branch::SmallEven) => FamilySpec::SplitStar { n, k: n / 2 },
            (_, Branch::Apex) => FamilySpec::PendantClique { n },
        }
    }

    /// Every runnable cell for orders up to `max_n`, in a fixed order.
    pub fn exhaustive_cells(max_n: usize) -> Vec<TheoremSpec> {
        let mut cells = Vec::new();
        let mut push = |id, n, k, d| {
            let spec = TheoremSpec { id, n, k, d };
            if n <= max_n && spec.validate().is_ok() {
                cells.push(spec);
            }
        };
        for n in [6, 8] {
            for k in [1, 3, 5] {
                push(TheoremId::T1, n, k, None);
            }
        }
        for k in [3u32, 5] {
            for n in 3..=8usize {
                for d in 1..k {
                    push(TheoremId::T2, n, k, Some(d));
                }
            }
        }
        for k in [3, 5] {
            for n in [3, 5, 7] {
                push(TheoremId::T3, n, k, None);
            }
        }
        for k in [3, 5] {
            for n in [4, 6, 8] {
                push(TheoremId::T4, n, k, None);
            }
        }
        for k in [2, 4] {
            for n in 3..=8 {
                push(TheoremId::T5, n, k, None);
            }
        }
        cells
    }
}

#[derive(Clone, Debug)]
pub struct Threshold {
    pub value: f64,
    pub family: FamilySpec,
    pub graph: Graph,
}

pub fn threshold_for(spec: &TheoremSpec) -> Result<Threshold> {
    spec.validate()?;
    let family = spec.exceptional_family();
    Ok(Threshold {
        value: closed_form_lambda1(&family)?.value,
        graph: family.build()?,
        family,
    })
}

/// Numerical settings shared by harness runs. The worker count never
/// affects results.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RunOptions {
    pub eps: f64,
    pub tol: f64,
    pub workers: Option<usize>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            eps: DEFAULT_EPS,
            tol: DEFAULT_TOL,
            workers: None,
        }
    }
}

impl RunOptions {
    fn solver(&self) -> SolverConfig {
        SolverConfig::with_tol(self.tol)
    }

    /// Runs `f` on a pool with the requested number of threads.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.workers {
            None => Ok(f()),
            Some(w) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(w.max(1))
                    .build()
                    .map_err(|e| Error::InvalidQuery(format!("cannot start {w} workers: {e}")))?;
                Ok(pool.install(f))
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictRow {
    pub graph6: String,
    pub n: usize,
    pub k: u32,
    pub d: Option<u32>,
    pub lambda1: f64,
    pub threshold: f64,
    pub cmp: Comparison,
    pub property: String,
    /// Whether the graph has the property.
    pub verdict: bool,
    /// Isomorphic to the exceptional graph.
    pub exception: bool,
    pub violation: bool,
    #[serde(skip)]
    pub form: CanonicalForm,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunMetadata {
    pub spec: TheoremSpec,
    pub branch: Branch,
    pub exceptional_graph: String,
    pub eps: f64,
    pub tol: f64,
    pub source: String,
    pub exhaustive: bool,
    pub coverage: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub metadata: RunMetadata,
    pub rows: Vec<VerdictRow>,
    pub graphs: usize,
    pub violations: usize,
    pub exceptions: usize,
    /// Every exception row sits exactly at the threshold and lacks the property.
    pub exceptions_consistent: bool,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.exceptions == 1 && self.exceptions_consistent
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        #[derive(Serialize)]
        struct CsvRow<'a> {
            graph6: &'a str,
            n: usize,
            k: u32,
            d: Option<u32>,
            lambda1: String,
            threshold: String,
            cmp: Comparison,
            property: &'a str,
            verdict: bool,
            exception: bool,
            violation: bool,
        }
        let mut w = csv::Writer::from_writer(out);
        for r in &self.rows {
            w.serialize(CsvRow {
                graph6: &r.graph6,
                n: r.n,
                k: r.k,
                d: r.d,
                lambda1: format_sig(r.lambda1, 10),
                threshold: format_sig(r.threshold, 10),
                cmp: r.cmp,
                property: &r.property,
                verdict: r.verdict,
                exception: r.exception,
                violation: r.violation,
            })
            .map_err(csv_error)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> Result<()> {
        let mut rounded = self.clone();
        for r in &mut rounded.rows {
            r.lambda1 = round_sig(r.lambda1);
            r.threshold = round_sig(r.threshold);
        }
        serde_json::to_writer_pretty(&mut out, &rounded).map_err(|e| Error::Io(e.into()))?;
        writeln!(out)?;
        Ok(())
    }
}

fn csv_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Io(std::io::Error::other(format!("{other:?}"))),
    }
}

fn coverage_note(spec: &TheoremSpec, exhaustive: bool) -> String {
    let scope = if exhaustive {
        format!("all connected graphs of order {} in the source", spec.n)
    } else {
        format!(
            "a sample of connected graphs of order {} plus extremal family graphs",
            spec.n
        )
    };
    format!("{scope}; orders n >= 10 are checked only by sampling and sharpness checks, never exhaustively")
}

fn check_orders(graphs: &[Graph], n: usize) -> Result<()> {
    for g in graphs {
        if g.order() != n {
            return Err(Error::SourceOrderMismatch {
                expected: n,
                found: g.order(),
            });
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
    }
    Ok(())
}

fn verdict_row(
    g: &Graph,
    spec: &TheoremSpec,
    threshold: f64,
    exceptional: CanonicalForm,
    options: &RunOptions,
) -> Result<VerdictRow> {
    let query = spec.query();
    let form = canonical_form(g)?;
    let lambda1 = distance_spectral_radius(g, options.solver())?.lambda1;
    let cmp = Comparison::of(lambda1, threshold, options.eps);
    let verdict = decide_property(g, &query)?.holds;
    let exception = form == exceptional;
    Ok(VerdictRow {
        graph6: write_graph6(&form.to_graph()),
        n: g.order(),
        k: spec.k,
        d: spec.d,
        lambda1,
        threshold,
        cmp,
        property: query.property.to_string(),
        verdict,
        exception,
        violation: cmp != Comparison::Above && !verdict && !exception,
        form,
    })
}

/// One verdict row per source graph, sorted by canonical form.
pub fn verify_theorem(
    spec: &TheoremSpec,
    source: &GraphSource,
    options: &RunOptions,
) -> Result<TheoremReport> {
    let threshold = threshold_for(spec)?;
    let graphs = source.graphs()?;
    check_orders(&graphs, spec.n)?;
    let exceptional = canonical_form(&threshold.graph)?;
    let mut rows = options.install(|| {
        graphs
            .par_iter()
            .map(|g| verdict_row(g, spec, threshold.value, exceptional, options))
            .collect::<Result<Vec<_>>>()
    })??;
    rows.sort_by(|a, b| a.form.cmp(&b.form).then_with(|| a.graph6.cmp(&b.graph6)));
    let violations = rows.iter().filter(|r| r.violation).count();
    let exceptions = rows.iter().filter(|r| r.exception).count();
    let exceptions_consistent = rows
        .iter()
        .filter(|r| r.exception)
        .all(|r| r.cmp == Comparison::Equal && !r.verdict);
    let exhaustive = source.is_exhaustive();
    Ok(TheoremReport {
        metadata: RunMetadata {
            spec: *spec,
            branch: spec.branch(),
            exceptional_graph: threshold.family.to_string(),
            eps: options.eps,
            tol: options.tol,
            source: source.describe(),
            exhaustive,
            coverage: coverage_note(spec, exhaustive),
        },
        graphs: rows.len(),
        rows,
        violations,
        exceptions,
        exceptions_consistent,
    })
}

/// A connected `G(n, p)` sample, redrawn until connected.
pub fn random_connected_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    loop {
        let mut edges = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
}

/// Every graph `K_s ∨ (K_{n1} ∪ … ∪ K_{np} ∪ iK1)` on `n` vertices with
/// `s ≤ max_core`; this covers all the extremal constructions.
pub fn family_graphs(n: usize, max_core: usize) -> Result<Vec<(FamilySpec, Graph)>> {
    fn partitions(
        total: usize,
        max_part: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if total == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (2..=max_part.min(total)).rev() {
            prefix.push(part);
            partitions(total - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut seen = BTreeMap::new();
    for s in 1..=max_core.min(n) {
        for isolated in 0..=n - s {
            let mut parts = Vec::new();
            partitions(n - s - isolated, n, &mut Vec::new(), &mut parts);
            for parts in parts {
                let spec = FamilySpec::General { s, parts, isolated };
                let g = spec.build()?;
                seen.entry(canonical_form(&g)?).or_insert((spec, g));
            }
        }
    }
    Ok(seen.into_values().collect())
}

/// Random connected graphs of order `spec.n` plus all family graphs and all
/// single-edge perturbations of the exceptional graph.
pub fn sampled_source(spec: &TheoremSpec, samples: usize, seed: u64) -> Result<GraphSource> {
    let threshold = threshold_for(spec)?;
    let n = spec.n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graphs = BTreeMap::new();
    let mut add = |g: Graph| -> Result<()> {
        if g.is_connected() {
            graphs.entry(canonical_form(&g)?).or_insert(g);
        }
        Ok(())
    };
    for _ in 0..samples {
        let p = rng.gen_range(0.3..0.95);
        add(random_connected_graph(n, p, &mut rng)?)?;
    }
    for (_, g) in family_graphs(n, 3)? {
        add(g)?;
    }
    let base = threshold.graph;
    add(base.clone())?;
    for v in 1..n {
        for u in 0..v {
            add(if base.has_edge(u, v) {
                base.without_edge(u, v)
            } else {
                base.with_edge(u, v)
            })?;
        }
    }
    Ok(GraphSource::Explicit {
        label: format!(
            "sampled (seed {seed}, {samples} random draws, family graphs, perturbations)"
        ),
        graphs: graphs.into_values().collect(),
    })
}

/// A construction that must lack the property, with the vertex set that
/// shows it.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessCheck {
    pub family: String,
    pub graph6: String,
    pub witness: VertexSet,
    pub lambda1: f64,
    pub cmp: Comparison,
    pub witness_violates: bool,
    pub property_holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SharpnessReport {
    pub spec: TheoremSpec,
    pub threshold: f64,
    /// The exceptional graph first, then the other constructions.
    pub checks: Vec<WitnessCheck>,
    pub passed: bool,
}

/// Constructions from the extremal arguments, with their barrier sets.
fn witnesses(spec: &TheoremSpec) -> Vec<(FamilySpec, VertexSet)> {
    let n = spec.n;
    let exceptional = spec.exceptional_family();
    let set = |fam: &FamilySpec| match *fam {
        FamilySpec::SplitStar { k, .. } => VertexSet::range(0, k),
        FamilySpec::CoreOdd { s, .. } | FamilySpec::CoreEven { s, .. } => VertexSet::range(0, s),
        _ => VertexSet::singleton(0),
    };
    let mut out = vec![(exceptional.clone(), set(&exceptional))];
    let mut others = Vec::new();
    if spec.id == TheoremId::T1 {
        for s in 1..=(n - 2) / 2 {
            others.push(FamilySpec::CoreOdd { n, s });
        }
        others.push(FamilySpec::TwoPendantClique { n });
    } else {
        for s in 1..=n / 2 {
            others.push(FamilySpec::CoreEven { n, s });
        }
        others.push(FamilySpec::PendantClique { n });
        if n % 2 == 1 {
            others.push(FamilySpec::SplitStar { n, k: (n - 1) / 2 });
        }
    }
    let form = |fam: &FamilySpec| fam.build().ok().and_then(|g| canonical_form(&g).ok());
    let mut seen = vec![form(&exceptional)];
    for fam in others {
        let f = form(&fam);
        if !seen.contains(&f) {
            seen.push(f);
            let w = set(&fam);
            out.push((fam, w));
        }
    }
    out
}

/// The exceptional graph sits at the threshold and lacks the property; the
/// other constructions lack it too and never fall below the threshold.
pub fn sharpness_check(spec: &TheoremSpec, options: &RunOptions) -> Result<SharpnessReport> {
    let threshold = threshold_for(spec)?;
    let query = spec.query();
    let mut checks = Vec::new();
    for (fam, witness) in witnesses(spec) {
        let g = fam.build()?;
        let lambda1 = distance_spectral_radius(&g, options.solver())?.lambda1;
        checks.push(WitnessCheck {
            family: fam.to_string(),
            graph6: write_graph6(&g),
            witness,
            lambda1,
            cmp: Comparison::of(lambda1, threshold.value, options.eps),
            witness_violates: violates(&g, &query, witness),
            property_holds: decide_property(&g, &query)?.holds,
        });
    }
    let passed = checks[0].cmp == Comparison::Equal
        && checks
            .iter()
            .all(|c| c.witness_violates && !c.property_holds && c.cmp != Comparison::Below);
    Ok(SharpnessReport {
        spec: *spec,
        threshold: threshold.value,
        checks,
        passed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Minimizer {
    pub graph6: String,
    pub lambda1: f64,
    /// Graphs in the source lacking the property.
    pub candidates: usize,
    /// Candidates within ε of the minimum, the minimizer included.
    pub ties: usize,
    #[serde(skip)]
    pub graph: Graph,
}

/// The property-lacking graph of least distance spectral radius; the first
/// in canonical order wins ties.
pub fn minimizer_search(
    query: &PropertyQuery,
    n: usize,
    source: &GraphSource,
    options: &RunOptions,
) -> Result<Minimizer> {
    query.validate(n)?;
    let graphs = source.graphs()?;
    check_orders(&graphs, n)?;
    let mut lacking = options
        .install(|| {
            graphs
                .par_iter()
                .map(|g| -> Result<Option<(CanonicalForm, f64, &Graph)>> {
                    if decide_property(g, query)?.holds {
                        return Ok(None);
                    }
                    let l = distance_spectral_radius(g, options.solver())?.lambda1;
                    Ok(Some((canonical_form(g)?, l, g)))
                })
                .collect::<Result<Vec<_>>>()
        })??
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    lacking.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)));
    let (form, lambda1, _) = *lacking.first().ok_or(Error::EmptyCandidateSet { n })?;
    let ties = lacking
        .iter()
        .filter(|c| Comparison::of(c.1, lambda1, options.eps) == Comparison::Equal)
        .count();
    let graph = form.to_graph();
    Ok(Minimizer {
        graph6: write_graph6(&graph),
        lambda1,
        candidates: lacking.len(),
        ties,
        graph,
    })
}

/// Families of radius comparisons between extremal graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sweep {
    /// `K_s ∨ (K_{n−s−p+1} ∪ (p−1)K1)` against every `K_s ∨ (K_{n1} ∪ … ∪ K_{np})`.
    CliqueMerge,
    /// `K1 ∨ (K_{n−3} ∪ 2K1)` against the odd-core graphs and `S_{n,n/2−1}`, even n.
    TwoPendant,
    /// `K1 ∨ (K_{n−2} ∪ K1)` against the even-core graphs and the balanced split stars.
    Pendant,
}

impl Sweep {
    pub const ALL: [Sweep; 3] = [Sweep::CliqueMerge, Sweep::TwoPendant, Sweep::Pendant];
}

impl fmt::Display for Sweep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sweep::CliqueMerge => "clique-merge",
            Sweep::TwoPendant => "two-pendant",
            Sweep::Pendant => "pendant",
        })
    }
}

impl FromStr for Sweep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Sweep::ALL
            .into_iter()
            .find(|w| w.to_string() == s.to_ascii_lowercase())
            .ok_or_else(|| {
                Error::InvalidQuery(format!(
                    "unknown sweep {s:?}; expected clique-merge, two-pendant or pendant"
                ))
            })
    }
}

/// One inequality `λ₁(smaller) ≤ λ₁(larger)`.
#[derive(Clone, Debug, Serialize)]
pub struct SweepInstance {
    pub part: &'static str,
    pub n: usize,
    pub smaller: String,
    pub larger: String,
    pub lhs: f64,
    pub rhs: f64,
    pub cmp: Comparison,
    /// Equality predicted by the combinatorial condition.
    pub equality_expected: bool,
    pub ok: bool,
    pub note: Option<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub sweep: Sweep,
    pub max_n: usize,
    pub instances: Vec<SweepInstance>,
    pub failures: usize,
}

struct Pending {
    part: &'static str,
    n: usize,
    smaller: FamilySpec,
    larger: FamilySpec,
    equality_expected: bool,
    note: Option<&'static str>,
}

fn sweep_cases(sweep: Sweep, max_n: usize) -> Vec<Pending> {
    let mut out = Vec::new();
    let mut push = |part, n, smaller, larger, equality_expected, note| {
        out.push(Pending {
            part,
            n,
            smaller,
            larger,
            equality_expected,
            note,
        })
    };
    match sweep {
        Sweep::CliqueMerge => {
            for n in 3..=max_n {
                for s in 1..=3.min(n - 2) {
                    for p in 2..=3usize {
                        if n < s + p {
                            continue;
                        }
                        // nonincreasing parts n1 >= n2 >= ... >= np >= 1
                        let mut parts = Vec::new();
                        let rest = n - s;
                        for a in 1..=rest {
                            if p == 2 {
                                let b = rest - a;
                                if b >= 1 && b <= a {
                                    parts.push(vec![a, b]);
                                }
                            } else {
                                for b in 1..=a {
                                    if rest > a + b {
                                        let c = rest - a - b;
                                        if c <= b {
                                            parts.push(vec![a, b, c]);
                                        }
                                    }
                                }
                            }
                        }
                        let merged = FamilySpec::General {
                            s,
                            parts: std::iter::once(n - s - p + 1)
                                .chain(std::iter::repeat_n(1, p - 1))
                                .collect(),
                            isolated: 0,
                        };
                        for parts in parts {
                            let eq = parts[1..].iter().all(|&x| x == 1);
                            push(
                                "merge",
                                n,
                                merged.clone(),
                                FamilySpec::General {
                                    s,
                                    parts,
                                    isolated: 0,
                                },
                                eq,
                                None,
                            );
                        }
                    }
                }
            }
        }
        Sweep::TwoPendant => {
            for n in (4..=max_n).step_by(2) {
                for s in 1..=(n - 2) / 2 {
                    if n >= 2 * s + 4 {
                        push(
                            "odd-core",
                            n,
                            FamilySpec::TwoPendantClique { n },
                            FamilySpec::CoreOdd { n, s },
                            s == 1,
                            None,
                        );
                    }
                }
                let s = (n - 2) / 2;
                let star = FamilySpec::SplitStar { n, k: s };
                if n <= 8 {
                    push(
                        "small-split-star",
                        n,
                        star,
                        FamilySpec::TwoPendantClique { n },
                        n == 4,
                        None,
                    );
                } else {
                    push(
                        "large-split-star",
                        n,
                        FamilySpec::TwoPendantClique { n },
                        star,
                        false,
                        None,
                    );
                }
            }
        }
        Sweep::Pendant => {
            for n in 2..=max_n {
                for s in 1..=n.saturating_sub(2) / 2 {
                    push(
                        "even-core",
                        n,
                        FamilySpec::PendantClique { n },
                        FamilySpec::CoreEven { n, s },
                        s == 1,
                        None,
                    );
                }
                if n % 2 == 1 && n >= 3 {
                    push(
                        "odd-split-star",
                        n,
                        FamilySpec::PendantClique { n },
                        FamilySpec::SplitStar { n, k: (n - 1) / 2 },
                        n == 3,
                        None,
                    );
                }
                if n % 2 == 0 {
                    let star = FamilySpec::SplitStar { n, k: n / 2 };
                    if n >= 10 {
                        push(
                            "large-split-star",
                            n,
                            FamilySpec::PendantClique { n },
                            star,
                            false,
                            None,
                        );
                    } else {
                        let note = (n == 2).then_some("order 2: both sides degenerate to K2");
                        push(
                            "small-split-star",
                            n,
                            star,
                            FamilySpec::PendantClique { n },
                            n == 2,
                            note,
                        );
                    }
                }
            }
        }
    }
    out
}

/// Checks every instance of a comparison family for orders up to `max_n`.
/// An instance passes when the three-way comparison is `equal` exactly where
/// the combinatorial condition predicts equality, and `below` elsewhere.
pub fn comparison_sweep(sweep: Sweep, max_n: usize, options: &RunOptions) -> Result<SweepReport> {
    if max_n > 30 {
        return Err(Error::OutOfRange {
            what: "sweep order",
            detail: format!("max n = {max_n} exceeds 30"),
        });
    }
    let cases = sweep_cases(sweep, max_n);
    let instances = options.install(|| {
        cases
            .par_iter()
            .map(|c| -> Result<SweepInstance> {
                let lhs = distance_spectral_radius(&c.smaller.build()?, options.solver())?.lambda1;
                let rhs = distance_spectral_radius(&c.larger.build()?, options.solver())?.lambda1;
                let cmp = Comparison::of(lhs, rhs, options.eps);
                let want = if c.equality_expected {
                    Comparison::Equal
                } else {
                    Comparison::Below
                };
                Ok(SweepInstance {
                    part: c.part,
                    n: c.n,
                    smaller: c.smaller.to_string(),
                    larger: c.larger.to_string(),
                    lhs,
                    rhs,
                    cmp,
                    equality_expected: c.equality_expected,
                    ok: cmp == want,
                    note: c.note,
                })
            })
            .collect::<Result<Vec<_>>>()
    })??;
    Ok(SweepReport {
        sweep,
        max_n,
        failures: instances.iter().filter(|i| !i.ok).count(),
        instances,
    })
}
