//! Equitable partitions, quotient matrices and the extremal graph families
//! `K_s ∨ (K_{n1} ∪ … ∪ K_{np} ∪ iK1)` whose distance spectral radii are
//! roots of small integer characteristic polynomials.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::DenseMatrix;

/// Ordered cells covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(cells: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        for cell in &cells {
            if cell.is_empty() {
                return Err(Error::InvalidPartition("empty cell".into()));
            }
            for &v in cell {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} >= order {n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} in two cells")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
        }
        Ok(Partition { cells })
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn order(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuotientMatrix {
    /// `b[i][j]`: average row sum of block `M[i][j]`.
    pub b: Vec<Vec<f64>>,
    pub equitable: bool,
}

impl QuotientMatrix {
    /// Entries as integers, when they all are.
    pub fn to_integer(&self) -> Option<Vec<Vec<i64>>> {
        self.b
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| (x.fract() == 0.0).then_some(x as i64))
                    .collect()
            })
            .collect()
    }
}

fn block_row_sums(m: &DenseMatrix, p: &Partition) -> Vec<Vec<Vec<f64>>> {
    p.cells
        .iter()
        .map(|ci| {
            p.cells
                .iter()
                .map(|cj| {
                    ci.iter()
                        .map(|&u| cj.iter().map(|&v| m.get(u, v)).sum())
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn check_order(m: &DenseMatrix, p: &Partition) -> Result<()> {
    if p.order() != m.order() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, matrix has order {}",
            p.order(),
            m.order()
        )));
    }
    Ok(())
}

/// True iff every block has constant row sums. Exact comparison: intended
/// for integer-valued matrices such as distance matrices.
pub fn is_equitable(m: &DenseMatrix, p: &Partition) -> Result<bool> {
    check_order(m, p)?;
    Ok(block_row_sums(m, p)
        .iter()
        .flatten()
        .all(|sums| sums.iter().all(|&s| s == sums[0])))
}

pub fn quotient_matrix(m: &DenseMatrix, p: &Partition) -> Result<QuotientMatrix> {
    check_order(m, p)?;
    let sums = block_row_sums(m, p);
    let equitable = sums.iter().flatten().all(|s| s.iter().all(|&x| x == s[0]));
    let b = sums
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| s.iter().sum::<f64>() / s.len() as f64)
                .collect()
        })
        .collect();
    Ok(QuotientMatrix { b, equitable })
}

/// Monic integer polynomial, coefficients from the leading term down.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly(pub Vec<i128>);

impl IntPoly {
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|&c| c as f64).collect()
    }

    pub fn largest_real_root(&self) -> Result<f64> {
        largest_real_root(&self.to_f64())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let p = d - i;
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            let coeff = if mag == 1 && p > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var = match p {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{p}"),
            };
            if first {
                write!(f, "{sign}{coeff}{var}")?;
            } else {
                write!(f, " {sign} {coeff}{var}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `det(xI − A)` by Faddeev–LeVerrier in exact integer arithmetic.
pub fn characteristic_polynomial(a: &[Vec<i64>]) -> IntPoly {
    let n = a.len();
    let a: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut coeffs = vec![1i128];
    let mut m = vec![vec![0i128; n]; n];
    let mut c_prev = 1i128;
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|l| a[i][l] * m[l][j]).sum();
            }
            next[i][i] += c_prev;
        }
        m = next;
        let trace: i128 = (0..n)
            .map(|i| (0..n).map(|l| a[i][l] * m[l][i]).sum::<i128>())
            .sum();
        debug_assert_eq!(trace % k as i128, 0);
        c_prev = -trace / k as i128;
        coeffs.push(c_prev);
    }
    IntPoly(coeffs)
}

fn eval(p: &[f64], x: f64) -> f64 {
    p.iter().fold(0.0, |acc, &c| acc * x + c)
}

fn eval_scale(p: &[f64], x: f64) -> f64 {
    p.iter().fold(0.0, |acc, &c| acc * x.abs() + c.abs())
}

fn derivative(p: &[f64]) -> Vec<f64> {
    let d = p.len() - 1;
    p[..d]
        .iter()
        .enumerate()
        .map(|(i, &c)| c * (d - i) as f64)
        .collect()
}

fn bisect(p: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = eval(p, lo);
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = eval(p, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    let x = 0.5 * (lo + hi);
    polish(p, x, lo, hi)
}

fn polish(p: &[f64], mut x: f64, lo: f64, hi: f64) -> f64 {
    let dp = derivative(p);
    for _ in 0..3 {
        let d = eval(&dp, x);
        if d == 0.0 {
            break;
        }
        let next = x - eval(p, x) / d;
        if !(lo..=hi).contains(&next) {
            break;
        }
        x = next;
    }
    x
}

/// All real roots, ascending, with multiple roots reported once.
///
/// The real critical points of `p` (recursively, the roots of `p'`) split
/// the line into pieces on which `p` is monotone; each sign change is
/// bisected and polished with Newton steps.
pub fn real_roots(p: &[f64]) -> Vec<f64> {
    let start = p.iter().position(|&c| c != 0.0).unwrap_or(p.len());
    let p = &p[start..];
    if p.len() <= 1 {
        return Vec::new();
    }
    if p.len() == 2 {
        return vec![-p[1] / p[0]];
    }
    let bound = 1.0 + p[1..].iter().map(|c| (c / p[0]).abs()).fold(0.0, f64::max);
    let mut points = vec![-bound];
    points.extend(
        real_roots(&derivative(p))
            .into_iter()
            .filter(|c| c.abs() < bound),
    );
    points.push(bound);
    let is_zero = |x: f64| eval(p, x).abs() <= 1e-12 * eval_scale(p, x);
    let mut roots: Vec<f64> = Vec::new();
    let push = |r: f64, roots: &mut Vec<f64>| {
        if roots
            .last()
            .is_none_or(|&l| (r - l).abs() > 1e-9 * r.abs().max(1.0))
        {
            roots.push(r);
        }
    };
    for w in points.windows(2) {
        let (l, r) = (w[0], w[1]);
        if is_zero(l) {
            push(l, &mut roots);
            continue;
        }
        if is_zero(r) {
            continue;
        }
        if (eval(p, l) < 0.0) != (eval(p, r) < 0.0) {
            push(bisect(p, l, r), &mut roots);
        }
    }
    if let Some(&last) = points.last() {
        if is_zero(last) {
            push(last, &mut roots);
        }
    }
    roots
}

/// Largest real root of a polynomial given by descending coefficients.
pub fn largest_real_root(coeffs: &[f64]) -> Result<f64> {
    real_roots(coeffs).last().copied().ok_or(Error::NoRealRoot)
}

/// `q(x) = x³ + (3−n)x² + (9−5n)x − 3n + 5`, whose largest root is
/// λ₁(D(K1 ∨ (K_{n−2} ∪ K1))).
pub fn pendant_clique_cubic(n: usize) -> IntPoly {
    let n = n as i128;
    IntPoly(vec![1, 3 - n, 9 - 5 * n, 5 - 3 * n])
}

/// The extremal graph families. All have a nonempty universal core `K_s`
/// joined to a disjoint union of cliques and isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// `K1 ∨ (K_{n−2} ∪ K1)`.
    PendantClique { n: usize },
    /// `K1 ∨ (K_{n−3} ∪ 2K1)`.
    TwoPendantClique { n: usize },
    /// `K_s ∨ (K_{n−2s−1} ∪ (s+1)K1)`.
    CoreOdd { n: usize, s: usize },
    /// `K_s ∨ (K_{n−2s} ∪ sK1)`.
    CoreEven { n: usize, s: usize },
    /// `S_{n,k} = K_k ∨ (n−k)K1`.
    SplitStar { n: usize, k: usize },
    /// `K_s ∨ (K_{n1} ∪ … ∪ K_{np} ∪ iK1)`.
    General {
        s: usize,
        parts: Vec<usize>,
        isolated: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum CellKind {
    Core,
    Clique,
    Independent,
}

/// Family normalised to core size, clique parts of size ≥ 2, and the
/// number of isolated vertices (parts of size 1 included).
struct Shape {
    s: usize,
    cliques: Vec<usize>,
    isolated: usize,
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::PendantClique { n }
            | FamilySpec::TwoPendantClique { n }
            | FamilySpec::CoreOdd { n, .. }
            | FamilySpec::CoreEven { n, .. }
            | FamilySpec::SplitStar { n, .. } => n,
            FamilySpec::General {
                s,
                ref parts,
                isolated,
            } => s + parts.iter().sum::<usize>() + isolated,
        }
    }

    fn invalid(&self, why: &str) -> Error {
        Error::InvalidSpec(format!("{self}: {why}"))
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::PendantClique { n } if n < 2 => Err(self.invalid("needs n >= 2")),
            FamilySpec::TwoPendantClique { n } if n < 3 => Err(self.invalid("needs n >= 3")),
            FamilySpec::CoreOdd { n, s } if s < 1 || n < 2 * s + 1 => {
                Err(self.invalid("needs s >= 1 and n >= 2s+1"))
            }
            FamilySpec::CoreEven { n, s } if s < 1 || n < 2 * s => {
                Err(self.invalid("needs s >= 1 and n >= 2s"))
            }
            FamilySpec::SplitStar { n, k } if k < 1 || k > n => {
                Err(self.invalid("needs 1 <= k <= n"))
            }
            FamilySpec::General { s, ref parts, .. } if s < 1 || parts.contains(&0) => {
                Err(self.invalid("needs s >= 1 and positive part sizes"))
            }
            _ if self.order() > crate::graph::MAX_ORDER => Err(Error::OrderTooLarge {
                n: self.order(),
                max: crate::graph::MAX_ORDER,
            }),
            _ => Ok(()),
        }
    }

    fn shape(&self) -> Shape {
        let (s, parts, isolated) = match *self {
            FamilySpec::PendantClique { n } => (1, vec![n - 2], 1),
            FamilySpec::TwoPendantClique { n } => (1, vec![n - 3], 2),
            FamilySpec::CoreOdd { n, s } => (s, vec![n - 2 * s - 1], s + 1),
            FamilySpec::CoreEven { n, s } => (s, vec![n - 2 * s], s),
            FamilySpec::SplitStar { n, k } => (k, vec![], n - k),
            FamilySpec::General {
                s,
                ref parts,
                isolated,
            } => (s, parts.clone(), isolated),
        };
        let singles = parts.iter().filter(|&&p| p == 1).count();
        Shape {
            s,
            cliques: parts.into_iter().filter(|&p| p >= 2).collect(),
            isolated: isolated + singles,
        }
    }

    /// Vertices: core `0..s`, then each clique part, then isolated vertices.
    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let shape = self.shape();
        let mut rest = Graph::empty(0)?;
        for &c in &shape.cliques {
            rest = rest.disjoint_union(&Graph::complete(c)?)?;
        }
        rest = rest.disjoint_union(&Graph::empty(shape.isolated)?)?;
        Graph::complete(shape.s)?.join(&rest)
    }

    /// Cells with their kinds, in the order used by [`Self::quotient`].
    fn cells(&self) -> Vec<(CellKind, Vec<usize>)> {
        let shape = self.shape();
        let mut cells = vec![(CellKind::Core, (0..shape.s).collect::<Vec<_>>())];
        let mut next = shape.s;
        for &c in &shape.cliques {
            cells.push((CellKind::Clique, (next..next + c).collect()));
            next += c;
        }
        if shape.isolated > 0 {
            cells.push((
                CellKind::Independent,
                (next..next + shape.isolated).collect(),
            ));
        }
        // the core-first families list the big clique before the core
        if matches!(
            self,
            FamilySpec::CoreOdd { .. } | FamilySpec::CoreEven { .. }
        ) && cells.len() == 3
        {
            cells.swap(0, 1);
        }
        cells
    }

    pub fn natural_partition(&self) -> Result<Partition> {
        self.validate()?;
        Partition::new(
            self.cells().into_iter().map(|(_, c)| c).collect(),
            self.order(),
        )
    }

    /// Equitable quotient of `D(G)` under the natural partition, written
    /// down from the cell sizes alone.
    pub fn quotient(&self) -> Result<Vec<Vec<i64>>> {
        self.validate()?;
        let cells = self.cells();
        let within = |k: CellKind| if k == CellKind::Independent { 2 } else { 1 };
        let between = |a: CellKind, b: CellKind| {
            if a == CellKind::Core || b == CellKind::Core {
                1
            } else {
                2
            }
        };
        Ok(cells
            .iter()
            .enumerate()
            .map(|(i, (ka, _))| {
                cells
                    .iter()
                    .enumerate()
                    .map(|(j, (kb, cb))| {
                        let size = cb.len() as i64;
                        if i == j {
                            (size - 1) * within(*ka)
                        } else {
                            size * between(*ka, *kb)
                        }
                    })
                    .collect()
            })
            .collect())
    }

    pub fn family_quotient(&self) -> Result<QuotientMatrix> {
        Ok(QuotientMatrix {
            b: self
                .quotient()?
                .iter()
                .map(|r| r.iter().map(|&x| x as f64).collect())
                .collect(),
            equitable: true,
        })
    }

    pub fn characteristic_polynomial(&self) -> Result<IntPoly> {
        Ok(characteristic_polynomial(&self.quotient()?))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::PendantClique { n } => write!(f, "K1 v (K{} u K1)", n.saturating_sub(2)),
            FamilySpec::TwoPendantClique { n } => {
                write!(f, "K1 v (K{} u 2K1)", n.saturating_sub(3))
            }
            FamilySpec::CoreOdd { n, s } => {
                write!(f, "K{s} v (K{} u {}K1)", n.saturating_sub(2 * s + 1), s + 1)
            }
            FamilySpec::CoreEven { n, s } => {
                write!(f, "K{s} v (K{} u {s}K1)", n.saturating_sub(2 * s))
            }
            FamilySpec::SplitStar { n, k } => write!(f, "S({n},{k})"),
            FamilySpec::General { s, parts, isolated } => {
                write!(f, "K{s} v (")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " u ")?;
                    }
                    write!(f, "K{p}")?;
                }
                if *isolated > 0 {
                    if !parts.is_empty() {
                        write!(f, " u ")?;
                    }
                    write!(f, "{isolated}K1")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Where a [`ClosedForm`] value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedFormRoute {
    /// Explicit square-root expression.
    Radical,
    /// Largest root of the published cubic `q`.
    Cubic,
    /// No published form: largest root of the quotient's characteristic polynomial.
    QuotientNumeric,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedForm {
    pub value: f64,
    pub route: ClosedFormRoute,
}

/// λ₁(D(G)) of a family member without touching the graph.
pub fn closed_form_lambda1(spec: &FamilySpec) -> Result<ClosedForm> {
    spec.validate()?;
    let radical = |value| ClosedForm {
        value,
        route: ClosedFormRoute::Radical,
    };
    match *spec {
        FamilySpec::SplitStar { n, k } if n % 2 == 1 && n >= 3 && k == (n - 1) / 2 => {
            let n = n as f64;
            Ok(radical(
                0.25 * ((5.0 * n * n + 2.0 * n - 3.0).sqrt() + 3.0 * n - 5.0),
            ))
        }
        FamilySpec::SplitStar { n, k } if n % 2 == 0 && k == n / 2 => {
            let n = n as f64;
            Ok(radical(
                0.25 * ((5.0 * n * n - 4.0 * n + 4.0).sqrt() + 3.0 * n - 6.0),
            ))
        }
        FamilySpec::PendantClique { n } => Ok(ClosedForm {
            value: pendant_clique_cubic(n).largest_real_root()?,
            route: ClosedFormRoute::Cubic,
        }),
        _ => Ok(ClosedForm {
            value: spec.characteristic_polynomial()?.largest_real_root()?,
            route: ClosedFormRoute::QuotientNumeric,
        }),
    }
}
