//! Distance matrices, the Wiener index and the distance spectral radius.

use std::cmp::Ordering;
use std::fmt;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default residual tolerance of the eigensolver, relative to λ₁.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Default tolerance for comparing spectral radii.
pub const DEFAULT_EPS: f64 = 1e-9;
pub const DEFAULT_MAX_ITERATIONS: usize = 1_000_000;

/// Shortest-path hop counts of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Transmissions (row sums).
    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.n)
            .map(|u| self.row(u).iter().map(|&x| x as u64).sum())
            .collect()
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    pub fn to_dense(&self) -> DenseMatrix {
        DenseMatrix {
            n: self.n,
            data: self.d.iter().map(|&x| x as f64).collect(),
        }
    }
}

/// Row-major square matrix of reals.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::OutOfRange {
                what: "matrix",
                detail: "rows must all have length equal to the row count".into(),
            });
        }
        Ok(DenseMatrix {
            n,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    fn mul_vec(&self, x: &[f64], out: &mut [f64]) {
        for (i, o) in out.iter_mut().enumerate() {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            *o = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }

    fn is_symmetric_nonnegative(&self) -> bool {
        (0..self.n)
            .all(|i| (0..self.n).all(|j| self.get(i, j) >= 0.0 && self.get(i, j) == self.get(j, i)))
    }

    fn is_irreducible(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, s) in seen.iter_mut().enumerate() {
                if !*s && self.get(i, j) > 0.0 {
                    *s = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// How an [`Eigenpair`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Solver {
    PowerIteration,
    JacobiFallback,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Eigenpair {
    pub lambda1: f64,
    /// Positive Perron vector of unit 2-norm.
    pub vector: Vec<f64>,
    /// `‖Mx − λ₁x‖₂`.
    pub residual: f64,
    pub iterations: usize,
    pub solver: Solver,
}

#[derive(Clone, Copy, Debug)]
pub struct SolverConfig {
    pub tol: f64,
    pub max_iterations: usize,
    /// Switch to full diagonalisation after this many power steps.
    pub fallback_after: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self::with_tol(DEFAULT_TOL)
    }
}

impl SolverConfig {
    pub fn with_tol(tol: f64) -> Self {
        SolverConfig {
            tol,
            max_iterations: DEFAULT_MAX_ITERATIONS,
            fallback_after: DEFAULT_MAX_ITERATIONS / 2,
        }
    }
}

/// BFS from every vertex.
pub fn distance_matrix(g: &Graph) -> Result<DistanceMatrix> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let mut d = vec![0u32; n * n];
    let all = VertexSet::full(n).0;
    for src in 0..n {
        let mut seen = 1u64 << src;
        let mut frontier = seen;
        let mut dist = 0;
        while frontier != 0 {
            dist += 1;
            let mut next = 0u64;
            for v in VertexSet(frontier).iter() {
                next |= g.neighbors(v).0;
            }
            next &= all & !seen;
            for v in VertexSet(next).iter() {
                d[src * n + v] = dist;
            }
            seen |= next;
            frontier = next;
        }
    }
    Ok(DistanceMatrix { n, d })
}

/// Sum of distances over unordered pairs.
pub fn wiener(g: &Graph) -> Result<u64> {
    let dm = distance_matrix(g)?;
    Ok(dm.row_sums().iter().sum::<u64>() / 2)
}

/// `2W(G)/n`, the Rayleigh quotient of D(G) at the all-ones vector.
pub fn rayleigh_lower_bound(g: &Graph) -> Result<f64> {
    Ok(2.0 * wiener(g)? as f64 / g.order() as f64)
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn residual(m: &DenseMatrix, x: &[f64], lambda: f64) -> f64 {
    let mut y = vec![0.0; x.len()];
    m.mul_vec(x, &mut y);
    y.iter()
        .zip(x)
        .map(|(a, b)| (a - lambda * b).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Dominant eigenpair of a symmetric nonnegative irreducible matrix.
///
/// Power iteration from the all-ones vector with Rayleigh-quotient
/// estimates; stops once `‖Mx − λx‖ ≤ tol·λ`. If that has not happened
/// after `fallback_after` steps the full matrix is diagonalised instead.
pub fn dominant_eigenpair(m: &DenseMatrix, config: SolverConfig) -> Result<Eigenpair> {
    if config.tol.is_nan() || config.tol <= 0.0 {
        return Err(Error::OutOfRange {
            what: "tolerance",
            detail: format!("{} is not positive", config.tol),
        });
    }
    if m.n == 0 {
        return Err(Error::OutOfRange {
            what: "matrix",
            detail: "empty matrix".into(),
        });
    }
    if !m.is_symmetric_nonnegative() || !m.is_irreducible() {
        return Err(Error::OutOfRange {
            what: "matrix",
            detail: "must be symmetric, nonnegative and irreducible".into(),
        });
    }
    let n = m.n;
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut lambda = 0.0;
    let mut res = f64::INFINITY;
    let mut iterations = 0;
    while iterations < config.max_iterations.min(config.fallback_after.max(1)) {
        iterations += 1;
        m.mul_vec(&x, &mut y);
        lambda = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        res = y
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - lambda * b).powi(2))
            .sum::<f64>()
            .sqrt();
        if res <= config.tol * lambda.abs() || res == 0.0 {
            return Ok(Eigenpair {
                lambda1: lambda,
                vector: x,
                residual: res,
                iterations,
                solver: Solver::PowerIteration,
            });
        }
        let ny = norm(&y);
        if ny == 0.0 {
            break;
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / ny;
        }
    }
    if config.fallback_after >= config.max_iterations {
        return Err(Error::MaxIterations {
            lambda1: lambda,
            residual: res,
            iterations,
        });
    }
    jacobi_fallback(m, config, iterations)
}

fn jacobi_fallback(m: &DenseMatrix, config: SolverConfig, iterations: usize) -> Result<Eigenpair> {
    let mat = DMatrix::from_row_slice(m.n, m.n, &m.data);
    let eig = SymmetricEigen::new(mat);
    let (idx, &lambda) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("nonempty spectrum");
    let col = eig.eigenvectors.column(idx);
    let sign = if col.sum() < 0.0 { -1.0 } else { 1.0 };
    let mut vector: Vec<f64> = col.iter().map(|v| v * sign).collect();
    let nv = norm(&vector);
    vector.iter_mut().for_each(|v| *v /= nv);
    let res = residual(m, &vector, lambda);
    if res > config.tol * lambda.abs() {
        return Err(Error::MaxIterations {
            lambda1: lambda,
            residual: res,
            iterations,
        });
    }
    Ok(Eigenpair {
        lambda1: lambda,
        vector,
        residual: res,
        iterations,
        solver: Solver::JacobiFallback,
    })
}

/// λ₁(D(G)) with its Perron vector.
pub fn distance_spectral_radius(g: &Graph, config: SolverConfig) -> Result<Eigenpair> {
    if g.order() < 2 {
        return Err(Error::OutOfRange {
            what: "order",
            detail: "distance spectral radius needs n >= 2".into(),
        });
    }
    dominant_eigenpair(&distance_matrix(g)?.to_dense(), config)
}

/// Shorthand for [`distance_spectral_radius`] at the default tolerance.
pub fn lambda1(g: &Graph) -> Result<f64> {
    Ok(distance_spectral_radius(g, SolverConfig::default())?.lambda1)
}

/// Three-way outcome of comparing two reals at tolerance ε.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    Below,
    Equal,
    Above,
}

impl Comparison {
    pub fn of(value: f64, reference: f64, eps: f64) -> Self {
        if (value - reference).abs() <= eps {
            Comparison::Equal
        } else if value < reference {
            Comparison::Below
        } else {
            Comparison::Above
        }
    }

    pub fn as_ordering(self) -> Ordering {
        match self {
            Comparison::Below => Ordering::Less,
            Comparison::Equal => Ordering::Equal,
            Comparison::Above => Ordering::Greater,
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Below => "below",
            Comparison::Equal => "equal",
            Comparison::Above => "above",
        })
    }
}
