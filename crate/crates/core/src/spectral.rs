//! Adjacency matrices, spectral radius and Perron vector, full spectra.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const MAX_DENSE_ORDER: usize = 512;
const MAX_ITERATIONS: usize = 2_000_000;

/// (m−1)·A stored exactly as integers, with the scale 1/(m−1) kept apart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricMatrix {
    pub order: usize,
    /// Row-major entries of (m−1)·A: the number of edges holding both i and j.
    pub scaled: Vec<u32>,
    /// The denominator m−1.
    pub scale: u32,
    /// Set when some pair shares more than one edge (non-linear input).
    pub nonlinear: bool,
}

impl SymmetricMatrix {
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.scaled[i * self.order + j]
    }

    /// The real matrix A.
    pub fn to_dmatrix(&self) -> DMatrix<f64> {
        let s = self.scale as f64;
        DMatrix::from_fn(self.order, self.order, |i, j| self.get(i, j) as f64 / s)
    }

    pub fn row_sum_scaled(&self, i: usize) -> u64 {
        self.scaled[i * self.order..(i + 1) * self.order]
            .iter()
            .map(|&x| x as u64)
            .sum()
    }
}

pub fn adjacency_matrix(h: &Hypergraph) -> SymmetricMatrix {
    let n = h.n();
    let mut scaled = vec![0u32; n * n];
    let mut nonlinear = false;
    for e in h.edges() {
        for &i in e {
            for &j in e {
                if i != j {
                    scaled[i * n + j] += 1;
                    nonlinear |= scaled[i * n + j] > 1;
                }
            }
        }
    }
    SymmetricMatrix {
        order: n,
        scaled,
        scale: (h.m() - 1) as u32,
        nonlinear,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub lambda1: f64,
    pub perron_vector: Vec<f64>,
    /// ‖Av − λv‖∞.
    pub residual: f64,
    pub iterations: usize,
}

impl SpectralResult {
    /// Scaled radius (m−1)·λ₁.
    pub fn scaled(&self, m: usize) -> f64 {
        self.lambda1 * (m - 1) as f64
    }
}

/// y = (m−1)·A·x, computed edge-wise: every edge adds (Σ_e x − x_i) to y_i.
fn scaled_matvec(h: &Hypergraph, x: &[f64], y: &mut [f64]) {
    y.iter_mut().for_each(|v| *v = 0.0);
    for e in h.edges() {
        let s: f64 = e.iter().map(|&v| x[v]).sum();
        for &v in e {
            y[v] += s - x[v];
        }
    }
}

/// A·x.
pub fn apply(h: &Hypergraph, x: &[f64]) -> Vec<f64> {
    let mut y = vec![0.0; x.len()];
    scaled_matvec(h, x, &mut y);
    let s = (h.m() - 1) as f64;
    y.iter_mut().for_each(|v| *v /= s);
    y
}

/// Spectral radius and Perron vector of A by shifted power iteration on
/// (m−1)A + cI, c the largest row sum, started from the normalized all-ones
/// vector and stopped once ‖Av − λv‖∞ ≤ tol.
pub fn spectral_radius(h: &Hypergraph, tol: f64) -> Result<SpectralResult> {
    if !(tol > 0.0) {
        return Err(Error::Parameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = h.n();
    let s = (h.m() - 1) as f64;
    let shift = (0..n).map(|v| h.edge_degree(v)).max().unwrap_or(0) as f64 * s;
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for it in 1..=MAX_ITERATIONS {
        scaled_matvec(h, &x, &mut y);
        // Rayleigh quotient of A at x (x is a unit vector).
        let lambda = x.iter().zip(&y).map(|(a, b)| a * b).sum::<f64>() / s;
        residual = x
            .iter()
            .zip(&y)
            .map(|(xi, yi)| (yi / s - lambda * xi).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            let mut v = x;
            if v.iter().sum::<f64>() < 0.0 {
                v.iter_mut().for_each(|c| *c = -*c);
            }
            return Ok(SpectralResult {
                lambda1: lambda,
                perron_vector: v,
                residual,
                iterations: it,
            });
        }
        for (yi, xi) in y.iter_mut().zip(&x) {
            *yi += shift * xi;
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
        residual,
    })
}

/// λ₁ with the default tolerance.
pub fn lambda1(h: &Hypergraph) -> Result<f64> {
    spectral_radius(h, DEFAULT_TOL).map(|r| r.lambda1)
}

/// All eigenvalues of A in ascending order (dense symmetric solver).
pub fn full_spectrum(h: &Hypergraph) -> Result<Vec<f64>> {
    if h.n() > MAX_DENSE_ORDER {
        return Err(Error::SizeCap {
            what: "vertices",
            got: h.n(),
            cap: MAX_DENSE_ORDER,
        });
    }
    Ok(symmetric_eigenvalues(adjacency_matrix(h).to_dmatrix()))
}

pub fn symmetric_eigenvalues(a: DMatrix<f64>) -> Vec<f64> {
    let mut ev: Vec<f64> = SymmetricEigen::new(a).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| a.total_cmp(b));
    ev
}

/// xᵀAx / xᵀx.
pub fn rayleigh_quotient(h: &Hypergraph, x: &[f64]) -> Result<f64> {
    if x.len() != h.n() {
        return Err(Error::Parameter(format!(
            "vector length {} ≠ n = {}",
            x.len(),
            h.n()
        )));
    }
    let xx: f64 = x.iter().map(|v| v * v).sum();
    if xx == 0.0 {
        return Err(Error::Parameter("zero vector".into()));
    }
    let ax = apply(h, x);
    Ok(x.iter().zip(&ax).map(|(a, b)| a * b).sum::<f64>() / xx)
}

/// Greedy multiset containment: every element of `sub` is matched to a
/// distinct element of `sup` within `tol`. Both inputs are sorted first.
pub fn spectrum_contained(sub: &[f64], sup: &[f64], tol: f64) -> bool {
    let mut sup: Vec<f64> = sup.to_vec();
    sup.sort_by(|a, b| a.total_cmp(b));
    let mut used = vec![false; sup.len()];
    let mut sub = sub.to_vec();
    sub.sort_by(|a, b| a.total_cmp(b));
    'outer: for x in sub {
        let mut best: Option<usize> = None;
        for (i, &y) in sup.iter().enumerate() {
            if !used[i]
                && (x - y).abs() <= tol
                && best.is_none_or(|b| (x - y).abs() < (x - sup[b]).abs())
            {
                best = Some(i);
            }
        }
        match best {
            Some(i) => {
                used[i] = true;
                continue 'outer;
            }
            None => return false,
        }
    }
    true
}
