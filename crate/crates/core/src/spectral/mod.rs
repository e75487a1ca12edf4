//! Eigenprojectors, eigenvalue supports and cospectrality.

mod cospectral;
mod neutrino;
mod walk_module;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::linalg::{symmetric_eigen, LinalgError, Matrix};
use crate::poly::PolyError;
use crate::scalar::Real;

pub use cospectral::{
    cospectral, exact_strongly_cospectral, strongly_cospectral, support_signature, SupportEntry,
    SupportSignature,
};
pub use neutrino::{neutrino_residues, projector_entry_numeric, projector_entry_via_neutrino};
pub use walk_module::{walk_module, walk_module_matrix, WalkModule};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{theta} is not an eigenvalue (nearest root at distance {distance:e})")]
    NotARoot { theta: f64, distance: f64 },
    #[error("resolvent entry has a repeated pole at {theta}")]
    NonSimplePole { theta: f64 },
    #[error(
        "exact and numeric strong cospectrality disagree for ({a}, {b}): exact {exact}, numeric {numeric}"
    )]
    Disagreement { a: usize, b: usize, exact: bool, numeric: bool },
}

/// Numeric thresholds used across the spectral and transfer analyses.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Gap below which sorted eigenvalues are merged; `None` means
    /// `1e-9 * max(1, ||A||_inf)`.
    pub grouping: Option<f64>,
    /// `||E_r |a>||` above this puts `theta_r` in the support of `a`.
    pub support: f64,
    /// Allowed `||E_r |a> - sigma E_r |b>||` for a defined sign.
    pub sigma: f64,
    /// Rounding tolerance for recovering integers from eigenvalues.
    pub integrality: f64,
    /// Required `1 - fidelity` at a certified transfer time.
    pub fidelity: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { grouping: None, support: 1e-7, sigma: 1e-7, integrality: 1e-6, fidelity: 1e-9 }
    }
}

/// `A = sum_r theta_r E_r` with distinct eigenvalues in descending order.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition<T> {
    pub eigenvalues: Vec<T>,
    pub multiplicities: Vec<usize>,
    pub projectors: Vec<Matrix<T>>,
    pub grouping_tolerance: T,
}

impl<T: Real> SpectralDecomposition<T> {
    pub fn order(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// Number of distinct eigenvalues.
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// `<a| E_r |b>`.
    pub fn entry(&self, r: usize, a: usize, b: usize) -> T {
        self.projectors[r][(a, b)]
    }

    /// `E_r |a>`.
    pub fn column(&self, r: usize, a: usize) -> Vec<T> {
        self.projectors[r].column(a)
    }

    /// `||E_r |a>||`.
    pub fn support_norm(&self, r: usize, a: usize) -> T {
        self.projectors[r].column(a).iter().map(|&x| x * x).sum::<T>().sqrt()
    }

    /// Indices `r` of eigenvalues in the support of `a`.
    pub fn support_indices(&self, a: usize, threshold: T) -> Vec<usize> {
        (0..self.len()).filter(|&r| self.support_norm(r, a) > threshold).collect()
    }

    /// `sum_r theta_r E_r`.
    pub fn reconstruct(&self) -> Matrix<T> {
        let n = self.order();
        self.projectors
            .iter()
            .zip(&self.eigenvalues)
            .fold(Matrix::zeros(n, n), |acc, (e, &theta)| acc.add(&e.scale(theta)).expect("same shape"))
    }
}

/// Eigendecomposition of the adjacency matrix of `g`.
pub fn decompose<T: Real>(g: &Graph, grouping: Option<f64>) -> Result<SpectralDecomposition<T>, SpectralError> {
    decompose_matrix(&g.adjacency::<T>(), grouping)
}

/// Eigenvalues of a symmetric matrix grouped by single-linkage clustering of
/// the sorted spectrum with gap `grouping`, and the orthogonal projector onto
/// each group's eigenvectors.
pub fn decompose_matrix<T: Real>(a: &Matrix<T>, grouping: Option<f64>) -> Result<SpectralDecomposition<T>, SpectralError> {
    let eig = symmetric_eigen(a)?;
    let n = a.rows();
    let tol = grouping
        .map(T::of)
        .unwrap_or_else(|| (T::of(1e-9)).max(T::epsilon() * T::of(1e3)) * a.norm_inf().max(T::one()));

    let mut groups: Vec<Vec<usize>> = Vec::new();
    for k in 0..n {
        match groups.last_mut() {
            Some(group) if eig.values[*group.last().expect("nonempty")] - eig.values[k] < tol => group.push(k),
            _ => groups.push(vec![k]),
        }
    }

    let mut eigenvalues = Vec::with_capacity(groups.len());
    let mut multiplicities = Vec::with_capacity(groups.len());
    let mut projectors = Vec::with_capacity(groups.len());
    for group in groups {
        let mean = group.iter().map(|&k| eig.values[k]).sum::<T>() / T::of(group.len() as f64);
        let mut e = Matrix::zeros(n, n);
        for &k in &group {
            for i in 0..n {
                let vi = eig.vectors[(i, k)];
                for j in 0..n {
                    e[(i, j)] = e[(i, j)] + vi * eig.vectors[(j, k)];
                }
            }
        }
        eigenvalues.push(mean);
        multiplicities.push(group.len());
        projectors.push(e);
    }
    Ok(SpectralDecomposition { eigenvalues, multiplicities, projectors, grouping_tolerance: tol })
}

/// Eigenvalues in the support of `a`, descending.
pub fn support<T: Real>(dec: &SpectralDecomposition<T>, a: usize, threshold: f64) -> Vec<T> {
    dec.support_indices(a, T::of(threshold)).into_iter().map(|r| dec.eigenvalues[r]).collect()
}
