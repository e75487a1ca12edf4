use serde::Serialize;

use super::{contains_value, VerifyError};
use crate::graph::Graph;
use crate::linalg::{eigenvalues_desc, Matrix};

const EQUITABLE_TOLERANCE: f64 = 1e-12;

/// An equitable partition and its symmetrized quotient
/// `B_ij = e_ij / sqrt(|C_i| |C_j|)`, `e_ij` the total weight between cells
/// (internal edges counted twice).
#[derive(Debug, Clone, Serialize)]
pub struct QuotientPartition {
    pub cells: Vec<Vec<usize>>,
    #[serde(serialize_with = "serialize_matrix")]
    pub quotient: Matrix<f64>,
}

fn serialize_matrix<S: serde::Serializer>(m: &Matrix<f64>, s: S) -> Result<S::Ok, S::Error> {
    let rows: Vec<&[f64]> = (0..m.rows()).map(|i| m.row(i)).collect();
    serde::Serialize::serialize(&rows, s)
}

impl QuotientPartition {
    pub fn eigenvalues(&self) -> Vec<f64> {
        eigenvalues_desc(&self.quotient).expect("quotient is symmetric")
    }
}

/// Checks that every vertex of a cell sends the same weight into each cell
/// and returns the symmetrized quotient.
pub fn equitable_quotient(g: &Graph, cells: &[Vec<usize>]) -> Result<QuotientPartition, VerifyError> {
    let n = g.order();
    let mut owner = vec![usize::MAX; n];
    for (i, cell) in cells.iter().enumerate() {
        if cell.is_empty() {
            return Err(VerifyError::InvalidPartition(format!("cell {i} is empty")));
        }
        for &v in cell {
            g.check_vertex(v)?;
            if owner[v] != usize::MAX {
                return Err(VerifyError::InvalidPartition(format!("vertex {v} lies in two cells")));
            }
            owner[v] = i;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(VerifyError::InvalidPartition(format!("vertex {v} lies in no cell")));
    }

    let adj: Matrix<f64> = g.adjacency();
    let k = cells.len();
    let mut degree = vec![vec![0.0; k]; k];
    for (i, cell) in cells.iter().enumerate() {
        for (j, other) in cells.iter().enumerate() {
            let into = |v: usize| other.iter().map(|&u| adj[(v, u)]).sum::<f64>();
            let expected = into(cell[0]);
            for &v in &cell[1..] {
                let found = into(v);
                if (found - expected).abs() > EQUITABLE_TOLERANCE * expected.abs().max(1.0) {
                    return Err(VerifyError::NonEquitable { vertex: v, cell: j, found, expected });
                }
            }
            degree[i][j] = expected;
        }
    }
    let size = |i: usize| cells[i].len() as f64;
    let quotient = Matrix::from_fn(k, k, |i, j| degree[i][j] * size(i) / (size(i) * size(j)).sqrt());
    Ok(QuotientPartition { cells: cells.to_vec(), quotient })
}

/// A `k`-regular graph on `n` vertices: the circulant with offsets
/// `1..=k/2`, plus the antipodal offset when `k` is odd.
pub fn regular_graph(n: usize, k: usize) -> Result<Graph, VerifyError> {
    if n == 0 || k >= n || (k % 2 == 1 && n % 2 == 1) {
        return Err(VerifyError::NoRegularGraph { n, k });
    }
    let mut edges = Vec::new();
    for v in 0..n {
        for d in 1..=k / 2 {
            edges.push((v, (v + d) % n));
        }
        if k % 2 == 1 && v < n / 2 {
            edges.push((v, v + n / 2));
        }
    }
    let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    edges.dedup();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Eigenvalues of the two-cell quotients of a cone over a `k`-regular graph
/// on `n` vertices, with a loop of weight `+1` or `-1` at the apex.
#[derive(Debug, Clone, Serialize)]
pub struct QuotientRelations {
    pub n: usize,
    pub k: usize,
    pub plus: [f64; 2],
    pub minus: [f64; 2],
    /// Quotient matrices equal `[[+-1, sqrt n], [sqrt n, k]]`.
    pub quotients_match: bool,
    /// Quotient eigenvalues occur in the looped cones.
    pub eigenvalues_embedded: bool,
    /// `theta_1 theta_2 = k - n` and `theta_1 + theta_2 = k + 1`.
    pub plus_relations: bool,
    /// `mu_1 mu_2 = -k - n` and `mu_1 + mu_2 = k - 1`.
    pub minus_relations: bool,
    /// `(theta_1 - 1)(theta_2 - 1) = -n`, implied by the two relations above.
    pub shifted_product: bool,
    /// `mu_i = theta_i - 1`; possible only for `k = 0`.
    pub minus_is_shift: bool,
}

impl QuotientRelations {
    pub fn holds(&self) -> bool {
        self.quotients_match
            && self.eigenvalues_embedded
            && self.plus_relations
            && self.minus_relations
            && self.shifted_product
            && self.minus_is_shift == (self.k == 0)
    }
}

/// Builds the cone over a `k`-regular graph on `n` vertices with apex `0`,
/// adds a loop `+-1` at the apex and checks the quotient relations.
pub fn verify_double_star_quotient_relations(k: usize, n: usize) -> Result<QuotientRelations, VerifyError> {
    let base = regular_graph(n, k)?;
    let mut edges: Vec<(usize, usize, f64)> = base.edges().into_iter().map(|(u, v, w)| (u + 1, v + 1, w)).collect();
    edges.extend((1..=n).map(|v| (0, v, 1.0)));
    let cone = Graph::from_weighted_edges(n + 1, &edges, &[])?;
    let cells = vec![vec![0], (1..=n).collect()];
    let tol = 1e-9;
    let (kf, nf) = (k as f64, n as f64);

    let mut quotients_match = true;
    let mut eigenvalues_embedded = true;
    let mut spectra = [[0.0; 2]; 2];
    for (slot, sign) in [1.0, -1.0].into_iter().enumerate() {
        let looped = cone.with_loop(0, sign)?;
        let q = equitable_quotient(&looped, &cells)?;
        let want = Matrix::from_rows(&[vec![sign, nf.sqrt()], vec![nf.sqrt(), kf]])?;
        quotients_match &= q.quotient.max_abs_diff(&want) <= tol;
        let spectrum = eigenvalues_desc(&looped.adjacency::<f64>())?;
        let theta = q.eigenvalues();
        eigenvalues_embedded &= theta.iter().all(|&t| contains_value(&spectrum, t, 1e-8));
        spectra[slot] = [theta[0], theta[1]];
    }
    let [plus, minus] = spectra;
    let close = |x: f64, y: f64| (x - y).abs() <= tol * (1.0 + y.abs());
    Ok(QuotientRelations {
        n,
        k,
        plus,
        minus,
        quotients_match,
        eigenvalues_embedded,
        plus_relations: close(plus[0] * plus[1], kf - nf) && close(plus[0] + plus[1], kf + 1.0),
        minus_relations: close(minus[0] * minus[1], -kf - nf) && close(minus[0] + minus[1], kf - 1.0),
        shifted_product: close((plus[0] - 1.0) * (plus[1] - 1.0), -nf),
        minus_is_shift: close(minus[0], plus[0] - 1.0) && close(minus[1], plus[1] - 1.0),
    })
}
