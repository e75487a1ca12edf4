use serde::Serialize;

use super::{decompose, SpectralDecomposition, SpectralError, Tolerances};
use crate::graph::{Graph, GraphError};
use crate::linalg::Matrix;
use crate::poly::{charpoly, charpoly_deleted, poles_simple, PolyError};
use crate::scalar::{Real, Sign};

/// One distinct eigenvalue as seen from a vertex pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SupportEntry {
    pub eigenvalue: f64,
    pub multiplicity: usize,
    /// `||E_r |a>||`.
    pub norm_a: f64,
    /// `||E_r |b>||`.
    pub norm_b: f64,
    /// `E_r |a> = sigma E_r |b>` when both columns are nonzero and parallel.
    pub sigma: Option<Sign>,
}

impl SupportEntry {
    pub fn in_support_a(&self, threshold: f64) -> bool {
        self.norm_a > threshold
    }

    pub fn in_support_b(&self, threshold: f64) -> bool {
        self.norm_b > threshold
    }
}

/// Per-eigenvalue support and sign data for a vertex pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SupportSignature {
    pub a: usize,
    pub b: usize,
    pub support_threshold: f64,
    pub entries: Vec<SupportEntry>,
    pub strongly_cospectral: bool,
}

impl SupportSignature {
    /// Entries whose eigenvalue lies in the support of `a`.
    pub fn support(&self) -> Vec<&SupportEntry> {
        self.entries.iter().filter(|e| e.in_support_a(self.support_threshold)).collect()
    }

    pub fn support_eigenvalues(&self) -> Vec<f64> {
        self.support().iter().map(|e| e.eigenvalue).collect()
    }

    /// Signs on the support, `None` where undefined.
    pub fn sigmas(&self) -> Vec<Option<Sign>> {
        self.support().iter().map(|e| e.sigma).collect()
    }
}

/// Support and sign data for `(a, b)` read off a decomposition.
pub fn support_signature<T: Real>(dec: &SpectralDecomposition<T>, a: usize, b: usize, tol: &Tolerances) -> SupportSignature {
    let mut strongly = true;
    let entries = (0..dec.len())
        .map(|r| {
            let norm_a = dec.support_norm(r, a).as_f64();
            let norm_b = dec.support_norm(r, b).as_f64();
            let in_a = norm_a > tol.support;
            let in_b = norm_b > tol.support;
            let sigma = if in_a && in_b {
                let s = Sign::from_f64(dec.entry(r, a, b).as_f64());
                let ca = dec.column(r, a);
                let cb = dec.column(r, b);
                let sf = T::of(s.as_f64());
                let gap = ca.iter().zip(&cb).map(|(&x, &y)| (x - sf * y) * (x - sf * y)).sum::<T>().sqrt();
                (gap.as_f64() <= tol.sigma).then_some(s)
            } else {
                None
            };
            if in_a != in_b || (in_a && sigma.is_none()) {
                strongly = false;
            }
            SupportEntry {
                eigenvalue: dec.eigenvalues[r].as_f64(),
                multiplicity: dec.multiplicities[r],
                norm_a,
                norm_b,
                sigma,
            }
        })
        .collect();
    SupportSignature { a, b, support_threshold: tol.support, entries, strongly_cospectral: strongly }
}

/// `G \ a` and `G \ b` are cospectral. Exact for integer weights; otherwise
/// the closed-walk counts `(A^k)_aa` and `(A^k)_bb`, `k < n`, are compared.
pub fn cospectral(g: &Graph, a: usize, b: usize) -> Result<bool, SpectralError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Ok(true);
    }
    if g.is_integer() {
        return Ok(charpoly_deleted(g, &[a])? == charpoly_deleted(g, &[b])?);
    }
    let adj: Matrix<f64> = g.adjacency();
    let mut va = vec![0.0; g.order()];
    let mut vb = vec![0.0; g.order()];
    va[a] = 1.0;
    vb[b] = 1.0;
    for _ in 1..g.order() {
        va = adj.mul_vec(&va);
        vb = adj.mul_vec(&vb);
        let (wa, wb) = (va[a], vb[b]);
        if (wa - wb).abs() > 1e-9 * wa.abs().max(wb.abs()).max(1.0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `phi(G\a) = phi(G\b)` and `phi(G\ab) / phi(G)` has only simple poles.
pub fn exact_strongly_cospectral(g: &Graph, a: usize, b: usize) -> Result<bool, PolyError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(GraphError::SameVertex(a).into());
    }
    if charpoly_deleted(g, &[a])? != charpoly_deleted(g, &[b])? {
        return Ok(false);
    }
    poles_simple(&charpoly_deleted(g, &[a, b])?, &charpoly(g)?)
}

/// Strong cospectrality of `a` and `b` together with its support signature.
/// Integer graphs are decided exactly and cross-checked against the
/// projector test; a disagreement is reported as an error.
pub fn strongly_cospectral(g: &Graph, a: usize, b: usize, tol: &Tolerances) -> Result<(bool, SupportSignature), SpectralError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(GraphError::SameVertex(a).into());
    }
    let dec = decompose::<f64>(g, tol.grouping)?;
    let signature = support_signature(&dec, a, b, tol);
    if g.is_integer() {
        let exact = exact_strongly_cospectral(g, a, b)?;
        if exact != signature.strongly_cospectral {
            return Err(SpectralError::Disagreement { a, b, exact, numeric: signature.strongly_cospectral });
        }
    }
    Ok((signature.strongly_cospectral, signature))
}
