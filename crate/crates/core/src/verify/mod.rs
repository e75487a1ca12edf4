//! Verification suites: eigenvalue inequalities, equitable quotients,
//! support correspondences across bridges and the exhaustive transfer search.

mod correspondence;
mod interlacing;
mod quotient;
mod search;
pub mod suites;

use thiserror::Error;

use crate::graph::GraphError;
use crate::linalg::LinalgError;
use crate::poly::PolyError;
use crate::pst::PstError;
use crate::spectral::SpectralError;

pub use correspondence::{
    verify_support_correspondence_p2, verify_support_correspondence_p3, CorrespondenceReport,
};
pub use interlacing::{check_cauchy, check_cauchy_deletion, check_kyfan, check_rank_one_monotone, check_weyl};
pub use quotient::{
    equitable_quotient, regular_graph, verify_double_star_quotient_relations, QuotientPartition,
    QuotientRelations,
};
pub use search::{search_no_pst, Bridge, GraphSource, SearchOptions, SearchReport, SearchSuccess};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Pst(#[from] PstError),
    #[error("columns are not orthonormal (|S^T S - I| = {deviation:e})")]
    NotIsometry { deviation: f64 },
    #[error("cells do not partition the vertex set: {0}")]
    InvalidPartition(String),
    #[error("partition is not equitable: vertex {vertex} has {found} neighbours in cell {cell}, cell-mates have {expected}")]
    NonEquitable { vertex: usize, cell: usize, found: f64, expected: f64 },
    #[error("vertices are not walk equivalent")]
    NotWalkEquivalent,
    #[error("composed vertices are not strongly cospectral")]
    NotStronglyCospectral,
    #[error("no {k}-regular graph on {n} vertices")]
    NoRegularGraph { n: usize, k: usize },
    #[error("search found a certified transfer that the fidelity scan does not confirm ({fidelity})")]
    UnconfirmedTransfer { fidelity: f64 },
}

/// Sorted lists agree entrywise within `tol`.
pub(crate) fn same_values(x: &[f64], y: &[f64], tol: f64) -> bool {
    let mut x = x.to_vec();
    let mut y = y.to_vec();
    x.sort_by(f64::total_cmp);
    y.sort_by(f64::total_cmp);
    x.len() == y.len() && x.iter().zip(&y).all(|(p, q)| (p - q).abs() <= tol)
}

pub(crate) fn contains_value(xs: &[f64], v: f64, tol: f64) -> bool {
    xs.iter().any(|x| (x - v).abs() <= tol)
}
