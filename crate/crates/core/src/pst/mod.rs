//! Perfect state transfer: certificates, minimal times and fidelity.

mod evolution;
mod timing;

use std::f64::consts::PI;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::spectral::{strongly_cospectral, SpectralError, Tolerances};
use crate::scalar::Sign;

pub use evolution::{evolve_fidelity, fidelity_scan, ScanResult, TransferAmplitude};
pub use timing::min_pst_time;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PstError {
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("{thetas} eigenvalues but {sigmas} signs")]
    InconsistentInput { thetas: usize, sigmas: usize },
    #[error("scan needs t_max > 0 and at least one step (got t_max = {t_max}, steps = {steps})")]
    InvalidScan { t_max: f64, steps: usize },
    #[error("certified transfer time {time} reaches fidelity only {fidelity}")]
    Verification { time: f64, fidelity: f64 },
}

impl From<GraphError> for PstError {
    fn from(e: GraphError) -> Self {
        PstError::Spectral(e.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PstStatus {
    Success,
    Fail,
}

/// First condition of the characterization that fails, in checking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureReason {
    NotStronglyCospectral,
    NoCommonAlpha,
    DeltaNotConsistent,
    ParityViolation,
    NoAdmissibleG,
}

impl FailureReason {
    pub fn as_str(self) -> &'static str {
        match self {
            FailureReason::NotStronglyCospectral => "not_strongly_cospectral",
            FailureReason::NoCommonAlpha => "no_common_alpha",
            FailureReason::DeltaNotConsistent => "delta_not_consistent",
            FailureReason::ParityViolation => "parity_violation",
            FailureReason::NoAdmissibleG => "no_admissible_g",
        }
    }
}

/// Outcome of the perfect-state-transfer test for a vertex pair. Support
/// eigenvalues are `theta_r = (alpha + beta_r sqrt(delta)) / 2`, in
/// descending order, with `sigma_0 = +1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PstCertificate {
    pub status: PstStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_reason: Option<FailureReason>,
    pub support: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betas: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigmas: Option<Vec<Sign>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ks: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pst_time: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fidelity_at_time: Option<f64>,
    /// `pi / (g sqrt(delta))`, reported for comparison with `pst_time`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form_time: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form_matches: Option<bool>,
}

impl PstCertificate {
    fn failed(reason: FailureReason, support: Vec<f64>) -> Self {
        Self {
            status: PstStatus::Fail,
            failure_reason: Some(reason),
            support,
            alpha: None,
            delta: None,
            betas: None,
            g: None,
            sigmas: None,
            ks: None,
            pst_time: None,
            fidelity_at_time: None,
            closed_form_time: None,
            closed_form_matches: None,
        }
    }

    pub fn is_success(&self) -> bool {
        self.status == PstStatus::Success
    }
}

/// [`pst_certificate_with`] under default tolerances.
pub fn pst_certificate(g: &Graph, a: usize, b: usize) -> Result<PstCertificate, PstError> {
    pst_certificate_with(g, a, b, &Tolerances::default())
}

/// Decides perfect state transfer between `a` and `b`: strong
/// cospectrality, a common integer `alpha` and square-free `delta` with
/// `theta_r = (alpha + beta_r sqrt(delta)) / 2`, `beta_r = alpha (mod 2)`,
/// and `g = gcd(beta_0 - beta_r)` with `(beta_0 - beta_r) / g` of parity
/// `(1 - sigma_r) / 2`. A success carries the minimal transfer time, checked
/// against the simulated fidelity.
pub fn pst_certificate_with(g: &Graph, a: usize, b: usize, tol: &Tolerances) -> Result<PstCertificate, PstError> {
    let (strong, signature) = strongly_cospectral(g, a, b, tol)?;
    let support = signature.support_eigenvalues();
    if !strong {
        return Ok(PstCertificate::failed(FailureReason::NotStronglyCospectral, support));
    }
    let mut sigmas: Vec<Sign> = signature.sigmas().into_iter().map(|s| s.expect("defined on support")).collect();
    let global = sigmas[0];
    sigmas.iter_mut().for_each(|s| *s = *s * global);

    let fail = |reason| Ok(PstCertificate::failed(reason, support.clone()));

    let Some(alpha) = common_alpha(&support, tol.integrality) else { return fail(FailureReason::NoCommonAlpha) };
    let squares: Vec<i64> = support
        .iter()
        .map(|&theta| {
            let x = 2.0 * theta - alpha as f64;
            (x * x).round() as i64
        })
        .collect();
    let Some((delta, betas)) = split_delta(&support, alpha, &squares) else {
        return fail(FailureReason::DeltaNotConsistent);
    };
    if betas.iter().any(|&beta| (beta - alpha).rem_euclid(2) != 0) {
        return fail(FailureReason::ParityViolation);
    }
    let diffs: Vec<i64> = betas.iter().map(|&beta| betas[0] - beta).collect();
    let Some((gcd, ks)) = admissible_g(&diffs, &sigmas) else { return fail(FailureReason::NoAdmissibleG) };

    let root = (delta as f64).sqrt();
    let lattice_time = 2.0 * PI / (gcd as f64 * root);
    let time = min_pst_time(&support, &sigmas)?.unwrap_or(lattice_time);
    let fidelity = TransferAmplitude::from_graph(g, a, b)?.fidelity(time);
    if fidelity < 1.0 - tol.fidelity {
        return Err(PstError::Verification { time, fidelity });
    }
    let closed = PI / (gcd as f64 * root);
    Ok(PstCertificate {
        status: PstStatus::Success,
        failure_reason: None,
        support,
        alpha: Some(alpha),
        delta: Some(delta),
        betas: Some(betas),
        g: Some(gcd),
        sigmas: Some(sigmas),
        ks: Some(ks),
        pst_time: Some(time),
        fidelity_at_time: Some(fidelity),
        closed_form_time: Some(closed),
        closed_form_matches: Some((closed - time).abs() <= 1e-9 * time),
    })
}

fn near_integer(x: f64, tol: f64) -> Option<i64> {
    let r = x.round();
    ((x - r).abs() <= tol).then_some(r as i64)
}

/// The integer `alpha` of smallest magnitude, drawn from the integral pair
/// sums `theta_r + theta_s`, for which every `(2 theta_r - alpha)^2` is an
/// integer. Integral supports take `alpha = 0`.
fn common_alpha(support: &[f64], tol: f64) -> Option<i64> {
    if support.iter().all(|&theta| near_integer(theta, tol).is_some()) {
        return Some(0);
    }
    let mut candidates: Vec<i64> = Vec::new();
    for (r, &x) in support.iter().enumerate() {
        for &y in &support[r..] {
            if let Some(s) = near_integer(x + y, tol) {
                candidates.push(s);
            }
        }
    }
    candidates.sort_by_key(|&c| (c.abs(), c));
    candidates.dedup();
    candidates.into_iter().find(|&alpha| {
        support.iter().all(|&theta| {
            let x = 2.0 * theta - alpha as f64;
            near_integer(x * x, tol).is_some()
        })
    })
}

/// Square-free `delta` shared by every nonzero `(2 theta_r - alpha)^2`, and
/// the signed `beta_r` with `beta_r^2 delta = (2 theta_r - alpha)^2`.
fn split_delta(support: &[f64], alpha: i64, squares: &[i64]) -> Option<(i64, Vec<i64>)> {
    let mut delta = None;
    for &d in squares.iter().filter(|&&d| d != 0) {
        let kernel = squarefree_kernel(d);
        if delta.replace(kernel).is_some_and(|k| k != kernel) {
            return None;
        }
    }
    let delta = delta.unwrap_or(1);
    let betas = support
        .iter()
        .zip(squares)
        .map(|(&theta, &d)| {
            let q = d / delta;
            let root = integer_sqrt(q)?;
            let sign = if 2.0 * theta - (alpha as f64) < 0.0 { -1 } else { 1 };
            Some(sign * root)
        })
        .collect::<Option<Vec<i64>>>()?;
    Some((delta, betas))
}

/// The largest divisor `d` of `gcd(diffs)` for which every `diffs_r / d`
/// has parity `(1 - sigma_r) / 2`, with the quotients.
fn admissible_g(diffs: &[i64], sigmas: &[Sign]) -> Option<(i64, Vec<i64>)> {
    let gcd = diffs.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if gcd == 0 {
        return None;
    }
    (1..=gcd).rev().filter(|d| gcd % d == 0).find_map(|d| {
        let ks: Vec<i64> = diffs.iter().map(|&x| x / d).collect();
        let ok = ks.iter().zip(sigmas).all(|(&k, &s)| k.rem_euclid(2) == i64::from(s == Sign::Minus));
        ok.then_some((d, ks))
    })
}

pub(crate) fn squarefree_kernel(mut d: i64) -> i64 {
    let mut kernel = 1;
    let mut p = 2;
    while p * p <= d {
        let mut e = 0;
        while d % p == 0 {
            d /= p;
            e += 1;
        }
        if e % 2 == 1 {
            kernel *= p;
        }
        p += 1;
    }
    kernel * d
}

fn integer_sqrt(q: i64) -> Option<i64> {
    let r = (q as f64).sqrt().round() as i64;
    (r * r == q).then_some(r)
}
