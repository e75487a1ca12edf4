use serde::Serialize;

use super::PstError;
use crate::graph::{Graph, GraphError};
use crate::spectral::{decompose, SpectralDecomposition};

const GOLDEN_ITERATIONS: usize = 80;

/// `<b| U(t) |a> = sum_r exp(i t theta_r) <b|E_r|a>` restricted to the
/// eigenvalues with a nonzero projector entry.
#[derive(Debug, Clone)]
pub struct TransferAmplitude {
    terms: Vec<(f64, f64)>,
}

impl TransferAmplitude {
    pub fn new(dec: &SpectralDecomposition<f64>, a: usize, b: usize) -> Self {
        let terms = dec
            .eigenvalues
            .iter()
            .enumerate()
            .map(|(r, &theta)| (theta, dec.entry(r, b, a)))
            .filter(|&(_, w)| w != 0.0)
            .collect();
        Self { terms }
    }

    pub fn from_graph(g: &Graph, a: usize, b: usize) -> Result<Self, PstError> {
        g.check_vertex(a)?;
        g.check_vertex(b)?;
        Ok(Self::new(&decompose::<f64>(g, None)?, a, b))
    }

    /// Real and imaginary parts of the amplitude at time `t`.
    pub fn amplitude(&self, t: f64) -> (f64, f64) {
        self.terms.iter().fold((0.0, 0.0), |(re, im), &(theta, w)| {
            let (s, c) = (t * theta).sin_cos();
            (re + w * c, im + w * s)
        })
    }

    /// `|<b| U(t) |a>|`.
    pub fn fidelity(&self, t: f64) -> f64 {
        let (re, im) = self.amplitude(t);
        re.hypot(im)
    }
}

/// `|<b| exp(itA) |a>|`.
pub fn evolve_fidelity(g: &Graph, a: usize, b: usize, t: f64) -> Result<f64, PstError> {
    Ok(TransferAmplitude::from_graph(g, a, b)?.fidelity(t))
}

/// Best time and fidelity found by [`fidelity_scan`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanResult {
    pub time: f64,
    pub fidelity: f64,
}

/// Maximum of `|<b| U(t) |a>|` over `steps + 1` equally spaced times in
/// `[0, t_max]`, refined by golden-section search between the neighbours of
/// the best grid point.
pub fn fidelity_scan(g: &Graph, a: usize, b: usize, t_max: f64, steps: usize) -> Result<ScanResult, PstError> {
    if a == b {
        return Err(GraphError::SameVertex(a).into());
    }
    if steps == 0 || t_max.is_nan() || t_max <= 0.0 {
        return Err(PstError::InvalidScan { t_max, steps });
    }
    let amp = TransferAmplitude::from_graph(g, a, b)?;
    Ok(scan_amplitude(&amp, t_max, steps))
}

pub(crate) fn scan_amplitude(amp: &TransferAmplitude, t_max: f64, steps: usize) -> ScanResult {
    let h = t_max / steps as f64;
    let (best_k, best) = (0..=steps)
        .map(|k| (k, amp.fidelity(k as f64 * h)))
        .fold((0, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc });
    let lo = (best_k as f64 - 1.0).max(0.0) * h;
    let hi = ((best_k + 1).min(steps)) as f64 * h;
    let refined = golden_max(|t| amp.fidelity(t), lo, hi);
    let refined_value = amp.fidelity(refined);
    if refined_value > best {
        ScanResult { time: refined, fidelity: refined_value }
    } else {
        ScanResult { time: best_k as f64 * h, fidelity: best }
    }
}

fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..GOLDEN_ITERATIONS {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = f(x1);
        }
    }
    0.5 * (lo + hi)
}
