//! Real-root isolation for real-rooted integer polynomials.
//!
//! The roots of the derivative split the line into intervals that each hold
//! at most one root of a squarefree polynomial; every sign change is then
//! refined by bisection with exact sign evaluation.

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use super::{IntPoly, PolyError};

const MAX_BISECTIONS: usize = 200;

impl IntPoly {
    /// Distinct real roots, ascending. Errors when the polynomial has
    /// non-real roots (characteristic polynomials of symmetric matrices
    /// never do). The zero polynomial has no isolated roots.
    pub fn real_roots(&self) -> Result<Vec<f64>, PolyError> {
        if self.is_zero() {
            return Ok(Vec::new());
        }
        let q = self.squarefree_part();
        let roots = squarefree_roots(&q);
        let degree = q.degree().unwrap_or(0);
        if roots.len() != degree {
            return Err(PolyError::NotRealRooted { degree, found: roots.len() });
        }
        Ok(roots)
    }

    /// Cauchy bound: every root has absolute value below this.
    pub fn root_bound(&self) -> f64 {
        let Some(lc) = self.leading() else { return 0.0 };
        let lc = BigRational::from_integer(lc.abs());
        let max = self.coeffs()[..self.coeffs().len() - 1]
            .iter()
            .map(|c| BigRational::from_integer(c.abs()) / &lc)
            .max()
            .unwrap_or_default();
        1.0 + max.to_f64().unwrap_or(f64::MAX)
    }
}

fn squarefree_roots(q: &IntPoly) -> Vec<f64> {
    match q.degree() {
        None | Some(0) => Vec::new(),
        Some(1) => {
            let r = BigRational::new(-q.coeff(0), q.coeff(1));
            vec![r.to_f64().unwrap_or(f64::NAN)]
        }
        Some(_) => {
            let crit = squarefree_roots(&q.derivative().squarefree_part());
            let bound = q.root_bound();
            let mut fences = Vec::with_capacity(crit.len() + 2);
            fences.push(-bound);
            fences.extend(crit.into_iter().filter(|c| c.abs() < bound));
            fences.push(bound);
            let mut roots = Vec::new();
            for w in fences.windows(2) {
                if let Some(r) = bisect(q, w[0], w[1]) {
                    if roots.last().is_none_or(|&last: &f64| r > last) {
                        roots.push(r);
                    }
                }
            }
            roots
        }
    }
}

fn bisect(q: &IntPoly, mut lo: f64, mut hi: f64) -> Option<f64> {
    let slo = q.sign_at(lo);
    let shi = q.sign_at(hi);
    if slo == 0 {
        return Some(lo);
    }
    if shi == 0 {
        return Some(hi);
    }
    if slo == shi {
        return None;
    }
    for _ in 0..MAX_BISECTIONS {
        // prefer an integer near the middle, so integral roots come out exact
        let half = 0.5 * (lo + hi);
        let whole = half.round();
        let mid = if whole > lo && whole < hi && (whole - half).abs() <= 0.25 * (hi - lo) { whole } else { half };
        if mid <= lo || mid >= hi {
            break;
        }
        match q.sign_at(mid) {
            0 => return Some(mid),
            s if s == slo => lo = mid,
            _ => hi = mid,
        }
    }
    Some(0.5 * (lo + hi))
}
