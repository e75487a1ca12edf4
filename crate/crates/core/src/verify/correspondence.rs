use serde::Serialize;

use super::{contains_value, same_values, VerifyError};
use crate::graph::{compose_bridge, CompositionSpec, Graph};
use crate::linalg::eigenvalues_desc;
use crate::poly::{
    bridge_charpoly_p2, bridge_charpoly_p3, charpoly, charpoly_deleted, loop_adjusted_charpoly,
    pendant_sqrt2_charpoly, walk_equivalent, IntPoly,
};
use crate::scalar::Sign;
use crate::spectral::{decompose, strongly_cospectral, support, Tolerances};

const MATCH_TOLERANCE: f64 = 1e-7;

/// Outcome of one support-correspondence check. Each flag is one clause.
#[derive(Debug, Clone, Serialize)]
pub struct CorrespondenceReport {
    /// Eigenvalues of the composed graph with `E|a> = +E|b> != 0`.
    pub plus: Vec<f64>,
    /// Eigenvalues with `E|a> = -E|b> != 0`.
    pub minus: Vec<f64>,
    /// Eigenvalues outside the support of `a` and `b`.
    pub leftover: Vec<f64>,
    pub plus_matches: bool,
    pub minus_matches: bool,
    pub roots_match: bool,
    pub leftover_accounted: bool,
    pub factorization_holds: bool,
    pub spectrum_matches: bool,
}

impl CorrespondenceReport {
    pub fn holds(&self) -> bool {
        self.plus_matches
            && self.minus_matches
            && self.roots_match
            && self.leftover_accounted
            && self.factorization_holds
            && self.spectrum_matches
    }
}

struct Side {
    phi: IntPoly,
    phi_deleted: IntPoly,
}

fn side(y: &Graph, v: usize) -> Result<Side, VerifyError> {
    y.check_vertex(v)?;
    Ok(Side { phi: charpoly(y)?, phi_deleted: charpoly_deleted(y, &[v])? })
}

/// Support of `v` in `g` and the remaining eigenvalues.
fn split_support(g: &Graph, v: usize, tol: &Tolerances) -> Result<(Vec<f64>, Vec<f64>), VerifyError> {
    let dec = decompose::<f64>(g, tol.grouping)?;
    let inside = support(&dec, v, tol.support);
    let outside = dec.eigenvalues.iter().copied().filter(|&t| !contains_value(&inside, t, 0.0)).collect();
    Ok((inside, outside))
}

fn roots_cover(values: &[f64], p: &IntPoly) -> Result<bool, VerifyError> {
    let roots = p.real_roots()?;
    Ok(values.iter().all(|&v| contains_value(&roots, v, MATCH_TOLERANCE)))
}

struct Composed {
    graph: Graph,
    plus: Vec<f64>,
    minus: Vec<f64>,
    leftover: Vec<f64>,
}

fn compose_and_split(y1: &Graph, a: usize, y2: &Graph, b: usize, path_vertices: usize, tol: &Tolerances) -> Result<Composed, VerifyError> {
    let z = compose_bridge(&CompositionSpec { y1, a, y2, b, bridge_vertices: path_vertices })?;
    let (strong, signature) = strongly_cospectral(&z.graph, z.a, z.b, tol)?;
    if !strong {
        return Err(VerifyError::NotStronglyCospectral);
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    let mut leftover = Vec::new();
    for e in &signature.entries {
        match e.sigma {
            Some(Sign::Plus) => plus.push(e.eigenvalue),
            Some(Sign::Minus) => minus.push(e.eigenvalue),
            None => leftover.push(e.eigenvalue),
        }
    }
    Ok(Composed { graph: z.graph, plus, minus, leftover })
}

/// Joins `(Y1, a)` and `(Y2, b)` by an edge and checks that the eigenvalues
/// with `E|a> = +-E|b>` are exactly the support of `a` in `Y1 +- |a><a|` and
/// of `b` in `Y2 +- |b><b|`, that the remaining eigenvalues are non-support
/// eigenvalues of the looped graphs, and that
/// `phi(Z) = (phi(Y1) - phi(Y1\a)) (phi(Y2) + phi(Y2\b))`.
pub fn verify_support_correspondence_p2(y1: &Graph, a: usize, y2: &Graph, b: usize) -> Result<CorrespondenceReport, VerifyError> {
    let tol = Tolerances::default();
    let (s1, s2) = (side(y1, a)?, side(y2, b)?);
    if !walk_equivalent(&s1.phi_deleted, &s1.phi, &s2.phi_deleted, &s2.phi) {
        return Err(VerifyError::NotWalkEquivalent);
    }
    let z = compose_and_split(y1, a, y2, b, 2, &tol)?;

    let mut plus_matches = true;
    let mut minus_matches = true;
    let mut roots_match = true;
    let mut outside_loops: [Vec<f64>; 2] = [Vec::new(), Vec::new()];
    for (slot, sign) in [Sign::Plus, Sign::Minus].into_iter().enumerate() {
        let (in1, out1) = split_support(&y1.with_loop(a, sign.as_f64())?, a, &tol)?;
        let (in2, out2) = split_support(&y2.with_loop(b, sign.as_f64())?, b, &tol)?;
        let target = if sign == Sign::Plus { &z.plus } else { &z.minus };
        let ok = same_values(target, &in1, MATCH_TOLERANCE) && same_values(target, &in2, MATCH_TOLERANCE);
        if sign == Sign::Plus {
            plus_matches = ok;
        } else {
            minus_matches = ok;
        }
        roots_match &= roots_cover(target, &loop_adjusted_charpoly(&s1.phi, &s1.phi_deleted, sign))?;
        roots_match &= roots_cover(target, &loop_adjusted_charpoly(&s2.phi, &s2.phi_deleted, sign))?;
        outside_loops[slot] = out1.into_iter().chain(out2).collect();
    }
    let leftover_accounted = z
        .leftover
        .iter()
        .all(|&t| outside_loops.iter().all(|outs| contains_value(outs, t, MATCH_TOLERANCE)));

    let phi_z = charpoly(&z.graph)?;
    let plus_factor = loop_adjusted_charpoly(&s1.phi, &s1.phi_deleted, Sign::Plus);
    let minus_factor = loop_adjusted_charpoly(&s2.phi, &s2.phi_deleted, Sign::Minus);
    let factorization_holds = phi_z == bridge_charpoly_p2(&s1.phi, &s1.phi_deleted, &s2.phi, &s2.phi_deleted)
        && phi_z == &plus_factor * &minus_factor;

    let mut parts = eigenvalues_desc(&y1.with_loop(a, 1.0)?.adjacency::<f64>())?;
    parts.extend(eigenvalues_desc(&y2.with_loop(b, -1.0)?.adjacency::<f64>())?);
    let spectrum_matches = same_values(&eigenvalues_desc(&z.graph.adjacency::<f64>())?, &parts, MATCH_TOLERANCE);

    Ok(CorrespondenceReport {
        plus: z.plus,
        minus: z.minus,
        leftover: z.leftover,
        plus_matches,
        minus_matches,
        roots_match,
        leftover_accounted,
        factorization_holds,
        spectrum_matches,
    })
}

/// Joins `(Y1, a)` and `(Y2, b)` by a path `a - c - b` and checks that the
/// eigenvalues with `E|a> = +E|b>` are the support of `a` in `Z1` (`Y1` with a
/// pendant attached to `a` by an edge of weight `sqrt 2`) and of `b` in `Z2`,
/// that those with `E|a> = -E|b>` are the support of `a` in `Y1` and of `b`
/// in `Y2`, that every remaining eigenvalue is a non-support eigenvalue of
/// `Y1` or `Y2` or is `0` with `0` an eigenvalue of `Z1` or `Z2`, and that
/// `phi(Z) = phi(Y1) (t phi(Y2) - 2 phi(Y2\b))`.
pub fn verify_support_correspondence_p3(y1: &Graph, a: usize, y2: &Graph, b: usize) -> Result<CorrespondenceReport, VerifyError> {
    let tol = Tolerances::default();
    let (s1, s2) = (side(y1, a)?, side(y2, b)?);
    if !walk_equivalent(&s1.phi_deleted, &s1.phi, &s2.phi_deleted, &s2.phi) {
        return Err(VerifyError::NotWalkEquivalent);
    }
    let z = compose_and_split(y1, a, y2, b, 3, &tol)?;
    let sqrt2 = 2f64.sqrt();
    let z1 = y1.with_pendant(a, sqrt2)?;
    let z2 = y2.with_pendant(b, sqrt2)?;

    let (p1, _) = split_support(&z1, a, &tol)?;
    let (p2, _) = split_support(&z2, b, &tol)?;
    let plus_matches = same_values(&z.plus, &p1, MATCH_TOLERANCE) && same_values(&z.plus, &p2, MATCH_TOLERANCE);
    let (m1, out1) = split_support(y1, a, &tol)?;
    let (m2, out2) = split_support(y2, b, &tol)?;
    let minus_matches = same_values(&z.minus, &m1, MATCH_TOLERANCE) && same_values(&z.minus, &m2, MATCH_TOLERANCE);

    let roots_match = roots_cover(&z.plus, &pendant_sqrt2_charpoly(&s1.phi, &s1.phi_deleted))?
        && roots_cover(&z.plus, &pendant_sqrt2_charpoly(&s2.phi, &s2.phi_deleted))?
        && roots_cover(&z.minus, &s1.phi)?
        && roots_cover(&z.minus, &s2.phi)?;

    let spec_z1 = eigenvalues_desc(&z1.adjacency::<f64>())?;
    let spec_z2 = eigenvalues_desc(&z2.adjacency::<f64>())?;
    let zero_allowed = contains_value(&spec_z1, 0.0, MATCH_TOLERANCE) || contains_value(&spec_z2, 0.0, MATCH_TOLERANCE);
    let leftover_accounted = z.leftover.iter().all(|&t| {
        contains_value(&out1, t, MATCH_TOLERANCE)
            || contains_value(&out2, t, MATCH_TOLERANCE)
            || (zero_allowed && t.abs() <= MATCH_TOLERANCE)
    });

    let phi_z = charpoly(&z.graph)?;
    let factorization_holds = phi_z == bridge_charpoly_p3(&s1.phi, &s1.phi_deleted, &s2.phi, &s2.phi_deleted)
        && phi_z == &s1.phi * &pendant_sqrt2_charpoly(&s2.phi, &s2.phi_deleted);

    let mut parts = eigenvalues_desc(&y1.adjacency::<f64>())?;
    parts.extend(spec_z2);
    let spectrum_matches = same_values(&eigenvalues_desc(&z.graph.adjacency::<f64>())?, &parts, MATCH_TOLERANCE);

    Ok(CorrespondenceReport {
        plus: z.plus,
        minus: z.minus,
        leftover: z.leftover,
        plus_matches,
        minus_matches,
        roots_match,
        leftover_accounted,
        factorization_holds,
        spectrum_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_path, build_star};

    #[test]
    fn k1_pairs() {
        let k1 = build_path(1).unwrap();
        let r = verify_support_correspondence_p2(&k1, 0, &k1, 0).unwrap();
        assert!(r.holds());
        assert!(same_values(&r.plus, &[1.0], 1e-12) && same_values(&r.minus, &[-1.0], 1e-12));
        let r = verify_support_correspondence_p3(&k1, 0, &k1, 0).unwrap();
        assert!(r.holds());
        let r2 = 2f64.sqrt();
        assert!(same_values(&r.plus, &[r2, -r2], 1e-12));
        assert!(same_values(&r.minus, &[0.0], 1e-12));
    }

    #[test]
    fn p2_leaf_pairs() {
        let p2 = build_path(2).unwrap();
        let r = verify_support_correspondence_p2(&p2, 0, &p2, 0).unwrap();
        assert!(r.holds());
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!(same_values(&r.plus, &[phi, 1.0 - phi], 1e-12));
        let r = verify_support_correspondence_p3(&p2, 0, &p2, 0).unwrap();
        assert!(r.holds());
        let r3 = 3f64.sqrt();
        assert!(same_values(&r.plus, &[r3, -r3], 1e-9));
        assert!(same_values(&r.leftover, &[0.0], 1e-9));
    }

    #[test]
    fn star_leaves_have_leftovers() {
        let s = build_star(3);
        let r = verify_support_correspondence_p2(&s, 1, &s, 1).unwrap();
        assert!(r.holds());
        assert!(!r.leftover.is_empty());
    }

    #[test]
    fn walk_equivalence_is_required() {
        let p3 = build_path(3).unwrap();
        assert!(matches!(
            verify_support_correspondence_p2(&p3, 0, &p3, 1),
            Err(VerifyError::NotWalkEquivalent)
        ));
    }
}
