use super::SpectralError;
use crate::graph::Graph;
use crate::linalg::Matrix;
use crate::poly::{charpoly, charpoly_deleted, path_sum_poly, IntPoly, RationalFunction};

const SNAP_TOLERANCE: f64 = 1e-6;
const RESOLVENT_STEP: f64 = 1e-6;

/// `<a| E_theta |b>` as the residue at `theta` of the resolvent entry
/// `((tI - A)^{-1})_ab`, whose numerator is `phi(G\a)` on the diagonal and the
/// weighted path sum off it. `theta` is snapped to the nearest exact root of
/// `phi(G)`. Graphs with non-integer weights fall back to
/// [`projector_entry_numeric`].
pub fn projector_entry_via_neutrino(g: &Graph, a: usize, b: usize, theta: f64) -> Result<f64, SpectralError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if !g.is_integer() {
        return projector_entry_numeric(g, a, b, theta);
    }
    let residues = neutrino_residues(g, a, b)?;
    let (root, value) = residues
        .iter()
        .copied()
        .min_by(|p, q| (p.0 - theta).abs().total_cmp(&(q.0 - theta).abs()))
        .expect("nonempty graph has eigenvalues");
    let distance = (root - theta).abs();
    if distance > SNAP_TOLERANCE * theta.abs().max(1.0) {
        return Err(SpectralError::NotARoot { theta, distance });
    }
    Ok(value)
}

/// `(theta, <a| E_theta |b>)` for every distinct eigenvalue of an
/// integer-weighted graph, ascending.
pub fn neutrino_residues(g: &Graph, a: usize, b: usize) -> Result<Vec<(f64, f64)>, SpectralError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    let phi = charpoly(g)?;
    let numerator = if a == b { charpoly_deleted(g, &[a])? } else { path_sum_poly(g, a, b)? };
    let reduced = RationalFunction::new(numerator, phi.clone())?;
    let poles = reduced.denominator().real_roots()?;
    let slope: IntPoly = reduced.denominator().derivative();
    phi.real_roots()?
        .into_iter()
        .map(|root| residue(&reduced, &poles, &slope, root).map(|v| (root, v)))
        .collect()
}

fn residue(f: &RationalFunction, poles: &[f64], slope: &IntPoly, root: f64) -> Result<f64, SpectralError> {
    let pole = match nearest(poles, root) {
        Some((pole, d)) if d <= 1e-8 * root.abs().max(1.0) => pole,
        _ => return Ok(0.0),
    };
    let ds = slope.eval_f64(pole);
    if ds == 0.0 {
        return Err(SpectralError::NonSimplePole { theta: root });
    }
    Ok(f.numerator().eval_f64(pole) / ds)
}

fn nearest(roots: &[f64], x: f64) -> Option<(f64, f64)> {
    roots.iter().map(|&r| (r, (r - x).abs())).min_by(|p, q| p.1.total_cmp(&q.1))
}

/// `<a| E_theta |b>` from the resolvent: the average of
/// `(t - theta) ((tI - A)^{-1})_ab` at `t = theta +- h`, which cancels the
/// first-order contribution of the other eigenvalues.
pub fn projector_entry_numeric(g: &Graph, a: usize, b: usize, theta: f64) -> Result<f64, SpectralError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    let adj: Matrix<f64> = g.adjacency();
    let h = RESOLVENT_STEP * theta.abs().max(1.0);
    let at = |t: f64| -> f64 {
        let shifted = Matrix::from_fn(adj.rows(), adj.cols(), |i, j| if i == j { t - adj[(i, j)] } else { -adj[(i, j)] });
        let mut rhs = vec![0.0; adj.rows()];
        rhs[b] = 1.0;
        solve(shifted, rhs).map_or(0.0, |x| (t - theta) * x[a])
    };
    Ok(0.5 * (at(theta + h) + at(theta - h)))
}

fn solve(mut m: Matrix<f64>, mut rhs: Vec<f64>) -> Option<Vec<f64>> {
    let n = m.rows();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| m[(i, col)].abs().total_cmp(&m[(j, col)].abs()))?;
        if m[(pivot, col)] == 0.0 {
            return None;
        }
        if pivot != col {
            for j in 0..n {
                let tmp = m[(col, j)];
                m[(col, j)] = m[(pivot, j)];
                m[(pivot, j)] = tmp;
            }
            rhs.swap(col, pivot);
        }
        for i in col + 1..n {
            let factor = m[(i, col)] / m[(col, col)];
            if factor != 0.0 {
                for j in col..n {
                    m[(i, j)] -= factor * m[(col, j)];
                }
                rhs[i] -= factor * rhs[col];
            }
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|j| m[(i, j)] * x[j]).sum();
        x[i] = (rhs[i] - s) / m[(i, i)];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, build_path, build_star};

    #[test]
    fn p2_entries() {
        let p2 = build_path(2).unwrap();
        let e = |a, b, t| projector_entry_via_neutrino(&p2, a, b, t).unwrap();
        assert!((e(0, 1, 1.0) - 0.5).abs() < 1e-12);
        assert!((e(0, 1, -1.0) + 0.5).abs() < 1e-12);
        assert!((e(0, 0, 1.0) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn p3_entries() {
        let p3 = build_path(3).unwrap();
        let r2 = 2f64.sqrt();
        assert!((projector_entry_via_neutrino(&p3, 0, 2, r2).unwrap() - 0.25).abs() < 1e-12);
        assert!((projector_entry_via_neutrino(&p3, 0, 2, 0.0).unwrap() + 0.5).abs() < 1e-12);
        assert!((projector_entry_via_neutrino(&p3, 1, 1, 0.0).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn not_a_root() {
        let p2 = build_path(2).unwrap();
        assert!(matches!(projector_entry_via_neutrino(&p2, 0, 1, 0.5), Err(SpectralError::NotARoot { .. })));
    }

    #[test]
    fn repeated_eigenvalue() {
        // C4 eigenvalue 0 has multiplicity 2; E_0 = I/2 - (antipodal)/2 ... entry (0,2) is -1/2
        let c4 = build_cycle(4).unwrap();
        assert!((projector_entry_via_neutrino(&c4, 0, 2, 0.0).unwrap() + 0.5).abs() < 1e-12);
        assert!((projector_entry_via_neutrino(&c4, 0, 0, 0.0).unwrap() - 0.5).abs() < 1e-12);
        let s3 = build_star(3);
        assert!((projector_entry_via_neutrino(&s3, 1, 2, 0.0).unwrap() + 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn numeric_fallback_matches() {
        let p3 = build_path(3).unwrap();
        let r2 = 2f64.sqrt();
        assert!((projector_entry_numeric(&p3, 0, 2, r2).unwrap() - 0.25).abs() < 1e-9);
        assert!((projector_entry_numeric(&p3, 0, 2, 0.0).unwrap() + 0.5).abs() < 1e-9);
    }
}
