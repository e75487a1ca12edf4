use super::SpectralError;
use crate::graph::Graph;
use crate::linalg::Matrix;
use crate::scalar::Real;

/// Orthonormal basis of the cyclic subspace spanned by `A^k |a>` and the
/// symmetric tridiagonal matrix of `A` restricted to it.
#[derive(Debug, Clone)]
pub struct WalkModule<T> {
    pub basis: Vec<Vec<T>>,
    pub matrix: Matrix<T>,
}

impl<T: Real> WalkModule<T> {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Lanczos iteration from `|a>` with full reorthogonalization; stops once the
/// residual falls below `1e-8 * max(1, ||A||_inf)`.
pub fn walk_module<T: Real>(g: &Graph, a: usize) -> Result<WalkModule<T>, SpectralError> {
    g.check_vertex(a)?;
    let adj: Matrix<T> = g.adjacency();
    let n = g.order();
    let cutoff = T::of(1e-8) * adj.norm_inf().max(T::one());
    let dot = |x: &[T], y: &[T]| x.iter().zip(y).map(|(&p, &q)| p * q).sum::<T>();

    let mut start = vec![T::zero(); n];
    start[a] = T::one();
    let mut basis = vec![start];
    let mut diag = Vec::new();
    let mut off = Vec::new();
    loop {
        let q = basis.last().expect("nonempty");
        let mut w = adj.mul_vec(q);
        diag.push(dot(q, &w));
        for _ in 0..2 {
            for v in &basis {
                let c = dot(v, &w);
                for (wi, &vi) in w.iter_mut().zip(v) {
                    *wi = *wi - c * vi;
                }
            }
        }
        let beta = dot(&w, &w).sqrt();
        if basis.len() == n || beta <= cutoff {
            break;
        }
        off.push(beta);
        basis.push(w.into_iter().map(|x| x / beta).collect());
    }

    let m = basis.len();
    let matrix = Matrix::from_fn(m, m, |i, j| match i.abs_diff(j) {
        0 => diag[i],
        1 => off[i.min(j)],
        _ => T::zero(),
    });
    Ok(WalkModule { basis, matrix })
}

/// Tridiagonal matrix of `A` on the walk module generated by `|a>`.
pub fn walk_module_matrix<T: Real>(g: &Graph, a: usize) -> Result<Matrix<T>, SpectralError> {
    walk_module(g, a).map(|w| w.matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_complete, build_path, build_star};

    #[test]
    fn star_center() {
        let m = walk_module_matrix::<f64>(&build_star(3), 0).unwrap();
        let r3 = 3f64.sqrt();
        let want = Matrix::from_rows(&[vec![0.0, r3], vec![r3, 0.0]]).unwrap();
        assert!(m.max_abs_diff(&want) < 1e-12);
    }

    #[test]
    fn path_end_spans_everything() {
        let m = walk_module_matrix::<f64>(&build_path(4).unwrap(), 0).unwrap();
        assert!(m.max_abs_diff(&build_path(4).unwrap().adjacency()) < 1e-12);
    }

    #[test]
    fn complete_graph() {
        let m = walk_module_matrix::<f64>(&build_complete(4).unwrap(), 2).unwrap();
        let r3 = 3f64.sqrt();
        let want = Matrix::from_rows(&[vec![0.0, r3], vec![r3, 2.0]]).unwrap();
        assert!(m.max_abs_diff(&want) < 1e-12);
    }

    #[test]
    fn isolated_vertex() {
        let m = walk_module_matrix::<f64>(&build_path(1).unwrap(), 0).unwrap();
        assert_eq!(m.rows(), 1);
    }
}
