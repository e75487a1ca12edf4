use super::VerifyError;
use crate::linalg::{eigenvalues_desc, LinalgError, Matrix};
use crate::scalar::Real;

fn slack<T: Real>(scale: T) -> T {
    T::of(1e-9).max(T::epsilon() * T::of(100.0) * scale.max(T::one()))
}

/// Cauchy interlacing for the compression `B = S^T A S`:
/// `lambda_k(A) >= lambda_k(B) >= lambda_{k+n-m}(A)` (descending order).
pub fn check_cauchy<T: Real>(a: &Matrix<T>, s: &Matrix<T>) -> Result<bool, VerifyError> {
    if s.rows() != a.rows() {
        return Err(LinalgError::DimensionMismatch(format!("{}x{} vs {}x{}", a.rows(), a.cols(), s.rows(), s.cols())).into());
    }
    let gram = s.transpose().mul(s)?;
    let deviation = gram.max_abs_diff(&Matrix::identity(s.cols()));
    if deviation > slack(T::one()) {
        return Err(VerifyError::NotIsometry { deviation: deviation.as_f64() });
    }
    let b = s.transpose().mul(a)?.mul(s)?;
    let la = eigenvalues_desc(a)?;
    let lb = eigenvalues_desc(&b)?;
    let (n, m) = (la.len(), lb.len());
    let eps = slack(a.norm_inf());
    Ok((0..m).all(|k| la[k] + eps >= lb[k] && lb[k] + eps >= la[k + n - m]))
}

/// [`check_cauchy`] with `S` selecting the rows not in `removed`.
pub fn check_cauchy_deletion<T: Real>(a: &Matrix<T>, removed: &[usize]) -> Result<bool, VerifyError> {
    let keep: Vec<usize> = (0..a.rows()).filter(|v| !removed.contains(v)).collect();
    let s = Matrix::from_fn(a.rows(), keep.len(), |i, j| if keep[j] == i { T::one() } else { T::zero() });
    check_cauchy(a, &s)
}

/// Descending spectra of `A`, `B`, `A + B` and the comparison slack.
type SumSpectra<T> = (Vec<T>, Vec<T>, Vec<T>, T);

fn sum_spectra<T: Real>(a: &Matrix<T>, b: &Matrix<T>) -> Result<SumSpectra<T>, VerifyError> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(LinalgError::DimensionMismatch(format!("{}x{} vs {}x{}", a.rows(), a.cols(), b.rows(), b.cols())).into());
    }
    let c = a.add(b)?;
    let scale = a.norm_inf() + b.norm_inf();
    Ok((eigenvalues_desc(a)?, eigenvalues_desc(b)?, eigenvalues_desc(&c)?, slack(scale)))
}

/// Weyl inequalities for `C = A + B` (1-based, descending):
/// `lambda_k(C) <= lambda_i(A) + lambda_{k-i+1}(B)` for `i <= k` and
/// `lambda_k(C) >= lambda_i(A) + lambda_{k-i+n}(B)` for `i >= k`.
pub fn check_weyl<T: Real>(a: &Matrix<T>, b: &Matrix<T>) -> Result<bool, VerifyError> {
    let (la, lb, lc, eps) = sum_spectra(a, b)?;
    let n = la.len();
    for k in 0..n {
        for i in 0..n {
            if i <= k && lc[k] > la[i] + lb[k - i] + eps {
                return Ok(false);
            }
            if i >= k && lc[k] + eps < la[i] + lb[k + n - 1 - i] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Ky Fan: the sum of the `k` largest eigenvalues of `A + B` is at most the
/// sum of those of `A` plus those of `B`, with equality at `k = n`.
pub fn check_kyfan<T: Real>(a: &Matrix<T>, b: &Matrix<T>) -> Result<bool, VerifyError> {
    let (la, lb, lc, eps) = sum_spectra(a, b)?;
    let n = la.len();
    let (mut sa, mut sb, mut sc) = (T::zero(), T::zero(), T::zero());
    for k in 0..n {
        sa = sa + la[k];
        sb = sb + lb[k];
        sc = sc + lc[k];
        let tol = eps * T::of((k + 1) as f64);
        if sc > sa + sb + tol || (k + 1 == n && (sc - sa - sb).abs() > tol) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `lambda_j(M + vv^T) >= lambda_j(M - vv^T)` for every `j`.
pub fn check_rank_one_monotone<T: Real>(m: &Matrix<T>, v: &[T]) -> Result<bool, VerifyError> {
    if v.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch(format!("{} entries for order {}", v.len(), m.rows())).into());
    }
    let outer = Matrix::from_fn(v.len(), v.len(), |i, j| v[i] * v[j]);
    let plus = eigenvalues_desc(&m.add(&outer)?)?;
    let minus = eigenvalues_desc(&m.sub(&outer)?)?;
    let eps = slack(m.norm_inf() + outer.norm_inf());
    Ok(plus.iter().zip(&minus).all(|(&p, &q)| p + eps >= q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_path, build_star};

    #[test]
    fn p3_deletion() {
        let a: Matrix<f64> = build_path(3).unwrap().adjacency();
        assert!(check_cauchy_deletion(&a, &[0]).unwrap());
        assert!(check_cauchy_deletion(&a, &[1]).unwrap());
        assert!(check_cauchy_deletion(&a, &[0, 2]).unwrap());
    }

    #[test]
    fn rejects_non_isometry() {
        let a: Matrix<f64> = build_path(3).unwrap().adjacency();
        let s = Matrix::from_rows(&[vec![1.0], vec![1.0], vec![0.0]]).unwrap();
        assert!(matches!(check_cauchy(&a, &s), Err(VerifyError::NotIsometry { .. })));
    }

    #[test]
    fn one_by_one_compression() {
        let a = Matrix::from_rows(&[vec![2.0, 1.0], vec![1.0, -1.0]]).unwrap();
        let r = 0.5f64.sqrt();
        let s = Matrix::from_rows(&[vec![r], vec![r]]).unwrap();
        assert!(check_cauchy(&a, &s).unwrap());
    }

    #[test]
    fn diagonal_weyl_and_kyfan() {
        let a = Matrix::diagonal(&[3.0, 1.0, -2.0]);
        let b = Matrix::diagonal(&[-1.0, 4.0, 0.5]);
        assert!(check_weyl(&a, &b).unwrap());
        assert!(check_kyfan(&a, &b).unwrap());
        assert!(check_weyl(&a, &Matrix::diagonal(&[1.0])).is_err());
    }

    #[test]
    fn loop_monotonicity() {
        let a: Matrix<f64> = build_star(3).adjacency();
        let mut e = vec![0.0; 4];
        e[0] = 1.0;
        assert!(check_rank_one_monotone(&a, &e).unwrap());
    }
}
