//! Exact characteristic polynomials by evaluation and interpolation.
//!
//! `det(kI - A)` is computed at `k = 0..=n` with fraction-free Bareiss
//! elimination (in `i128` when it fits, otherwise arbitrary precision), and
//! the polynomial is recovered from its forward differences:
//! `p(t) = sum_j D^j p(0) * C(t, j)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IntPoly, PolyError};
use crate::graph::Graph;
use crate::scalar::IntegralDomain;

/// Determinant by Bareiss elimination with row pivoting. Returns `None` if
/// an intermediate overflows `T`. The empty matrix has determinant one.
pub fn bareiss_det<T: IntegralDomain>(mut m: Vec<Vec<T>>) -> Option<T> {
    let n = m.len();
    let mut prev = T::one();
    let mut negate = false;
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Some(T::zero());
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = m[i][j].checked_mul(&m[k][k])?;
                let rhs = m[i][k].checked_mul(&m[k][j])?;
                m[i][j] = lhs.checked_sub(&rhs)?.exact_div(&prev)?;
            }
            m[i][k] = T::zero();
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 { T::one() } else { m[n - 1][n - 1].clone() };
    if negate {
        det.checked_neg()
    } else {
        Some(det)
    }
}

/// Exact determinant of an integer matrix.
pub fn det_exact(m: &[Vec<i64>]) -> BigInt {
    let narrow: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    if let Some(d) = bareiss_det(narrow) {
        return d.into_bigint();
    }
    let wide: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    bareiss_det(wide).expect("arbitrary precision never overflows")
}

/// `det(tI - A)` for a square integer matrix; `1` for the empty matrix.
pub fn charpoly_matrix(a: &[Vec<i64>]) -> IntPoly {
    let n = a.len();
    if n == 0 {
        return IntPoly::one();
    }
    // values[k] = det(kI - A)
    let mut diffs: Vec<BigInt> = (0..=n)
        .map(|k| {
            let shifted: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { k as i64 - a[i][j] } else { -a[i][j] }).collect())
                .collect();
            det_exact(&shifted)
        })
        .collect();
    // in place: diffs[j] becomes the j-th forward difference at 0
    for j in 1..=n {
        for k in (j..=n).rev() {
            diffs[k] = &diffs[k] - &diffs[k - 1];
        }
    }
    // n! p(t) = sum_j D^j * (n!/j!) * t(t-1)...(t-j+1)
    let mut scaled = IntPoly::zero();
    let mut falling = IntPoly::one();
    let mut ratio: BigInt = (1..=n).map(BigInt::from).product();
    let n_factorial = ratio.clone();
    for (j, d) in diffs.iter().enumerate() {
        if j > 0 {
            falling = &falling * &IntPoly::from_i64s(&[-(j as i64 - 1), 1]);
            ratio /= BigInt::from(j);
        }
        if !Zero::is_zero(d) {
            scaled = &scaled + &falling.scale(&(d * &ratio));
        }
    }
    let p = scaled
        .div_exact(&IntPoly::constant(n_factorial))
        .expect("characteristic polynomial has integer coefficients");
    debug_assert!(p.leading().is_some_and(One::is_one));
    p
}

/// `phi(G; t) = det(tI - A(G))`.
pub fn charpoly(g: &Graph) -> Result<IntPoly, PolyError> {
    let a = g.integer_matrix().ok_or(PolyError::NonInteger)?;
    Ok(charpoly_matrix(&a))
}

/// Characteristic polynomial of the subgraph induced on `V \ removed`;
/// `1` when every vertex is removed.
pub fn charpoly_deleted(g: &Graph, removed: &[usize]) -> Result<IntPoly, PolyError> {
    let a = g.integer_matrix().ok_or(PolyError::NonInteger)?;
    let keep = g.complement_of(removed)?;
    Ok(charpoly_matrix(&principal(&a, &keep)))
}

fn principal(a: &[Vec<i64>], keep: &[usize]) -> Vec<Vec<i64>> {
    keep.iter().map(|&i| keep.iter().map(|&j| a[i][j]).collect()).collect()
}

/// Memoized characteristic polynomials of vertex-deleted subgraphs of one
/// graph, keyed by the removed vertex set.
#[derive(Debug)]
pub struct CharpolyCache {
    matrix: Vec<Vec<i64>>,
    cache: HashMap<u128, IntPoly>,
}

impl CharpolyCache {
    pub fn new(g: &Graph) -> Result<Self, PolyError> {
        assert!(g.order() <= 128, "CharpolyCache keys vertex sets as u128 masks");
        let matrix = g.integer_matrix().ok_or(PolyError::NonInteger)?;
        Ok(Self { matrix, cache: HashMap::new() })
    }

    pub fn deleted(&mut self, removed: &[usize]) -> &IntPoly {
        let mask = removed.iter().fold(0u128, |m, &v| m | 1u128 << v);
        let matrix = &self.matrix;
        self.cache.entry(mask).or_insert_with(|| {
            let keep: Vec<usize> = (0..matrix.len()).filter(|&v| mask >> v & 1 == 0).collect();
            charpoly_matrix(&principal(matrix, &keep))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, build_path, build_star};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn bareiss_small() {
        assert_eq!(bareiss_det::<i128>(vec![]), Some(1));
        assert_eq!(bareiss_det(vec![vec![0i128, 1], vec![1, 0]]), Some(-1));
        assert_eq!(bareiss_det(vec![vec![2i128, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]), Some(6));
        assert_eq!(bareiss_det(vec![vec![0i128, 0, 1], vec![0, 2, 0], vec![3, 0, 0]]), Some(-6));
        assert_eq!(bareiss_det(vec![vec![1i128, 2], vec![2, 4]]), Some(0));
    }

    #[test]
    fn overflow_falls_back() {
        let big = 1i64 << 40;
        let m = vec![vec![big, 0, 0], vec![0, big, 0], vec![0, 0, big]];
        assert_eq!(det_exact(&m), BigInt::from(big).pow(3));
    }

    #[test]
    fn small_graphs() {
        assert_eq!(charpoly(&build_path(1).unwrap()).unwrap(), p(&[0, 1]));
        assert_eq!(charpoly(&build_path(2).unwrap()).unwrap(), p(&[-1, 0, 1]));
        assert_eq!(charpoly(&build_path(3).unwrap()).unwrap(), p(&[0, -2, 0, 1]));
        assert_eq!(charpoly(&build_star(3)).unwrap(), p(&[0, 0, -3, 0, 1]));
        // C3: (t - 2)(t + 1)^2
        assert_eq!(charpoly(&build_cycle(3).unwrap()).unwrap(), p(&[-2, -3, 0, 1]));
    }

    #[test]
    fn deleted_subgraphs() {
        let p3 = build_path(3).unwrap();
        assert_eq!(charpoly_deleted(&p3, &[1]).unwrap(), p(&[0, 0, 1]));
        assert_eq!(charpoly_deleted(&p3, &[0, 1, 2]).unwrap(), IntPoly::one());
        assert_eq!(charpoly_deleted(&build_path(2).unwrap(), &[0]).unwrap(), p(&[0, 1]));
        assert!(charpoly_deleted(&p3, &[5]).is_err());
    }

    #[test]
    fn loops_and_weights() {
        let g = build_path(1).unwrap().with_loop(0, 1.0).unwrap();
        assert_eq!(charpoly(&g).unwrap(), p(&[-1, 1]));
        let w = Graph::from_weighted_edges(2, &[(0, 1, 3.0)], &[]).unwrap();
        assert_eq!(charpoly(&w).unwrap(), p(&[-9, 0, 1]));
        let r = Graph::from_weighted_edges(2, &[(0, 1, 0.5)], &[]).unwrap();
        assert_eq!(charpoly(&r), Err(PolyError::NonInteger));
    }

    #[test]
    fn cache_matches_direct() {
        let c5 = build_cycle(5).unwrap();
        let mut cache = CharpolyCache::new(&c5).unwrap();
        for removed in [vec![], vec![0], vec![1, 3], vec![0, 1, 2, 3, 4]] {
            assert_eq!(cache.deleted(&removed), &charpoly_deleted(&c5, &removed).unwrap());
        }
    }
}
