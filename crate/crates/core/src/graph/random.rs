//! Seeded random graphs for property suites.

use rand::Rng;

use super::Graph;
use crate::linalg::Matrix;
use crate::scalar::Real;

/// Erdos-Renyi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("random graph is well formed")
}

/// Uniformly random recursive tree: vertex `v` attaches to a random earlier vertex.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, &edges).expect("random tree is well formed")
}

/// Random spanning tree plus independent extra edges with probability `p`,
/// then a random relabeling.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, &edges).expect("random graph is well formed");
    g.permuted(&random_permutation(rng, n))
}

/// Random graph with integer edge weights in `1..=max_weight` and, with
/// probability `loop_p` per vertex, an integer loop weight in `-2..=2`.
pub fn random_integer_weighted<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    p: f64,
    max_weight: i64,
    loop_p: f64,
) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v, rng.gen_range(1..=max_weight) as f64));
            }
        }
    }
    let mut loops = Vec::new();
    for v in 0..n {
        if rng.gen_bool(loop_p) {
            loops.push((v, rng.gen_range(-2..=2) as f64));
        }
    }
    Graph::from_weighted_edges(n, &edges, &loops).expect("random weighted graph is well formed")
}

pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

/// Symmetric matrix with independent entries uniform in `[-1, 1]`.
pub fn random_symmetric<T: Real, R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix<T> {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = T::of(rng.gen_range(-1.0..=1.0));
            m[(i, j)] = x;
            m[(j, i)] = x;
        }
    }
    m
}
