//! Weighted undirected graphs with optional loop weights.
//!
//! A [`Graph`] stores its symmetric weight matrix densely. Off-diagonal
//! entries are edge weights (zero means no edge); diagonal entries are loop
//! weights, so `A(Y) ± |a><a|` is an ordinary graph value.

mod builders;
mod compose;
pub mod enumerate;
pub mod io;
pub mod iso;
mod paths;
pub mod random;

use serde::Serialize;
use thiserror::Error;

use crate::linalg::Matrix;
use crate::scalar::Real;

pub use builders::{
    build_complete, build_cycle, build_double_star, build_edgeless, build_extended_double_star,
    build_path, build_star,
};
pub use compose::{compose_bridge, one_sum, Composition, CompositionSpec};
pub use paths::{enumerate_ab_paths, AbPath};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("endpoints must differ (got {0} twice)")]
    SameVertex(usize),
    #[error("weight matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("weight at ({0}, {1}) is not finite")]
    NonFinite(usize, usize),
    #[error("bridge path needs at least 2 vertices, got {0}")]
    BridgeTooShort(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph6 supports only simple unweighted graphs")]
    NotSimple,
}

/// Symmetric weighted adjacency structure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Graph {
    n: usize,
    weights: Vec<f64>,
    integer: bool,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        Ok(Self { n, weights: vec![0.0; n * n], integer: true })
    }

    /// Unit-weight simple graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let weighted: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1.0)).collect();
        Self::from_weighted_edges(n, &weighted, &[])
    }

    /// Graph from weighted edges `(u, v, w)` and loops `(u, w)`.
    pub fn from_weighted_edges(
        n: usize,
        edges: &[(usize, usize, f64)],
        loops: &[(usize, f64)],
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut weights = vec![0.0; n * n];
        for &(u, v, w) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(GraphError::SameVertex(u));
            }
            weights[u * n + v] = w;
            weights[v * n + u] = w;
        }
        for &(u, w) in loops {
            check_vertex(u, n)?;
            weights[u * n + u] = w;
        }
        Self::from_weight_matrix(n, weights)
    }

    /// Graph from a full row-major weight matrix, which must be symmetric.
    pub fn from_weight_matrix(n: usize, weights: Vec<f64>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        assert_eq!(weights.len(), n * n, "weight matrix must be n x n");
        for i in 0..n {
            for j in 0..n {
                let w = weights[i * n + j];
                if !w.is_finite() {
                    return Err(GraphError::NonFinite(i, j));
                }
                if j > i && w != weights[j * n + i] {
                    return Err(GraphError::Asymmetric(i, j));
                }
            }
        }
        let integer = weights.iter().all(|w| w.fract() == 0.0 && w.abs() < 9.0e15);
        Ok(Self { n, weights, integer })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// True when every weight (edges and loops) is an exact integer.
    pub fn is_integer(&self) -> bool {
        self.integer
    }

    pub fn weight(&self, u: usize, v: usize) -> f64 {
        self.weights[u * self.n + v]
    }

    pub fn loop_weight(&self, v: usize) -> f64 {
        self.weight(v, v)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|v| self.loop_weight(v) != 0.0)
    }

    /// Simple graph: no loops, all edge weights 0 or 1.
    pub fn is_simple(&self) -> bool {
        !self.has_loops() && self.weights.iter().all(|&w| w == 0.0 || w == 1.0)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.weight(u, v) != 0.0
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.adjacent(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Edges `(u, v, w)` with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize, f64)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let w = self.weight(u, v);
                if w != 0.0 {
                    out.push((u, v, w));
                }
            }
        }
        out
    }

    pub fn loops(&self) -> Vec<(usize, f64)> {
        (0..self.n).filter_map(|v| Some((v, self.loop_weight(v))).filter(|l| l.1 != 0.0)).collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        check_vertex(v, self.n)
    }

    pub fn adjacency<T: Real>(&self) -> Matrix<T> {
        Matrix::from_fn(self.n, self.n, |i, j| T::of(self.weight(i, j)))
    }

    /// Weight matrix as exact integers, or `None` when some weight is not integral.
    pub fn integer_matrix(&self) -> Option<Vec<Vec<i64>>> {
        self.integer.then(|| {
            (0..self.n).map(|i| (0..self.n).map(|j| self.weight(i, j) as i64).collect()).collect()
        })
    }

    /// Copy with `w` added to the loop weight at `v`.
    pub fn with_loop(&self, v: usize, w: f64) -> Result<Self, GraphError> {
        self.check_vertex(v)?;
        let mut weights = self.weights.clone();
        weights[v * self.n + v] += w;
        Self::from_weight_matrix(self.n, weights)
    }

    /// Copy with a new vertex joined to `v` by an edge of weight `w`; the new
    /// vertex gets index `order()`.
    pub fn with_pendant(&self, v: usize, w: f64) -> Result<Self, GraphError> {
        self.check_vertex(v)?;
        let m = self.n + 1;
        let mut weights = vec![0.0; m * m];
        for i in 0..self.n {
            for j in 0..self.n {
                weights[i * m + j] = self.weight(i, j);
            }
        }
        weights[v * m + self.n] = w;
        weights[self.n * m + v] = w;
        Self::from_weight_matrix(m, weights)
    }

    /// Induced subgraph on `keep` (in the given order), or `None` if `keep` is empty.
    pub fn induced(&self, keep: &[usize]) -> Result<Option<Self>, GraphError> {
        for &v in keep {
            self.check_vertex(v)?;
        }
        if keep.is_empty() {
            return Ok(None);
        }
        let m = keep.len();
        let weights = (0..m * m).map(|k| self.weight(keep[k / m], keep[k % m])).collect();
        Self::from_weight_matrix(m, weights).map(Some)
    }

    /// Vertices not in `removed`, ascending.
    pub fn complement_of(&self, removed: &[usize]) -> Result<Vec<usize>, GraphError> {
        let mut mask = vec![false; self.n];
        for &v in removed {
            self.check_vertex(v)?;
            mask[v] = true;
        }
        Ok((0..self.n).filter(|&v| !mask[v]).collect())
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let n = self.n;
        let mut weights = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                weights[perm[i] * n + perm[j]] = self.weight(i, j);
            }
        }
        Self { n, weights, integer: self.integer }
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Cut vertices, ascending (Hopcroft-Tarjan lowpoint search).
    pub fn articulation_points(&self) -> Vec<usize> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // iterative DFS: (vertex, parent, next neighbour cursor)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            while let Some(&mut (v, parent, ref mut cursor)) = stack.last_mut() {
                if *cursor < n {
                    let u = *cursor;
                    *cursor += 1;
                    if !self.adjacent(v, u) || u == parent {
                        continue;
                    }
                    if disc[u] == usize::MAX {
                        disc[u] = timer;
                        low[u] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((u, v, 0));
                    } else {
                        low[v] = low[v].min(disc[u]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }
}

fn check_vertex(v: usize, n: usize) -> Result<(), GraphError> {
    if v < n {
        Ok(())
    } else {
        Err(GraphError::VertexOutOfRange { vertex: v, n })
    }
}

/// A graph together with a distinguished vertex.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MarkedGraph {
    pub graph: Graph,
    pub vertex: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_vertices_rejected() {
        assert_eq!(Graph::edgeless(0), Err(GraphError::Empty));
        assert_eq!(Graph::from_edges(0, &[]), Err(GraphError::Empty));
    }

    #[test]
    fn integer_flag_tracks_weights() {
        let g = Graph::from_weighted_edges(2, &[(0, 1, 2.0)], &[(0, -1.0)]).unwrap();
        assert!(g.is_integer());
        let h = g.with_pendant(0, 2f64.sqrt()).unwrap();
        assert!(!h.is_integer());
        assert_eq!(h.order(), 3);
        assert_eq!(h.weight(2, 0), 2f64.sqrt());
    }

    #[test]
    fn asymmetric_matrix_rejected() {
        let err = Graph::from_weight_matrix(2, vec![0.0, 1.0, 2.0, 0.0]).unwrap_err();
        assert_eq!(err, GraphError::Asymmetric(0, 1));
    }

    #[test]
    fn loops_are_diagonal_weights() {
        let g = build_path(2).unwrap().with_loop(0, 1.0).unwrap();
        assert_eq!(g.loop_weight(0), 1.0);
        assert_eq!(g.degree(0), 1);
        assert!(!g.is_simple());
    }

    #[test]
    fn articulation_points_of_path() {
        assert_eq!(build_path(4).unwrap().articulation_points(), vec![1, 2]);
        assert!(build_cycle(5).unwrap().articulation_points().is_empty());
        assert_eq!(build_star(3).articulation_points(), vec![0]);
    }

    #[test]
    fn induced_subgraph() {
        let p = build_path(3).unwrap();
        let sub = p.induced(&[0, 2]).unwrap().unwrap();
        assert_eq!(sub.edge_count(), 0);
        assert!(p.induced(&[]).unwrap().is_none());
        assert!(p.induced(&[3]).is_err());
    }
}
