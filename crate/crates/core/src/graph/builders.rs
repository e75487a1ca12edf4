use super::{Graph, GraphError};

/// Path `P_n` with vertices `0..n` in order.
pub fn build_path(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

/// Star `K_{1,k}`, center at index 0. `k = 0` gives a single vertex.
pub fn build_star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
    Graph::from_edges(k + 1, &edges).expect("star is well formed")
}

pub fn build_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::Parse { line: 0, message: format!("cycle needs 3 vertices, got {n}") });
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn build_complete(n: usize) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn build_edgeless(n: usize) -> Result<Graph, GraphError> {
    Graph::edgeless(n)
}

/// Double star: centers `a = 0` and `b = 1` joined by an edge, `k` leaves on
/// `a` (indices `2..2+k`) and `l` leaves on `b` after those.
pub fn build_double_star(k: usize, l: usize) -> (Graph, usize, usize) {
    let mut edges = vec![(0, 1)];
    edges.extend((0..k).map(|i| (0, 2 + i)));
    edges.extend((0..l).map(|i| (1, 2 + k + i)));
    let g = Graph::from_edges(2 + k + l, &edges).expect("double star is well formed");
    (g, 0, 1)
}

/// Extended double star: centers `a = 0`, `b = 1`, joined through the
/// middle vertex 2; `k` leaves on `a`, then `l` leaves on `b`.
pub fn build_extended_double_star(k: usize, l: usize) -> (Graph, usize, usize) {
    let mut edges = vec![(0, 2), (2, 1)];
    edges.extend((0..k).map(|i| (0, 3 + i)));
    edges.extend((0..l).map(|i| (1, 3 + k + i)));
    let g = Graph::from_edges(3 + k + l, &edges).expect("extended double star is well formed");
    (g, 0, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::iso::are_isomorphic;

    #[test]
    fn paths() {
        assert!(build_path(0).is_err());
        let k1 = build_path(1).unwrap();
        assert_eq!((k1.order(), k1.edge_count()), (1, 0));
        let p2 = build_path(2).unwrap();
        assert_eq!(p2.adjacency::<f64>().row(0), &[0.0, 1.0]);
        assert_eq!(p2.adjacency::<f64>().row(1), &[1.0, 0.0]);
        let p3 = build_path(3).unwrap();
        assert_eq!(p3.edges(), vec![(0, 1, 1.0), (1, 2, 1.0)]);
    }

    #[test]
    fn stars() {
        assert_eq!(build_star(0).order(), 1);
        assert_eq!(build_star(1), build_path(2).unwrap());
        let s3 = build_star(3);
        assert_eq!(s3.degree(0), 3);
        assert!((1..4).all(|v| s3.degree(v) == 1));
    }

    #[test]
    fn double_stars() {
        let (g, a, b) = build_double_star(0, 0);
        assert_eq!(g, build_path(2).unwrap());
        assert_eq!((a, b), (0, 1));

        let (g, a, b) = build_double_star(1, 1);
        let p4 = build_path(4).unwrap();
        assert!(are_isomorphic(&g, &p4));
        assert_eq!((g.degree(a), g.degree(b)), (2, 2));
        assert!(g.adjacent(a, b));

        let (g, a, b) = build_extended_double_star(2, 2);
        assert_eq!(g.order(), 7);
        assert_eq!((g.degree(a), g.degree(b)), (3, 3));
    }
}
