use serde::Serialize;

use super::{Graph, GraphError};

/// Two graphs joined at marked vertices by a path on `bridge_vertices`
/// vertices whose endpoints are identified with `a` and `b`.
#[derive(Debug, Clone)]
pub struct CompositionSpec<'g> {
    pub y1: &'g Graph,
    pub a: usize,
    pub y2: &'g Graph,
    pub b: usize,
    pub bridge_vertices: usize,
}

/// Result of [`compose_bridge`]: `Y1` keeps its indices, `Y2` is shifted by
/// `|Y1|`, and the interior bridge vertices come last.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Composition {
    pub graph: Graph,
    pub a: usize,
    pub b: usize,
    pub interior: Vec<usize>,
}

pub fn compose_bridge(spec: &CompositionSpec<'_>) -> Result<Composition, GraphError> {
    let CompositionSpec { y1, a, y2, b, bridge_vertices } = *spec;
    y1.check_vertex(a)?;
    y2.check_vertex(b)?;
    if bridge_vertices < 2 {
        return Err(GraphError::BridgeTooShort(bridge_vertices));
    }
    let n1 = y1.order();
    let n2 = y2.order();
    let extra = bridge_vertices - 2;
    let n = n1 + n2 + extra;

    let mut weights = vec![0.0; n * n];
    for i in 0..n1 {
        for j in 0..n1 {
            weights[i * n + j] = y1.weight(i, j);
        }
    }
    for i in 0..n2 {
        for j in 0..n2 {
            weights[(n1 + i) * n + n1 + j] = y2.weight(i, j);
        }
    }
    let global_b = n1 + b;
    let interior: Vec<usize> = (n1 + n2..n).collect();
    let chain: Vec<usize> = std::iter::once(a).chain(interior.iter().copied()).chain([global_b]).collect();
    for pair in chain.windows(2) {
        weights[pair[0] * n + pair[1]] = 1.0;
        weights[pair[1] * n + pair[0]] = 1.0;
    }
    let graph = Graph::from_weight_matrix(n, weights)?;
    Ok(Composition { graph, a, b: global_b, interior })
}

/// Identifies `a` in `Y1` with `b` in `Y2`. `Y1` keeps its indices, the other
/// vertices of `Y2` follow in order; returns the graph and the shared vertex.
pub fn one_sum(y1: &Graph, a: usize, y2: &Graph, b: usize) -> Result<(Graph, usize), GraphError> {
    y1.check_vertex(a)?;
    y2.check_vertex(b)?;
    let n1 = y1.order();
    let n = n1 + y2.order() - 1;
    let place = |v: usize| match v.cmp(&b) {
        std::cmp::Ordering::Less => n1 + v,
        std::cmp::Ordering::Equal => a,
        std::cmp::Ordering::Greater => n1 + v - 1,
    };
    let mut weights = vec![0.0; n * n];
    for i in 0..n1 {
        for j in 0..n1 {
            weights[i * n + j] = y1.weight(i, j);
        }
    }
    for i in 0..y2.order() {
        for j in 0..y2.order() {
            let w = y2.weight(i, j);
            if w != 0.0 {
                weights[place(i) * n + place(j)] += w;
            }
        }
    }
    Ok((Graph::from_weight_matrix(n, weights)?, a))
}
