//! Exhaustive generation of small connected graphs, up to isomorphism.

use std::collections::HashSet;

use super::iso::{canonical_code, orbit_representatives};
use super::{Graph, MarkedGraph};

/// Largest order the built-in generator accepts.
pub const MAX_BUILTIN_ORDER: usize = 6;

/// All connected simple graphs on `n` vertices, one per isomorphism class,
/// in order of first appearance by edge-subset bitmask.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_BUILTIN_ORDER).contains(&n), "built-in generator supports 1..={MAX_BUILTIN_ORDER}");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        // a connected graph needs n - 1 edges
        if (mask.count_ones() as usize) + 1 < n {
            continue;
        }
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(n, &edges).expect("valid edge subset");
        if !g.is_connected() {
            continue;
        }
        if seen.insert(canonical_code(&g, None)) {
            out.push(g);
        }
    }
    out
}

/// Connected graphs on `1..=max_n` vertices with a marked vertex, one per
/// (isomorphism class, vertex orbit).
pub fn marked_connected_graphs(max_n: usize) -> Vec<MarkedGraph> {
    (1..=max_n)
        .flat_map(connected_graphs)
        .flat_map(|g| {
            orbit_representatives(&g)
                .into_iter()
                .map(move |v| MarkedGraph { graph: g.clone(), vertex: v })
        })
        .collect()
}

/// Marked versions of externally supplied graphs: connected ones only, one
/// marker per orbit when the graph is small enough for brute-force orbits,
/// otherwise every vertex.
pub fn mark_all(graphs: impl IntoIterator<Item = Graph>) -> Vec<MarkedGraph> {
    graphs
        .into_iter()
        .filter(Graph::is_connected)
        .flat_map(|g| {
            let reps = if g.order() <= super::iso::MAX_CANONICAL_ORDER && g.is_simple() {
                orbit_representatives(&g)
            } else {
                (0..g.order()).collect()
            };
            reps.into_iter().map(move |v| MarkedGraph { graph: g.clone(), vertex: v })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn marked_counts_up_to_four() {
        // K1; P2; P3 (2 orbits), K3; P4 2, K1,3 2, C4 1, K4 1, paw 3, diamond 2
        assert_eq!(marked_connected_graphs(4).len(), 16);
    }
}
