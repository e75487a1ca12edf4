use serde::Serialize;

use super::{Graph, GraphError};

/// A simple path from `a` to `b`, stored as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbPath {
    pub vertices: Vec<usize>,
}

impl AbPath {
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut s = self.vertices.clone();
        s.sort_unstable();
        s
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() <= 1
    }

    /// Product of edge weights along the path.
    pub fn weight(&self, g: &Graph) -> f64 {
        self.vertices.windows(2).map(|e| g.weight(e[0], e[1])).product()
    }
}

/// All simple `a`-`b` paths by exhaustive DFS. Distinct paths that share a
/// vertex set are all reported. Ordered by sorted vertex set, then by
/// vertex sequence.
pub fn enumerate_ab_paths(g: &Graph, a: usize, b: usize) -> Result<Vec<AbPath>, GraphError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(GraphError::SameVertex(a));
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; g.order()];
    let mut current = vec![a];
    on_path[a] = true;
    extend(g, b, &mut current, &mut on_path, &mut out);
    out.sort_by(|p, q| {
        p.vertex_set()
            .cmp(&q.vertex_set())
            .then_with(|| p.vertices.cmp(&q.vertices))
    });
    Ok(out)
}

fn extend(g: &Graph, target: usize, current: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<AbPath>) {
    let v = *current.last().expect("path is never empty");
    if v == target {
        out.push(AbPath { vertices: current.clone() });
        return;
    }
    for u in g.neighbors(v) {
        if on_path[u] {
            continue;
        }
        on_path[u] = true;
        current.push(u);
        extend(g, target, current, on_path, out);
        current.pop();
        on_path[u] = false;
    }
}
