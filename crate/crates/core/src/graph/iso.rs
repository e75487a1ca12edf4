//! Brute-force isomorphism and canonical labels for small graphs.
//!
//! Intended for `n <= 8`; everything here is exponential in `n`.

use super::Graph;

/// Largest order accepted by [`canonical_code`].
pub const MAX_CANONICAL_ORDER: usize = 8;

/// Find `p` with `h.weight(p[i], p[j]) == g.weight(i, j)` for all `i, j`,
/// optionally forcing `p[pin.0] == pin.1`.
pub fn find_isomorphism(g: &Graph, h: &Graph, pin: Option<(usize, usize)>) -> Option<Vec<usize>> {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut gd: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut hd: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let (gdeg, hdeg) = (gd.clone(), hd.clone());
    gd.sort_unstable();
    hd.sort_unstable();
    if gd != hd {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if let Some((from, to)) = pin {
        if from >= n || to >= n || gdeg[from] != hdeg[to] || g.loop_weight(from) != h.loop_weight(to) {
            return None;
        }
        map[from] = to;
        used[to] = true;
    }
    let order: Vec<usize> = (0..n).filter(|&v| map[v] == usize::MAX).collect();
    if assign(g, h, &gdeg, &hdeg, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn assign(
    g: &Graph,
    h: &Graph,
    gdeg: &[usize],
    hdeg: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for cand in 0..h.order() {
        if used[cand] || gdeg[v] != hdeg[cand] || g.loop_weight(v) != h.loop_weight(cand) {
            continue;
        }
        let consistent = (0..g.order())
            .filter(|&u| map[u] != usize::MAX)
            .all(|u| g.weight(v, u) == h.weight(cand, map[u]));
        if !consistent {
            continue;
        }
        map[v] = cand;
        used[cand] = true;
        if assign(g, h, gdeg, hdeg, order, depth + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[cand] = false;
    }
    false
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h, None).is_some()
}

/// Canonical code of a simple graph: the minimum, over relabelings, of the
/// upper-triangle adjacency bits read in graph6 order. With `marked`, only
/// relabelings sending the marked vertex to 0 are considered.
pub fn canonical_code(g: &Graph, marked: Option<usize>) -> (usize, u64) {
    let n = g.order();
    assert!(n <= MAX_CANONICAL_ORDER, "canonical_code is brute force; n = {n} too large");
    let mut best = u64::MAX;
    let mut perm: Vec<usize> = (0..n).collect();
    // perm[new] = old
    loop {
        if marked.is_none_or(|m| perm[0] == m) {
            let mut code = 0u64;
            for j in 1..n {
                for i in 0..j {
                    code = (code << 1) | u64::from(g.adjacent(perm[i], perm[j]));
                }
            }
            best = best.min(code);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    (n, best)
}

/// Vertex orbit representatives under automorphisms (smallest index per orbit).
pub fn orbit_representatives(g: &Graph) -> Vec<usize> {
    let codes: Vec<_> = (0..g.order()).map(|v| canonical_code(g, Some(v))).collect();
    (0..g.order()).filter(|&v| !codes[..v].contains(&codes[v])).collect()
}

/// Lexicographic successor; returns false after the last permutation.
pub fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
