//! Characteristic-polynomial identities for cut vertices, bridges and
//! walk generating functions.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::charpoly::{charpoly, charpoly_deleted, CharpolyCache};
use super::{IntPoly, PolyError, RationalFunction};
use crate::graph::{Graph, GraphError};
use crate::scalar::Sign;

/// Characteristic polynomial of the 1-sum of `Y1` and `Y2` at a shared vertex:
/// `phi(Y1) phi(Y2\b) + phi(Y1\b) phi(Y2) - t phi(Y1\b) phi(Y2\b)`.
pub fn one_sum_charpoly(phi_y1: &IntPoly, phi_y1_del: &IntPoly, phi_y2: &IntPoly, phi_y2_del: &IntPoly) -> IntPoly {
    let both_deleted = phi_y1_del * phi_y2_del;
    &(&(phi_y1 * phi_y2_del) + &(phi_y1_del * phi_y2)) - &both_deleted.shift(1)
}

/// `Y1` and `Y2` joined by an edge `a-b`: `phi(Y1) phi(Y2) - phi(Y1\a) phi(Y2\b)`.
pub fn bridge_charpoly_p2(phi_y1: &IntPoly, phi_y1_a: &IntPoly, phi_y2: &IntPoly, phi_y2_b: &IntPoly) -> IntPoly {
    &(phi_y1 * phi_y2) - &(phi_y1_a * phi_y2_b)
}

/// `Y1` and `Y2` joined by a path `a-c-b`:
/// `t phi(Y1) phi(Y2) - phi(Y2) phi(Y1\a) - phi(Y1) phi(Y2\b)`.
pub fn bridge_charpoly_p3(phi_y1: &IntPoly, phi_y1_a: &IntPoly, phi_y2: &IntPoly, phi_y2_b: &IntPoly) -> IntPoly {
    let both = (phi_y1 * phi_y2).shift(1);
    &(&both - &(phi_y2 * phi_y1_a)) - &(phi_y1 * phi_y2_b)
}

/// Characteristic polynomial of `A(Y) + sign |a><a|`: `phi(Y) - sign phi(Y\a)`.
pub fn loop_adjusted_charpoly(phi_y: &IntPoly, phi_y_a: &IntPoly, sign: Sign) -> IntPoly {
    match sign {
        Sign::Plus => phi_y - phi_y_a,
        Sign::Minus => phi_y + phi_y_a,
    }
}

/// Characteristic polynomial of `Y` with a pendant vertex attached to `a`
/// by an edge of weight `sqrt(2)`: `t phi(Y) - 2 phi(Y\a)`.
pub fn pendant_sqrt2_charpoly(phi_y: &IntPoly, phi_y_a: &IntPoly) -> IntPoly {
    &phi_y.shift(1) - &phi_y_a.scale(&BigInt::from(2))
}

/// `sum_P w(P) phi(G \ P)` over all simple `a`-`b` paths `P`, where `w(P)`
/// is the product of edge weights along `P` (1 for unweighted graphs).
/// This is the `(a, b)` entry of `adj(tI - A)`.
pub fn path_sum_poly(g: &Graph, a: usize, b: usize) -> Result<IntPoly, PolyError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(GraphError::SameVertex(a).into());
    }
    let mut cache = CharpolyCache::new(g)?;
    let adj = g.integer_matrix().ok_or(PolyError::NonInteger)?;
    // total path weight per vertex set
    let mut by_set: HashMap<u128, BigInt> = HashMap::new();
    let mut stack = vec![(a, 1u128 << a, BigInt::from(1))];
    while let Some((v, mask, w)) = stack.pop() {
        if v == b {
            *by_set.entry(mask).or_default() += w;
            continue;
        }
        for u in g.neighbors(v).filter(|&u| mask >> u & 1 == 0) {
            stack.push((u, mask | 1u128 << u, &w * adj[v][u]));
        }
    }
    let mut sets: Vec<(u128, BigInt)> = by_set.into_iter().collect();
    sets.sort_unstable_by_key(|(mask, _)| *mask);
    let mut total = IntPoly::zero();
    for (mask, w) in sets {
        let removed: Vec<usize> = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
        total = &total + &cache.deleted(&removed).scale(&w);
    }
    Ok(total)
}

/// `phi(G\a) / phi(G)`, the closed-walk generating function at `a` in the
/// variable `t = 1/x`, divided by `t`.
pub fn walk_gf(g: &Graph, a: usize) -> Result<RationalFunction, PolyError> {
    g.check_vertex(a)?;
    RationalFunction::new(charpoly_deleted(g, &[a])?, charpoly(g)?)
}

/// First-return generating function at `a` in the variable `t = 1/x`:
/// `C_a(1/t) = 1 - phi(G) / (t phi(G\a))`. Additive over 1-sums at `a`.
pub fn return_walk_gf(g: &Graph, a: usize) -> Result<RationalFunction, PolyError> {
    g.check_vertex(a)?;
    let ratio = RationalFunction::new(charpoly(g)?, charpoly_deleted(g, &[a])?.shift(1))?;
    Ok(&RationalFunction::from_poly(IntPoly::one()) - &ratio)
}

/// Whether `num/den`, once reduced, has only simple poles.
pub fn poles_simple(num: &IntPoly, den: &IntPoly) -> Result<bool, PolyError> {
    RationalFunction::new(num.clone(), den.clone()).map(|r| r.poles_simple())
}

/// `phi(Y1\a)/phi(Y1) == phi(Y2\b)/phi(Y2)`, by cross-multiplication.
pub fn walk_equivalent(phi_y1_a: &IntPoly, phi_y1: &IntPoly, phi_y2_b: &IntPoly, phi_y2: &IntPoly) -> bool {
    phi_y1_a * phi_y2 == phi_y2_b * phi_y1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, build_path, build_star};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn phi(g: &Graph) -> IntPoly {
        charpoly(g).unwrap()
    }

    fn phi_del(g: &Graph, s: &[usize]) -> IntPoly {
        charpoly_deleted(g, s).unwrap()
    }

    #[test]
    fn one_sum_examples() {
        let p2 = build_path(2).unwrap();
        let glued = one_sum_charpoly(&phi(&p2), &phi_del(&p2, &[0]), &phi(&p2), &phi_del(&p2, &[0]));
        assert_eq!(glued, p(&[0, -2, 0, 1]));
        let k1 = build_path(1).unwrap();
        let one = IntPoly::one();
        assert_eq!(one_sum_charpoly(&phi(&k1), &one, &phi(&k1), &one), p(&[0, 1]));
    }

    #[test]
    fn bridge_examples() {
        let t = IntPoly::t();
        let one = IntPoly::one();
        assert_eq!(bridge_charpoly_p2(&t, &one, &t, &one), p(&[-1, 0, 1]));
        assert_eq!(bridge_charpoly_p3(&t, &one, &t, &one), p(&[0, -2, 0, 1]));
        let p2 = build_path(2).unwrap();
        let (f, fa) = (phi(&p2), phi_del(&p2, &[1]));
        assert_eq!(bridge_charpoly_p2(&f, &fa, &f, &fa), p(&[1, 0, -3, 0, 1]));
    }

    #[test]
    fn loop_adjusted_examples() {
        let t = IntPoly::t();
        assert_eq!(loop_adjusted_charpoly(&t, &IntPoly::one(), Sign::Plus), p(&[-1, 1]));
        let p2 = build_path(2).unwrap();
        let (f, fa) = (phi(&p2), phi_del(&p2, &[0]));
        assert_eq!(loop_adjusted_charpoly(&f, &fa, Sign::Plus), p(&[-1, -1, 1]));
        assert_eq!(loop_adjusted_charpoly(&f, &fa, Sign::Minus), p(&[-1, 1, 1]));
        // agrees with the charpoly of the looped graph
        assert_eq!(phi(&p2.with_loop(0, 1.0).unwrap()), p(&[-1, -1, 1]));
        assert_eq!(phi(&p2.with_loop(0, -1.0).unwrap()), p(&[-1, 1, 1]));
    }

    #[test]
    fn pendant_examples() {
        assert_eq!(pendant_sqrt2_charpoly(&IntPoly::t(), &IntPoly::one()), p(&[-2, 0, 1]));
        let p2 = build_path(2).unwrap();
        assert_eq!(pendant_sqrt2_charpoly(&phi(&p2), &phi_del(&p2, &[0])), p(&[0, -3, 0, 1]));
    }

    #[test]
    fn path_sums() {
        assert_eq!(path_sum_poly(&build_path(2).unwrap(), 0, 1).unwrap(), IntPoly::one());
        let p3 = build_path(3).unwrap();
        assert_eq!(path_sum_poly(&p3, 0, 2).unwrap(), IntPoly::one());
        let c3 = build_cycle(3).unwrap();
        assert_eq!(path_sum_poly(&c3, 0, 1).unwrap(), p(&[1, 1]));
        let lhs = &(&phi_del(&c3, &[0]) * &phi_del(&c3, &[1])) - &(&phi(&c3) * &phi_del(&c3, &[0, 1]));
        assert_eq!(lhs, p(&[1, 2, 1]));
        assert!(path_sum_poly(&c3, 1, 1).is_err());
    }

    #[test]
    fn weighted_path_sum_is_adjugate_entry() {
        // A = [[0,2],[2,1]]: adj(tI - A)_{01} = 2
        let g = Graph::from_weighted_edges(2, &[(0, 1, 2.0)], &[(1, 1.0)]).unwrap();
        assert_eq!(path_sum_poly(&g, 0, 1).unwrap(), p(&[2]));
    }

    #[test]
    fn walk_generating_functions() {
        let k1 = build_path(1).unwrap();
        assert_eq!(walk_gf(&k1, 0).unwrap(), RationalFunction::new(p(&[1]), p(&[0, 1])).unwrap());
        assert!(return_walk_gf(&k1, 0).unwrap().is_zero());
        let p2 = build_path(2).unwrap();
        assert_eq!(walk_gf(&p2, 0).unwrap(), RationalFunction::new(p(&[0, 1]), p(&[-1, 0, 1])).unwrap());
        // one closed walk of length 2 returning for the first time: x^2 = t^-2
        assert_eq!(return_walk_gf(&p2, 0).unwrap(), RationalFunction::new(p(&[1]), p(&[0, 0, 1])).unwrap());
    }

    #[test]
    fn pole_simplicity() {
        assert!(poles_simple(&p(&[0, 1]), &p(&[0, -2, 0, 1])).unwrap());
        assert!(!poles_simple(&p(&[1]), &p(&[0, 0, 1])).unwrap());
        assert!(poles_simple(&p(&[-1, 1]), &p(&[1, -2, 1])).unwrap());
    }

    #[test]
    fn walk_equivalence_of_stars() {
        for k in 0..5 {
            for l in 0..5 {
                let (sk, sl) = (build_star(k), build_star(l));
                let eq = walk_equivalent(&phi_del(&sk, &[0]), &phi(&sk), &phi_del(&sl, &[0]), &phi(&sl));
                assert_eq!(eq, k == l, "k={k} l={l}");
            }
        }
        let p3 = build_path(3).unwrap();
        assert!(!walk_equivalent(&phi_del(&p3, &[0]), &phi(&p3), &phi_del(&p3, &[1]), &phi(&p3)));
    }
}
