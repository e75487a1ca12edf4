//! Named, seeded invariant suites over random and exhaustive corpora.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    check_cauchy_deletion, check_kyfan, check_rank_one_monotone, check_weyl, equitable_quotient,
    verify_double_star_quotient_relations, verify_support_correspondence_p2,
    verify_support_correspondence_p3, VerifyError,
};
use crate::graph::enumerate::{connected_graphs, marked_connected_graphs};
use crate::graph::iso::orbit_representatives;
use crate::graph::random::{random_connected_graph, random_graph, random_permutation, random_symmetric};
use crate::graph::{
    build_double_star, build_extended_double_star, build_star, compose_bridge, one_sum, CompositionSpec, Graph,
};
use crate::linalg::{eigenvalues_desc, Matrix};
use crate::poly::{
    bridge_charpoly_p2, bridge_charpoly_p3, charpoly, charpoly_deleted, loop_adjusted_charpoly,
    one_sum_charpoly, path_sum_poly, pendant_sqrt2_charpoly, return_walk_gf, walk_equivalent,
};
use crate::scalar::Sign;
use crate::spectral::{decompose, neutrino_residues, projector_entry_via_neutrino, walk_module_matrix};

pub const DEFAULT_SEED: u64 = 0x51_7E_C7;
const MAX_REPORTED_FAILURES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Interlacing,
    Neutrino,
    Onesum,
    CorrespondenceP2,
    CorrespondenceP3,
    Quotient,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Interlacing,
        Suite::Neutrino,
        Suite::Onesum,
        Suite::CorrespondenceP2,
        Suite::CorrespondenceP3,
        Suite::Quotient,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Interlacing => "interlacing",
            Suite::Neutrino => "neutrino",
            Suite::Onesum => "onesum",
            Suite::CorrespondenceP2 => "correspondence-p2",
            Suite::CorrespondenceP3 => "correspondence-p3",
            Suite::Quotient => "quotient",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.name() == name)
    }
}

/// Tally of one property over its instances.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub instances: usize,
    pub failure_count: usize,
    /// The first few failing instances.
    pub failures: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self { name, instances: 0, failure_count: 0, failures: Vec::new() }
    }

    fn record(&mut self, outcome: Result<bool, VerifyError>, describe: impl FnOnce() -> String) {
        self.instances += 1;
        let failure = match outcome {
            Ok(true) => return,
            Ok(false) => describe(),
            Err(e) => format!("{}: {e}", describe()),
        };
        self.failure_count += 1;
        if self.failures.len() < MAX_REPORTED_FAILURES {
            self.failures.push(failure);
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let checks = match suite {
        Suite::Interlacing => interlacing(&mut rng),
        Suite::Neutrino => neutrino(&mut rng),
        Suite::Onesum => onesum(&mut rng),
        Suite::CorrespondenceP2 => correspondence(Sign::Plus),
        Suite::CorrespondenceP3 => correspondence(Sign::Minus),
        Suite::Quotient => quotient(),
    };
    SuiteReport { suite, seed, checks }
}

fn describe_graph(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v, _)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.order(), edges.join(" "))
}

fn interlacing(rng: &mut ChaCha8Rng) -> Vec<Check> {
    let mut cauchy = Check::new("cauchy");
    for _ in 0..200 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(rng, n, p);
        let v = rng.gen_range(0..n);
        cauchy.record(check_cauchy_deletion(&g.adjacency::<f64>(), &[v]), || format!("{} minus {v}", describe_graph(&g)));
    }
    let mut weyl = Check::new("weyl");
    let mut kyfan = Check::new("kyfan");
    for _ in 0..200 {
        let n = rng.gen_range(1..=8);
        let a: Matrix<f64> = random_symmetric(rng, n);
        let b: Matrix<f64> = random_symmetric(rng, n);
        weyl.record(check_weyl(&a, &b), || format!("order {n}"));
        kyfan.record(check_kyfan(&a, &b), || format!("order {n}"));
    }
    let mut monotone = Check::new("walk-module-loop-monotone");
    for m in marked_connected_graphs(5) {
        let outcome = walk_module_matrix::<f64>(&m.graph, m.vertex).map_err(VerifyError::from).and_then(|w| {
            let mut e = vec![0.0; w.rows()];
            e[0] = 1.0;
            check_rank_one_monotone(&w, &e)
        });
        monotone.record(outcome, || format!("{} at {}", describe_graph(&m.graph), m.vertex));
    }
    vec![cauchy, weyl, kyfan, monotone]
}

fn neutrino(rng: &mut ChaCha8Rng) -> Vec<Check> {
    let mut entries = Check::new("projector-entries");
    for _ in 0..100 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.2..0.6);
        let g = random_graph(rng, n, p);
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        let outcome = (|| -> Result<bool, VerifyError> {
            let dec = decompose::<f64>(&g, None)?;
            for (u, v) in [(a, a), (a, b)] {
                let residues = neutrino_residues(&g, u, v)?;
                if residues.len() != dec.len() {
                    return Ok(false);
                }
                // residues ascend, the decomposition descends
                for (r, &(theta, exact)) in residues.iter().rev().enumerate() {
                    if (theta - dec.eigenvalues[r]).abs() > 1e-7 || (exact - dec.entry(r, u, v)).abs() > 1e-7 {
                        return Ok(false);
                    }
                }
            }
            let theta = dec.eigenvalues[0];
            Ok((projector_entry_via_neutrino(&g, a, b, theta)? - dec.entry(0, a, b)).abs() <= 1e-7)
        })();
        entries.record(outcome, || format!("{} at ({a}, {b})", describe_graph(&g)));
    }
    let mut squared = Check::new("path-sum-squared");
    for _ in 0..200 {
        let n = rng.gen_range(2..=8);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(rng, n, p);
        let a = rng.gen_range(0..n);
        let b = (a + rng.gen_range(1..n)) % n;
        let outcome = (|| -> Result<bool, VerifyError> {
            let s = path_sum_poly(&g, a, b)?;
            let rhs = &(&charpoly_deleted(&g, &[a])? * &charpoly_deleted(&g, &[b])?)
                - &(&charpoly(&g)? * &charpoly_deleted(&g, &[a, b])?);
            Ok(&s * &s == rhs)
        })();
        squared.record(outcome, || format!("{} at ({a}, {b})", describe_graph(&g)));
    }
    vec![entries, squared]
}

fn onesum(rng: &mut ChaCha8Rng) -> Vec<Check> {
    let mut lemma = Check::new("one-sum-charpoly");
    let mut additivity = Check::new("return-walk-additivity");
    for _ in 0..200 {
        let n1 = rng.gen_range(1..=5);
        let n2 = rng.gen_range(1..=(9 - n1).min(5));
        let p = rng.gen_range(0.2..0.8);
        let y1 = random_graph(rng, n1, p);
        let p = rng.gen_range(0.2..0.8);
        let y2 = random_graph(rng, n2, p);
        let (a, b) = (rng.gen_range(0..n1), rng.gen_range(0..n2));
        let describe = || format!("{} at {a} with {} at {b}", describe_graph(&y1), describe_graph(&y2));
        let outcome = (|| -> Result<(bool, bool), VerifyError> {
            let (g, v) = one_sum(&y1, a, &y2, b)?;
            let predicted = one_sum_charpoly(&charpoly(&y1)?, &charpoly_deleted(&y1, &[a])?, &charpoly(&y2)?, &charpoly_deleted(&y2, &[b])?);
            let sum = &return_walk_gf(&y1, a)? + &return_walk_gf(&y2, b)?;
            Ok((predicted == charpoly(&g)?, sum == return_walk_gf(&g, v)?))
        })();
        lemma.record(outcome.clone().map(|o| o.0), describe);
        additivity.record(outcome.map(|o| o.1), describe);
    }
    let mut factor = Check::new("bridge-factorization");
    for k in 0..200 {
        let three = k % 2 == 1;
        let n = rng.gen_range(1..=if three { 3 } else { 4 });
        let p = rng.gen_range(0.2..0.8);
        let y1 = random_connected_graph(rng, n, p);
        let a = rng.gen_range(0..n);
        let perm = random_permutation(rng, n);
        let y2 = y1.permuted(&perm);
        let b = perm[a];
        let outcome = (|| -> Result<bool, VerifyError> {
            let (p1, d1, p2, d2) =
                (charpoly(&y1)?, charpoly_deleted(&y1, &[a])?, charpoly(&y2)?, charpoly_deleted(&y2, &[b])?);
            if !walk_equivalent(&d1, &p1, &d2, &p2) {
                return Ok(false);
            }
            let z = compose_bridge(&CompositionSpec { y1: &y1, a, y2: &y2, b, bridge_vertices: if three { 3 } else { 2 } })?;
            let phi_z = charpoly(&z.graph)?;
            Ok(if three {
                phi_z == bridge_charpoly_p3(&p1, &d1, &p2, &d2) && phi_z == &p1 * &pendant_sqrt2_charpoly(&p2, &d2)
            } else {
                phi_z == bridge_charpoly_p2(&p1, &d1, &p2, &d2)
                    && phi_z == &loop_adjusted_charpoly(&p1, &d1, Sign::Plus) * &loop_adjusted_charpoly(&p2, &d2, Sign::Minus)
                    && phi_z == &loop_adjusted_charpoly(&p1, &d1, Sign::Minus) * &loop_adjusted_charpoly(&p2, &d2, Sign::Plus)
            })
        })();
        factor.record(outcome, || format!("{} at {a}, bridge on {} vertices", describe_graph(&y1), if three { 3 } else { 2 }));
    }
    vec![lemma, additivity, factor]
}

/// Every connected `Y` on at most five vertices, joined to a copy of itself
/// at walk-equivalent vertices `a`, `b`; `Sign::Plus` selects the one-edge
/// bridge, `Sign::Minus` the two-edge bridge.
fn correspondence(which: Sign) -> Vec<Check> {
    let name = if which == Sign::Plus { "support-correspondence-p2" } else { "support-correspondence-p3" };
    let mut check = Check::new(name);
    for n in 1..=5 {
        for y in connected_graphs(n) {
            let deleted: Vec<_> = (0..n).map(|v| charpoly_deleted(&y, &[v]).expect("simple graph")).collect();
            for a in orbit_representatives(&y) {
                for b in (0..n).filter(|&b| deleted[b] == deleted[a]) {
                    let outcome = if which == Sign::Plus {
                        verify_support_correspondence_p2(&y, a, &y, b)
                    } else {
                        verify_support_correspondence_p3(&y, a, &y, b)
                    };
                    check.record(outcome.map(|r| r.holds()), || format!("{} at ({a}, {b})", describe_graph(&y)));
                }
            }
        }
    }
    vec![check]
}

fn quotient() -> Vec<Check> {
    let embedded = |g: &Graph, cells: &[Vec<usize>]| -> Result<bool, VerifyError> {
        let q = equitable_quotient(g, cells)?;
        let spectrum = eigenvalues_desc(&g.adjacency::<f64>())?;
        Ok(q.eigenvalues().iter().all(|t| spectrum.iter().any(|s| (s - t).abs() <= 1e-8)))
    };
    let mut stars = Check::new("star-quotients");
    for k in 1..=8 {
        let g = build_star(k);
        let outcome = equitable_quotient(&g, &[vec![0], (1..=k).collect()]).map(|q| {
            let r = (k as f64).sqrt();
            (q.quotient[(0, 1)] - r).abs() < 1e-12 && q.quotient[(0, 0)] == 0.0 && q.quotient[(1, 1)] == 0.0
        });
        stars.record(outcome, || format!("star with {k} leaves"));
    }
    let mut double_stars = Check::new("double-star-quotients");
    for k in 1..=6 {
        for l in 1..=6 {
            let (g, a, b) = build_double_star(k, l);
            let cells = vec![(2..2 + k).collect(), vec![a], vec![b], (2 + k..2 + k + l).collect()];
            double_stars.record(embedded(&g, &cells), || format!("double star ({k}, {l})"));
            let (g, a, b) = build_extended_double_star(k, l);
            let cells = vec![(3..3 + k).collect(), vec![a], vec![2], vec![b], (3 + k..3 + k + l).collect()];
            double_stars.record(embedded(&g, &cells), || format!("extended double star ({k}, {l})"));
        }
    }
    let mut relations = Check::new("cone-quotient-relations");
    let mut pendant = Check::new("pendant-cone-quotients");
    for n in 1..=8 {
        for k in 0..n {
            if k % 2 == 1 && n % 2 == 1 {
                continue;
            }
            relations.record(verify_double_star_quotient_relations(k, n).map(|r| r.holds()), || format!("k={k} n={n}"));
            pendant.record(pendant_cone_quotient(n, k), || format!("k={k} n={n}"));
        }
    }
    vec![stars, double_stars, relations, pendant]
}

/// Cone over a `k`-regular graph on `n` vertices with a pendant of weight
/// `sqrt 2` at the apex: quotient `[[0, sqrt2, 0], [sqrt2, 0, sqrt n], [0, sqrt n, k]]`
/// whose eigenvalues occur in the graph, with `0` among them iff `k = 0`.
fn pendant_cone_quotient(n: usize, k: usize) -> Result<bool, VerifyError> {
    let base = super::regular_graph(n, k)?;
    let mut edges: Vec<(usize, usize, f64)> = base.edges().into_iter().map(|(u, v, w)| (u + 1, v + 1, w)).collect();
    edges.extend((1..=n).map(|v| (0, v, 1.0)));
    let cone = Graph::from_weighted_edges(n + 1, &edges, &[])?;
    let z1 = cone.with_pendant(0, 2f64.sqrt())?;
    let cells = vec![vec![n + 1], vec![0], (1..=n).collect()];
    let q = equitable_quotient(&z1, &cells)?;
    let (r2, rn) = (2f64.sqrt(), (n as f64).sqrt());
    let want = Matrix::from_rows(&[vec![0.0, r2, 0.0], vec![r2, 0.0, rn], vec![0.0, rn, k as f64]])?;
    let spectrum = eigenvalues_desc(&z1.adjacency::<f64>())?;
    let theta = q.eigenvalues();
    let zero = theta.iter().any(|t| t.abs() < 1e-9);
    Ok(q.quotient.max_abs_diff(&want) < 1e-12
        && theta.iter().all(|t| spectrum.iter().any(|s| (s - t).abs() <= 1e-8))
        && zero == (k == 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("nope"), None);
    }

    #[test]
    fn quotient_suite_passes() {
        let r = run_suite(Suite::Quotient, DEFAULT_SEED);
        assert!(r.passed(), "{:#?}", r.checks);
    }
}
