use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::VerifyError;
use crate::graph::enumerate::marked_connected_graphs;
use crate::graph::{compose_bridge, CompositionSpec, MarkedGraph};
use crate::pst::{fidelity_scan, pst_certificate_with, FailureReason, PstCertificate};
use crate::spectral::Tolerances;

/// Path joining the two marked vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Bridge {
    /// A single edge `a - b`.
    P2,
    /// A path `a - c - b` through one new vertex.
    P3,
}

impl Bridge {
    /// Vertices on the bridge path, endpoints included.
    pub fn path_vertices(self) -> usize {
        match self {
            Bridge::P2 => 2,
            Bridge::P3 => 3,
        }
    }
}

/// Where the marked graphs `(Y, v)` come from.
#[derive(Debug, Clone)]
pub enum GraphSource {
    /// Every connected graph on at most `max_n` vertices, one mark per orbit.
    Builtin { max_n: usize },
    /// An explicit list, e.g. decoded from a graph6 stream.
    Marked(Vec<MarkedGraph>),
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub bridge: Bridge,
    /// Worker threads; `1` runs on the calling thread.
    pub jobs: usize,
    pub tolerances: Tolerances,
}

impl SearchOptions {
    pub fn new(bridge: Bridge) -> Self {
        Self { bridge, jobs: 1, tolerances: Tolerances::default() }
    }
}

/// A composed graph with perfect state transfer between the marked vertices.
#[derive(Debug, Clone, Serialize)]
pub struct SearchSuccess {
    pub y1_order: usize,
    pub y1_edges: Vec<(usize, usize)>,
    pub a: usize,
    pub y2_order: usize,
    pub y2_edges: Vec<(usize, usize)>,
    pub b: usize,
    pub pst_time: f64,
    pub scan_fidelity: f64,
    /// Both sides are single vertices.
    pub trivial: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub bridge: Bridge,
    pub max_n: Option<usize>,
    pub marked_graphs: usize,
    pub instances_tested: usize,
    pub strongly_cospectral_pairs: usize,
    pub pst_successes: Vec<SearchSuccess>,
    pub failure_histogram: BTreeMap<FailureReason, usize>,
}

impl SearchReport {
    pub fn nontrivial_successes(&self) -> usize {
        self.pst_successes.iter().filter(|s| !s.trivial).count()
    }

    /// No transfer except between two single vertices.
    pub fn expected_outcome(&self) -> bool {
        self.nontrivial_successes() == 0
    }
}

/// Composes every ordered pair of marked graphs across the bridge and runs
/// the transfer certificate on the marked vertices. Successes are confirmed
/// by a fidelity scan over `[0, 2 t]`.
pub fn search_no_pst(source: &GraphSource, options: &SearchOptions) -> Result<SearchReport, VerifyError> {
    let (marked, max_n) = match source {
        GraphSource::Builtin { max_n } => (marked_connected_graphs(*max_n), Some(*max_n)),
        GraphSource::Marked(list) => (list.clone(), None),
    };
    let pairs: Vec<(usize, usize)> =
        (0..marked.len()).flat_map(|i| (0..marked.len()).map(move |j| (i, j))).collect();
    let run = |&(i, j): &(usize, usize)| test_pair(&marked[i], &marked[j], options);

    let outcomes: Vec<Result<Outcome, VerifyError>> = if options.jobs <= 1 {
        pairs.iter().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| pairs.par_iter().map(run).collect())
    };

    let mut report = SearchReport {
        bridge: options.bridge,
        max_n,
        marked_graphs: marked.len(),
        instances_tested: 0,
        strongly_cospectral_pairs: 0,
        pst_successes: Vec::new(),
        failure_histogram: BTreeMap::new(),
    };
    for outcome in outcomes {
        let outcome = outcome?;
        report.instances_tested += 1;
        if outcome.certificate.failure_reason != Some(FailureReason::NotStronglyCospectral) {
            report.strongly_cospectral_pairs += 1;
        }
        match outcome.certificate.failure_reason {
            Some(reason) => *report.failure_histogram.entry(reason).or_default() += 1,
            None => report.pst_successes.push(outcome.success.expect("success recorded")),
        }
    }
    Ok(report)
}

struct Outcome {
    certificate: PstCertificate,
    success: Option<SearchSuccess>,
}

fn test_pair(y1: &MarkedGraph, y2: &MarkedGraph, options: &SearchOptions) -> Result<Outcome, VerifyError> {
    let z = compose_bridge(&CompositionSpec {
        y1: &y1.graph,
        a: y1.vertex,
        y2: &y2.graph,
        b: y2.vertex,
        bridge_vertices: options.bridge.path_vertices(),
    })?;
    let certificate = pst_certificate_with(&z.graph, z.a, z.b, &options.tolerances)?;
    let success = match certificate.pst_time {
        Some(t) if certificate.is_success() => {
            let scan = fidelity_scan(&z.graph, z.a, z.b, 2.0 * t, 2000)?;
            if scan.fidelity < 1.0 - 1e-6 {
                return Err(VerifyError::UnconfirmedTransfer { fidelity: scan.fidelity });
            }
            let edges = |m: &MarkedGraph| m.graph.edges().into_iter().map(|(u, v, _)| (u, v)).collect();
            Some(SearchSuccess {
                y1_order: y1.graph.order(),
                y1_edges: edges(y1),
                a: y1.vertex,
                y2_order: y2.graph.order(),
                y2_edges: edges(y2),
                b: y2.vertex,
                pst_time: t,
                scan_fidelity: scan.fidelity,
                trivial: y1.graph.order() == 1 && y2.graph.order() == 1,
            })
        }
        _ => None,
    };
    Ok(Outcome { certificate, success })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertices() {
        for bridge in [Bridge::P2, Bridge::P3] {
            let r = search_no_pst(&GraphSource::Builtin { max_n: 1 }, &SearchOptions::new(bridge)).unwrap();
            assert_eq!(r.instances_tested, 1);
            assert_eq!(r.pst_successes.len(), 1);
            assert!(r.pst_successes[0].trivial);
            assert!(r.expected_outcome());
        }
    }

    #[test]
    fn order_two_p2() {
        let r = search_no_pst(&GraphSource::Builtin { max_n: 2 }, &SearchOptions::new(Bridge::P2)).unwrap();
        assert_eq!(r.marked_graphs, 2);
        assert_eq!(r.instances_tested, 4);
        assert_eq!(r.nontrivial_successes(), 0);
    }
}
