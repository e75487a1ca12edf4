use std::fmt;
use std::io::Read;
use std::time::Instant;

use qwalk::graph::enumerate::MAX_BUILTIN_ORDER;
use qwalk::graph::io::{parse_graph, parse_graph6_stream, serialize_graph, GraphFormat};
use qwalk::graph::{compose_bridge, enumerate::mark_all, CompositionSpec};
use qwalk::poly::{charpoly, charpoly_deleted};
use qwalk::pst::{evolve_fidelity, pst_certificate_with};
use qwalk::spectral::{cospectral, decompose, strongly_cospectral, SpectralError};
use qwalk::verify::suites::{run_suite, Suite};
use qwalk::verify::{search_no_pst, Bridge, GraphSource, SearchOptions, VerifyError};
use qwalk::{Graph, GraphError, PolyError, PstError, SpectralDecomposition, Tolerances};
use serde_json::{json, Value};

use crate::report::{poly_json, Command, Report};
use crate::{Cli, Cmd};

/// Multiples of the certified time at which fidelity is re-checked.
const CONFIRMATION_MULTIPLES: [f64; 3] = [1.0, 3.0, 5.0];

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or invalid input; exit code 2.
    Input(String),
    /// A computation failed on valid input; exit code 1.
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Math(m) => f.write_str(m),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::NonInteger | PolyError::Graph(_) => CliError::Input(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        match e {
            SpectralError::Graph(g) => g.into(),
            SpectralError::Poly(p) => p.into(),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<PstError> for CliError {
    fn from(e: PstError) -> Self {
        match e {
            PstError::Spectral(s) => s.into(),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Graph(g) => g.into(),
            VerifyError::Poly(p) => p.into(),
            VerifyError::Spectral(s) => s.into(),
            VerifyError::Pst(p) => p.into(),
            _ => CliError::Math(e.to_string()),
        }
    }
}

pub struct Outcome {
    pub json: String,
    pub summary: String,
    /// Exit 0 when true, 1 otherwise.
    pub expected: bool,
}

struct Input {
    bytes: Vec<u8>,
    graph: Graph,
}

fn read_source(path: &str) -> Result<Vec<u8>, CliError> {
    let mut bytes = Vec::new();
    let res = if path == "-" {
        std::io::stdin().read_to_end(&mut bytes).map(|_| ())
    } else {
        std::fs::read(path).map(|b| bytes = b)
    };
    res.map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?;
    Ok(bytes)
}

fn load_graph(path: &str) -> Result<Input, CliError> {
    let bytes = read_source(path)?;
    let text = std::str::from_utf8(&bytes).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    let graph = parse_graph(text, GraphFormat::detect(text))?;
    Ok(Input { bytes, graph })
}

fn check_pair(g: &Graph, a: usize, b: usize) -> Result<(), CliError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(GraphError::SameVertex(a).into());
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let tol = cli.tol.tolerances();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (name, inputs, result, summary, expected) = match &cli.command {
        Cmd::Charpoly { file, deleted } => {
            let input = load_graph(file)?;
            let (result, summary) = cmd_charpoly(&input.graph, deleted)?;
            ("charpoly", vec![input.bytes], result, summary, true)
        }
        Cmd::Spectrum { file, tol: grouping } => {
            let input = load_graph(file)?;
            let (result, summary) = cmd_spectrum(&input.graph, grouping.or(tol.grouping))?;
            ("spectrum", vec![input.bytes], result, summary, true)
        }
        Cmd::Cospectral { file, a, b, strong } => {
            let input = load_graph(file)?;
            let (result, summary) = cmd_cospectral(&input.graph, *a, *b, *strong, &tol)?;
            ("cospectral", vec![input.bytes], result, summary, true)
        }
        Cmd::Pst { file, a, b } => {
            let input = load_graph(file)?;
            let (result, summary, ok) = cmd_pst(&input.graph, *a, *b, &tol)?;
            ("pst", vec![input.bytes], result, summary, ok)
        }
        Cmd::Compose { y1, a, y2, b, bridge } => {
            let first = load_graph(y1)?;
            let second = load_graph(y2)?;
            let (result, summary, ok) = cmd_compose(&first.graph, *a, &second.graph, *b, *bridge, &tol)?;
            ("compose", vec![first.bytes, second.bytes], result, summary, ok)
        }
        Cmd::Search { bridge, max_n, stdin_graph6, jobs } => {
            let (bytes, result, summary, ok) = cmd_search(*bridge, *max_n, *stdin_graph6, *jobs, &tol)?;
            ("search", bytes.into_iter().collect(), result, summary, ok)
        }
        Cmd::Verify { suite, seed } => {
            let (result, summary, ok) = cmd_verify(suite, *seed)?;
            ("verify", Vec::new(), result, summary, ok)
        }
    };
    let refs: Vec<&[u8]> = inputs.iter().map(Vec::as_slice).collect();
    let report = Report::new(Command { name, args }, &refs, result, tol, start.elapsed());
    Ok(Outcome { json: report.to_json(), summary, expected })
}

fn cmd_charpoly(g: &Graph, deleted: &[String]) -> Result<(Value, String), CliError> {
    let full = charpoly(g)?;
    let mut summary = format!("phi(t) = {}", full.pretty());
    let mut rows = Vec::new();
    for spec in deleted {
        let removed = parse_vertex_list(spec)?;
        for &v in &removed {
            g.check_vertex(v)?;
        }
        let p = charpoly_deleted(g, &removed)?;
        summary.push_str(&format!("\nphi(G - {removed:?})(t) = {}", p.pretty()));
        rows.push(json!({ "removed": removed, "charpoly": poly_json(&p) }));
    }
    Ok((json!({ "order": g.order(), "charpoly": poly_json(&full), "deleted": rows }), summary))
}

fn parse_vertex_list(spec: &str) -> Result<Vec<usize>, CliError> {
    let mut out: Vec<usize> = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| CliError::Input(format!("bad vertex '{s}' in --deleted"))))
        .collect::<Result<_, _>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn cmd_spectrum(g: &Graph, grouping: Option<f64>) -> Result<(Value, String), CliError> {
    let mut dec: SpectralDecomposition = decompose(g, grouping)?;
    // Values within the grouping gap of an integer are reported as that integer.
    let gap = dec.grouping_tolerance;
    for e in &mut dec.eigenvalues {
        if (*e - e.round()).abs() <= gap {
            *e = e.round() + 0.0;
        }
    }
    let expanded: Vec<f64> = dec
        .eigenvalues
        .iter()
        .zip(&dec.multiplicities)
        .flat_map(|(&e, &m)| std::iter::repeat_n(e, m))
        .collect();
    let summary = dec
        .eigenvalues
        .iter()
        .zip(&dec.multiplicities)
        .map(|(e, m)| format!("{e:.6} (x{m})"))
        .collect::<Vec<_>>()
        .join(", ");
    let result = json!({
        "order": g.order(),
        "eigenvalues": expanded,
        "distinct": dec.eigenvalues,
        "multiplicities": dec.multiplicities,
        "grouping_tolerance": dec.grouping_tolerance,
    });
    Ok((result, format!("spectrum: {summary}")))
}

fn cmd_cospectral(g: &Graph, a: usize, b: usize, strong: bool, tol: &Tolerances) -> Result<(Value, String), CliError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    let co = cospectral(g, a, b)?;
    let mut result = json!({ "a": a, "b": b, "cospectral": co });
    let mut summary = format!("({a}, {b}) cospectral: {co}");
    if strong {
        if a == b {
            return Err(GraphError::SameVertex(a).into());
        }
        let (sc, signature) = strongly_cospectral(g, a, b, tol)?;
        result["strongly_cospectral"] = json!(sc);
        result["signature"] = serde_json::to_value(&signature).expect("signature serializes");
        summary.push_str(&format!(", strongly cospectral: {sc}"));
    }
    Ok((result, summary))
}

/// Certificate plus fidelity at odd multiples of the certified time. The
/// outcome is unexpected only when a certified time fails to transfer.
fn pst_analysis(g: &Graph, a: usize, b: usize, tol: &Tolerances) -> Result<(Value, String, bool), CliError> {
    let cert = match pst_certificate_with(g, a, b, tol) {
        Ok(c) => c,
        Err(PstError::Verification { time, fidelity }) => {
            let result = json!({ "verification_failed": { "time": time, "fidelity": fidelity } });
            return Ok((result, format!("certified time {time} gives fidelity {fidelity}"), false));
        }
        Err(e) => return Err(e.into()),
    };
    let mut confirmations = Vec::new();
    let mut ok = true;
    if let Some(t) = cert.pst_time {
        for k in CONFIRMATION_MULTIPLES {
            let f = evolve_fidelity(g, a, b, k * t)?;
            ok &= f >= 1.0 - tol.fidelity;
            confirmations.push(json!({ "time": k * t, "fidelity": f }));
        }
    }
    let summary = match (&cert.failure_reason, cert.pst_time) {
        (None, Some(t)) => format!("({a}, {b}) perfect state transfer at t = {t:.9}"),
        (Some(r), _) => format!("({a}, {b}) no perfect state transfer: {}", r.as_str()),
        (None, None) => format!("({a}, {b}) certificate without a time"),
    };
    let result = json!({
        "a": a,
        "b": b,
        "certificate": serde_json::to_value(&cert).expect("certificate serializes"),
        "confirmation": confirmations,
    });
    Ok((result, summary, ok))
}

fn cmd_pst(g: &Graph, a: usize, b: usize, tol: &Tolerances) -> Result<(Value, String, bool), CliError> {
    check_pair(g, a, b)?;
    pst_analysis(g, a, b, tol)
}

fn cmd_compose(
    y1: &Graph,
    a: usize,
    y2: &Graph,
    b: usize,
    bridge: usize,
    tol: &Tolerances,
) -> Result<(Value, String, bool), CliError> {
    let comp = compose_bridge(&CompositionSpec { y1, a, y2, b, bridge_vertices: bridge })?;
    let z = &comp.graph;
    let edgelist = serialize_graph(z, GraphFormat::Edgelist)?;
    let co = cospectral(z, comp.a, comp.b)?;
    let (sc, _) = strongly_cospectral(z, comp.a, comp.b, tol)?;
    let (pst, pst_summary, ok) = pst_analysis(z, comp.a, comp.b, tol)?;
    let result = json!({
        "order": z.order(),
        "a": comp.a,
        "b": comp.b,
        "interior": comp.interior,
        "edgelist": edgelist,
        "cospectral": co,
        "strongly_cospectral": sc,
        "pst": pst,
    });
    let summary = format!(
        "composed graph on {} vertices, marked ({}, {}); cospectral {co}, strongly cospectral {sc}\n{pst_summary}",
        z.order(),
        comp.a,
        comp.b
    );
    Ok((result, summary, ok))
}

#[allow(clippy::type_complexity)]
fn cmd_search(
    bridge: u8,
    max_n: Option<usize>,
    stdin_graph6: bool,
    jobs: usize,
    tol: &Tolerances,
) -> Result<(Option<Vec<u8>>, Value, String, bool), CliError> {
    let bridge = if bridge == 2 { Bridge::P2 } else { Bridge::P3 };
    if jobs == 0 {
        return Err(CliError::Input("--jobs must be at least 1".into()));
    }
    let (bytes, source) = if stdin_graph6 {
        let bytes = read_source("-")?;
        let text = std::str::from_utf8(&bytes).map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        let graphs = parse_graph6_stream(text).into_iter().collect::<Result<Vec<_>, _>>()?;
        let kept = graphs.into_iter().filter(|g| max_n.is_none_or(|m| g.order() <= m));
        (Some(bytes), GraphSource::Marked(mark_all(kept)))
    } else {
        let max_n = max_n.ok_or_else(|| CliError::Input("--max-n is required without --stdin-graph6".into()))?;
        if max_n == 0 || max_n > MAX_BUILTIN_ORDER {
            return Err(CliError::Input(format!("--max-n must be between 1 and {MAX_BUILTIN_ORDER}")));
        }
        (None, GraphSource::Builtin { max_n })
    };
    let options = SearchOptions { bridge, jobs, tolerances: *tol };
    let report = search_no_pst(&source, &options)?;
    let ok = report.expected_outcome();
    let summary = format!(
        "{} instances, {} strongly cospectral, {} transfer(s), {} nontrivial",
        report.instances_tested,
        report.strongly_cospectral_pairs,
        report.pst_successes.len(),
        report.nontrivial_successes()
    );
    let result = serde_json::to_value(&report).expect("search report serializes");
    Ok((bytes, result, summary, ok))
}

fn cmd_verify(name: &str, seed: u64) -> Result<(Value, String, bool), CliError> {
    let suite = Suite::from_name(name).ok_or_else(|| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        CliError::Input(format!("unknown suite '{name}' (expected one of {})", names.join(", ")))
    })?;
    let report = run_suite(suite, seed);
    let lines: Vec<String> = report
        .checks
        .iter()
        .map(|c| format!("{}: {} / {} failed", c.name, c.failure_count, c.instances))
        .collect();
    let passed = report.passed();
    let summary = format!("suite {} {}\n{}", suite.name(), if passed { "passed" } else { "FAILED" }, lines.join("\n"));
    let mut result = serde_json::to_value(&report).expect("suite report serializes");
    result["passed"] = json!(passed);
    Ok((result, summary, passed))
}
