use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    json: Option<Value>,
    stderr: String,
}

fn qwalk(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qwalk"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    let Output { status, stdout, stderr } = child.wait_with_output().unwrap();
    let stdout = String::from_utf8(stdout).unwrap();
    Run {
        code: status.code().unwrap(),
        json: serde_json::from_str(&stdout).ok(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Self { dir: TempDir::new().unwrap() }
    }

    fn write(&self, name: &str, text: &str) -> String {
        let path: PathBuf = self.dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        path.to_str().unwrap().to_string()
    }

    fn path_graph(&self, n: usize) -> String {
        let mut text = format!("{n} {}\n", n - 1);
        for i in 0..n - 1 {
            text.push_str(&format!("{i} {}\n", i + 1));
        }
        self.write(&format!("p{n}.txt"), &text)
    }

    fn k1(&self) -> String {
        self.write("k1.txt", "1 0\n")
    }

    fn c4(&self) -> String {
        self.write("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n")
    }
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect()
}

fn floats(v: &Value) -> Vec<f64> {
    v.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect()
}

#[test]
fn report_envelope() {
    let f = Files::new();
    let run = qwalk(&["charpoly", &f.path_graph(3)], None);
    assert_eq!(run.code, 0);
    let j = run.json.unwrap();
    assert_eq!(j["schema_version"], 1);
    assert_eq!(j["command"]["name"], "charpoly");
    assert_eq!(j["input_digest"].as_str().unwrap().len(), 64);
    assert!(j["wall_time_seconds"].as_f64().unwrap() >= 0.0);
    assert_eq!(j["tolerances"]["fidelity"].as_f64(), Some(1e-9));
    assert!(run.stderr.contains("t^3"));
}

#[test]
fn charpoly_examples() {
    let f = Files::new();
    let p3 = f.path_graph(3);
    let j = qwalk(&["charpoly", &p3], None).json.unwrap();
    assert_eq!(ints(&j["result"]["charpoly"]), [0, -2, 0, 1]);
    let j = qwalk(&["charpoly", &f.k1()], None).json.unwrap();
    assert_eq!(ints(&j["result"]["charpoly"]), [0, 1]);
    let j = qwalk(&["charpoly", &p3, "--deleted", "1", "--deleted", "0,2"], None).json.unwrap();
    let rows = j["result"]["deleted"].as_array().unwrap();
    assert_eq!(ints(&rows[0]["charpoly"]), [0, 0, 1]);
    assert_eq!(ints(&rows[1]["removed"]), [0, 2]);
    assert_eq!(ints(&rows[1]["charpoly"]), [0, 1]);
}

#[test]
fn charpoly_rejects_fractional_weights() {
    let f = Files::new();
    let g = f.write("w.txt", "2 1\n0 1 0.5\n");
    let run = qwalk(&["charpoly", &g], None);
    assert_eq!(run.code, 2);
    assert!(run.json.is_none());
}

#[test]
fn charpoly_reads_stdin_graph6() {
    // graph6 for K3
    let run = qwalk(&["charpoly", "-"], Some("Bw\n"));
    assert_eq!(run.code, 0);
    assert_eq!(ints(&run.json.unwrap()["result"]["charpoly"]), [-2, -3, 0, 1]);
}

#[test]
fn digest_tracks_input() {
    let f = Files::new();
    let a = qwalk(&["charpoly", &f.path_graph(3)], None).json.unwrap();
    let b = qwalk(&["charpoly", &f.path_graph(4)], None).json.unwrap();
    let c = qwalk(&["charpoly", "-"], Some("3 2\n0 1\n1 2\n")).json.unwrap();
    assert_ne!(a["input_digest"], b["input_digest"]);
    assert_eq!(a["input_digest"], c["input_digest"]);
}

#[test]
fn spectrum_examples() {
    let f = Files::new();
    let j = qwalk(&["spectrum", &f.path_graph(2)], None).json.unwrap();
    assert_eq!(floats(&j["result"]["eigenvalues"]), [1.0, -1.0]);
    let j = qwalk(&["spectrum", &f.k1()], None).json.unwrap();
    assert_eq!(floats(&j["result"]["eigenvalues"]), [0.0]);
    let j = qwalk(&["spectrum", &f.c4()], None).json.unwrap();
    assert_eq!(floats(&j["result"]["eigenvalues"]), [2.0, 0.0, 0.0, -2.0]);
    assert_eq!(floats(&j["result"]["distinct"]), [2.0, 0.0, -2.0]);
    assert_eq!(ints(&j["result"]["multiplicities"]), [1, 2, 1]);
}

#[test]
fn spectrum_floats_have_twelve_digits() {
    let f = Files::new();
    let j = qwalk(&["spectrum", &f.path_graph(3)], None).json.unwrap();
    let top = j["result"]["eigenvalues"][0].to_string();
    assert_eq!(top, "1.41421356237");
}

#[test]
fn cospectral_examples() {
    let f = Files::new();
    let p3 = f.path_graph(3);
    let j = qwalk(&["cospectral", &p3, "0", "2", "--strong"], None).json.unwrap();
    assert_eq!(j["result"]["cospectral"], true);
    assert_eq!(j["result"]["strongly_cospectral"], true);
    assert_eq!(j["result"]["signature"]["entries"].as_array().unwrap().len(), 3);

    let j = qwalk(&["cospectral", &f.c4(), "0", "1", "--strong"], None).json.unwrap();
    assert_eq!(j["result"]["cospectral"], true);
    assert_eq!(j["result"]["strongly_cospectral"], false);

    let j = qwalk(&["cospectral", &p3, "0", "1"], None).json.unwrap();
    assert_eq!(j["result"]["cospectral"], false);
    assert!(j["result"].get("strongly_cospectral").is_none());
}

#[test]
fn pst_examples() {
    let f = Files::new();
    let run = qwalk(&["pst", &f.path_graph(2), "0", "1"], None);
    assert_eq!(run.code, 0);
    let j = run.json.unwrap();
    let cert = &j["result"]["certificate"];
    assert_eq!(cert["status"], "success");
    let t = cert["pst_time"].as_f64().unwrap();
    assert!((t - std::f64::consts::FRAC_PI_2).abs() < 1e-10);
    let conf = j["result"]["confirmation"].as_array().unwrap();
    assert_eq!(conf.len(), 3);
    for c in conf {
        assert!(c["fidelity"].as_f64().unwrap() >= 1.0 - 1e-9);
    }

    let j = qwalk(&["pst", &f.path_graph(4), "1", "2"], None).json.unwrap();
    assert_eq!(j["result"]["certificate"]["status"], "fail");
    assert_eq!(j["result"]["certificate"]["failure_reason"], "no_common_alpha");
    assert!(j["result"]["confirmation"].as_array().unwrap().is_empty());

    // double star S_{2,2}: centers 0 and 1, leaves 2,3 on 0 and 4,5 on 1
    let ds = f.write("ds.txt", "6 5\n0 1\n0 2\n0 3\n1 4\n1 5\n");
    let j = qwalk(&["pst", &ds, "0", "1"], None).json.unwrap();
    assert_eq!(j["result"]["certificate"]["status"], "fail");
}

#[test]
fn pst_p3_end_to_end() {
    let f = Files::new();
    let j = qwalk(&["pst", &f.path_graph(3), "0", "2"], None).json.unwrap();
    let t = j["result"]["certificate"]["pst_time"].as_f64().unwrap();
    assert!((t - std::f64::consts::PI / 2f64.sqrt()).abs() < 1e-10);
}

#[test]
fn input_errors_exit_two() {
    let f = Files::new();
    let p3 = f.path_graph(3);
    assert_eq!(qwalk(&["pst", &p3, "0", "7"], None).code, 2);
    assert_eq!(qwalk(&["pst", &p3, "1", "1"], None).code, 2);
    assert_eq!(qwalk(&["cospectral", &p3, "1", "1", "--strong"], None).code, 2);
    assert_eq!(qwalk(&["charpoly", &p3, "--deleted", "x"], None).code, 2);
    assert_eq!(qwalk(&["charpoly", "/nonexistent/graph.txt"], None).code, 2);
    let bad = f.write("bad.txt", "3 1\n0 5\n");
    assert_eq!(qwalk(&["spectrum", &bad], None).code, 2);
    assert_eq!(qwalk(&["search", "--bridge", "2", "--max-n", "9"], None).code, 2);
    assert_eq!(qwalk(&["search", "--bridge", "2"], None).code, 2);
    assert_eq!(qwalk(&["verify", "--suite", "nonsense"], None).code, 2);
    assert_eq!(qwalk(&["compose", "--y1", &p3, "--a", "0", "--y2", &p3, "--b", "0", "--bridge", "1"], None).code, 2);
}

#[test]
fn compose_examples() {
    let f = Files::new();
    let k1 = f.k1();
    let j = qwalk(&["compose", "--y1", &k1, "--a", "0", "--y2", &k1, "--b", "0", "--bridge", "2"], None)
        .json
        .unwrap();
    assert_eq!(j["result"]["order"], 2);
    assert_eq!(j["result"]["pst"]["certificate"]["status"], "success");
    let edgelist = j["result"]["edgelist"].as_str().unwrap();
    let again = qwalk(&["charpoly", "-"], Some(edgelist)).json.unwrap();
    assert_eq!(ints(&again["result"]["charpoly"]), [-1, 0, 1]);

    let s2 = f.write("s2.txt", "3 2\n0 1\n0 2\n");
    let j = qwalk(&["compose", "--y1", &s2, "--a", "0", "--y2", &s2, "--b", "0", "--bridge", "2"], None)
        .json
        .unwrap();
    assert_eq!(j["result"]["order"], 6);
    assert_eq!(j["result"]["strongly_cospectral"], true);
    assert_eq!(j["result"]["pst"]["certificate"]["status"], "fail");

    let s1 = f.path_graph(2);
    let j = qwalk(&["compose", "--y1", &s1, "--a", "0", "--y2", &s1, "--b", "0", "--bridge", "3"], None)
        .json
        .unwrap();
    assert_eq!(j["result"]["order"], 5);
    assert_eq!(ints(&j["result"]["interior"]), [4]);
}

#[test]
fn search_examples() {
    let run = qwalk(&["search", "--bridge", "2", "--max-n", "1"], None);
    assert_eq!(run.code, 0);
    let j = run.json.unwrap();
    let successes = j["result"]["pst_successes"].as_array().unwrap();
    assert_eq!(successes.len(), 1);
    assert_eq!(successes[0]["trivial"], true);

    for (bridge, n) in [("2", "4"), ("3", "3")] {
        let run = qwalk(&["search", "--bridge", bridge, "--max-n", n], None);
        assert_eq!(run.code, 0);
        let j = run.json.unwrap();
        let nontrivial = j["result"]["pst_successes"].as_array().unwrap().iter().filter(|s| s["trivial"] == false).count();
        assert_eq!(nontrivial, 0);
    }
}

#[test]
fn search_from_graph6_stdin() {
    // K1, K2, P3, K3
    let run = qwalk(&["search", "--bridge", "3", "--stdin-graph6", "--jobs", "2"], Some("@\nA_\nBW\nBw\n"));
    assert_eq!(run.code, 0);
    let j = run.json.unwrap();
    assert_eq!(j["result"]["marked_graphs"], 5);
    assert_eq!(j["result"]["instances_tested"], 25);
    assert!(j["input_digest"].is_string());
}

#[test]
fn search_is_deterministic_across_jobs() {
    let strip = |mut j: Value| {
        j["result"].take()
    };
    let one = strip(qwalk(&["search", "--bridge", "2", "--max-n", "4", "--jobs", "1"], None).json.unwrap());
    let four = strip(qwalk(&["search", "--bridge", "2", "--max-n", "4", "--jobs", "4"], None).json.unwrap());
    assert_eq!(one, four);
}

#[test]
fn verify_suites() {
    for suite in ["onesum", "neutrino", "interlacing"] {
        let run = qwalk(&["verify", "--suite", suite], None);
        assert_eq!(run.code, 0, "{suite}: {}", run.stderr);
        let j = run.json.unwrap();
        assert_eq!(j["result"]["passed"], true);
        assert!(j["input_digest"].is_null());
    }
}

#[test]
fn tolerance_flags_are_echoed() {
    let f = Files::new();
    let j = qwalk(&["spectrum", &f.c4(), "--tol-support", "1e-5", "--tol-grouping", "1e-6"], None).json.unwrap();
    assert_eq!(j["tolerances"]["support"].as_f64(), Some(1e-5));
    assert_eq!(j["tolerances"]["grouping"].as_f64(), Some(1e-6));
}

#[test]
fn repeated_runs_match() {
    let f = Files::new();
    let c4 = f.c4();
    let mut a = qwalk(&["pst", &c4, "0", "2"], None).json.unwrap();
    let mut b = qwalk(&["pst", &c4, "0", "2"], None).json.unwrap();
    a["wall_time_seconds"].take();
    b["wall_time_seconds"].take();
    assert_eq!(a, b);
    assert_eq!(a["result"]["certificate"]["status"], "success");
}
