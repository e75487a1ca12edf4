//! Text formats: a weighted edge list and standard graph6.
//!
//! Edge list:
//!
//! ```text
//! n m
//! u v        (m edge lines, optional weight: u v w)
//! loop u w   (optional loop lines)
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Edgelist,
    Graph6,
}

impl GraphFormat {
    /// Guess the format of `text`: a first line of two integers is an edge list.
    pub fn detect(text: &str) -> Self {
        let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
        match first {
            Some(line) if line.split_whitespace().count() == 2
                && line.split_whitespace().all(|t| t.parse::<usize>().is_ok()) =>
            {
                GraphFormat::Edgelist
            }
            Some(line) if line.split_whitespace().count() > 1 => GraphFormat::Edgelist,
            _ => GraphFormat::Graph6,
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, GraphError> {
    match format {
        GraphFormat::Edgelist => parse_edgelist(text),
        GraphFormat::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty() && !l.starts_with(">>graph6<<"))
                .ok_or_else(|| parse_err(1, "empty graph6 input"))?;
            decode_graph6(line.strip_prefix(">>graph6<<").unwrap_or(line), 1)
        }
    }
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> Result<String, GraphError> {
    match format {
        GraphFormat::Edgelist => Ok(write_edgelist(g)),
        GraphFormat::Graph6 => encode_graph6(g).map(|mut s| {
            s.push('\n');
            s
        }),
    }
}

/// One graph per non-empty line; a leading `>>graph6<<` header is skipped.
pub fn parse_graph6_stream(text: &str) -> Vec<Result<Graph, GraphError>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let l = l.trim();
            decode_graph6(l.strip_prefix(">>graph6<<").unwrap_or(l), i + 1)
        })
        .collect()
}

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse { line, message: message.into() }
}

fn parse_edgelist(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header 'n m'"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = head[..] else {
        return Err(parse_err(hline, "header must be 'n m'"));
    };
    let n: usize = n.parse().map_err(|_| parse_err(hline, format!("bad vertex count '{n}'")))?;
    let m: usize = m.parse().map_err(|_| parse_err(hline, format!("bad edge count '{m}'")))?;
    if n == 0 {
        return Err(GraphError::Empty);
    }

    let mut weights = vec![0.0; n * n];
    let mut edge_lines = 0;
    for (lineno, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "loop" {
            let [_, u, w] = tokens[..] else {
                return Err(parse_err(lineno, "loop line must be 'loop u w'"));
            };
            let u = parse_vertex(u, n, lineno)?;
            let w = parse_weight(w, lineno)?;
            weights[u * n + u] = w;
            continue;
        }
        if edge_lines == m {
            return Err(parse_err(lineno, format!("more than the declared {m} edge lines")));
        }
        let (u, v, w) = match tokens[..] {
            [u, v] => (u, v, 1.0),
            [u, v, w] => (u, v, parse_weight(w, lineno)?),
            _ => return Err(parse_err(lineno, "edge line must be 'u v' or 'u v w'")),
        };
        let u = parse_vertex(u, n, lineno)?;
        let v = parse_vertex(v, n, lineno)?;
        if u == v {
            return Err(parse_err(lineno, "self-loop in an edge line; use 'loop u w'"));
        }
        let existing = weights[u * n + v];
        if existing != 0.0 && existing != w {
            return Err(parse_err(
                lineno,
                format!("asymmetric weight: edge {u}-{v} given as {existing} and {w}"),
            ));
        }
        weights[u * n + v] = w;
        weights[v * n + u] = w;
        edge_lines += 1;
    }
    if edge_lines != m {
        return Err(parse_err(hline, format!("header declares {m} edges, found {edge_lines}")));
    }
    Graph::from_weight_matrix(n, weights)
}

fn parse_vertex(tok: &str, n: usize, line: usize) -> Result<usize, GraphError> {
    let v: usize = tok.parse().map_err(|_| parse_err(line, format!("bad vertex '{tok}'")))?;
    if v >= n {
        return Err(parse_err(line, format!("vertex {v} out of range for n = {n}")));
    }
    Ok(v)
}

fn parse_weight(tok: &str, line: usize) -> Result<f64, GraphError> {
    match tok.parse::<f64>() {
        Ok(w) if w.is_finite() => Ok(w),
        _ => Err(parse_err(line, format!("bad weight '{tok}'"))),
    }
}

fn format_weight(w: f64) -> String {
    if w.fract() == 0.0 && w.abs() < 9.0e15 {
        format!("{}", w as i64)
    } else {
        format!("{w}")
    }
}

fn write_edgelist(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v, w) in edges {
        if w == 1.0 {
            out.push_str(&format!("{u} {v}\n"));
        } else {
            out.push_str(&format!("{u} {v} {}\n", format_weight(w)));
        }
    }
    for (u, w) in g.loops() {
        out.push_str(&format!("loop {u} {}\n", format_weight(w)));
    }
    out
}

/// graph6 encoding of a simple graph.
pub fn encode_graph6(g: &Graph) -> Result<String, GraphError> {
    if !g.is_simple() {
        return Err(GraphError::NotSimple);
    }
    let n = g.order();
    let mut bytes = encode_order(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.adjacent(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(bytes).expect("graph6 is printable ASCII"))
}

fn encode_order(n: usize) -> Vec<u8> {
    let sextets = |count: usize| (0..count).rev().map(move |k| ((n >> (6 * k)) & 63) as u8 + 63);
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        std::iter::once(126).chain(sextets(3)).collect()
    } else {
        [126, 126].into_iter().chain(sextets(6)).collect()
    }
}

pub fn decode_graph6(s: &str, line: usize) -> Result<Graph, GraphError> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(line, "empty graph6 string"));
    }
    if let Some(bad) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(parse_err(line, format!("invalid graph6 byte {bad:#04x}")));
    }
    let sextet_value = |bs: &[u8]| bs.iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
    let (n, body) = if bytes[0] != 126 {
        (usize::from(bytes[0] - 63), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(parse_err(line, "truncated graph6 size field"));
        }
        (sextet_value(&bytes[1..4]), &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(parse_err(line, "truncated graph6 size field"));
        }
        (sextet_value(&bytes[2..8]), &bytes[8..])
    };
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(
            line,
            format!("graph6 body has {} bytes, expected {expected} for n = {n}", body.len()),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(parse_err(line, "nonzero graph6 padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_complete, build_path, build_star};

    #[test]
    fn edgelist_p2() {
        let g = parse_graph("2 1\n0 1", GraphFormat::Edgelist).unwrap();
        assert_eq!(g, build_path(2).unwrap());
    }

    #[test]
    fn edgelist_weights_and_loops() {
        let g = parse_graph("3 2\n0 1 2\n1 2 0.5\nloop 2 -1\n", GraphFormat::Edgelist).unwrap();
        assert_eq!(g.weight(1, 0), 2.0);
        assert_eq!(g.weight(2, 1), 0.5);
        assert_eq!(g.loop_weight(2), -1.0);
        assert!(!g.is_integer());
        let text = serialize_graph(&g, GraphFormat::Edgelist).unwrap();
        assert_eq!(text, "3 2\n0 1 2\n1 2 0.5\nloop 2 -1\n");
    }

    #[test]
    fn edgelist_errors() {
        let cases = [
            ("", "missing header"),
            ("2\n", "header"),
            ("x 1\n0 1", "bad vertex count"),
            ("2 1\n0 2", "out of range"),
            ("3 2\n0 1 1\n1 0 2", "asymmetric"),
            ("2 2\n0 1", "declares 2"),
            ("2 0\n0 1", "more than"),
            ("2 1\n1 1", "self-loop"),
            ("2 1\n0 1 abc", "bad weight"),
            ("2 1\n0 1\nloop 0", "loop line"),
        ];
        for (text, needle) in cases {
            let err = parse_graph(text, GraphFormat::Edgelist).unwrap_err();
            assert!(err.to_string().contains(needle), "{text:?}: {err}");
        }
        assert_eq!(parse_graph("0 0", GraphFormat::Edgelist), Err(GraphError::Empty));
    }

    #[test]
    fn graph6_p2() {
        assert_eq!(parse_graph("A_", GraphFormat::Graph6).unwrap(), build_path(2).unwrap());
        assert_eq!(encode_graph6(&build_path(2).unwrap()).unwrap(), "A_");
    }

    #[test]
    fn graph6_known_strings() {
        // hand-computed from the graph6 bit layout
        assert_eq!(encode_graph6(&build_complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(encode_graph6(&build_path(1).unwrap()).unwrap(), "@");
        assert_eq!(encode_graph6(&build_star(3)).unwrap(), "Cs");
    }

    #[test]
    fn graph6_large_order_header() {
        let g = Graph::edgeless(63).unwrap();
        let s = encode_graph6(&g).unwrap();
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63, 63 + 63]);
        assert_eq!(decode_graph6(&s, 1).unwrap().order(), 63);
    }

    #[test]
    fn graph6_errors() {
        assert!(decode_graph6("A", 1).is_err());
        assert!(decode_graph6("A_?", 1).is_err());
        assert!(decode_graph6("A`", 1).is_err(), "padding bit set");
        assert!(decode_graph6("A ", 1).is_err());
        let weighted = Graph::from_weighted_edges(2, &[(0, 1, 2.0)], &[]).unwrap();
        assert_eq!(encode_graph6(&weighted), Err(GraphError::NotSimple));
    }

    #[test]
    fn format_detection() {
        assert_eq!(GraphFormat::detect("2 1\n0 1\n"), GraphFormat::Edgelist);
        assert_eq!(GraphFormat::detect("A_\n"), GraphFormat::Graph6);
        assert_eq!(GraphFormat::detect("# comment\n1 0\n"), GraphFormat::Edgelist);
    }

    #[test]
    fn stream_skips_header() {
        let graphs = parse_graph6_stream(">>graph6<<A_\nBw\n\n");
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[1].as_ref().unwrap().edge_count(), 3);
    }
}
