//! Plain-text graph and witness formats.
//!
//! Graphs: a header line `n m`, then `m` lines `u v` with 0-based ids.
//! Blank lines and lines starting with `#` are ignored; isolated vertices are
//! implied by `n`. Witnesses: one line per bag, `bag <target-id>: v1 v2 ...`.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::witness::WitnessStructure;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

/// Marker line placed before an embedded target graph in solver output.
pub const TARGET_MARKER: &str = "# target";

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a non-negative integer, found {tok:?}"),
    })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing header line \"n m\"".into(),
    })?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(Error::Parse { line: hl, msg: "header must be \"n m\"".into() });
    }
    let n = parse_num(nums[0], hl)?;
    let m = parse_num(nums[1], hl)?;
    let mut g = Graph::with_vertices(0..n);
    let mut count = 0;
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse { line: ln, msg: "edge line must be \"u v\"".into() });
        }
        let (u, v) = (parse_num(toks[0], ln)?, parse_num(toks[1], ln)?);
        let err = |msg: String| Error::Parse { line: ln, msg };
        if u >= n || v >= n {
            return Err(err(format!("vertex id out of range 0..{n}")));
        }
        if u == v {
            return Err(err(format!("self-loop at {u}")));
        }
        if g.has_edge(u, v) {
            return Err(err(format!("duplicate edge {u} {v}")));
        }
        g.insert_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(Error::Parse { line: hl, msg: format!("header announces {m} edges, found {count}") });
    }
    Ok(g)
}

/// Writes a graph. Ids that are not exactly `0..n` are renamed in id order and
/// the original ids are recorded in a comment line.
pub fn format_graph(g: &Graph) -> String {
    let (r, old) = g.relabeled();
    let mut out = String::new();
    if old.iter().enumerate().any(|(i, &v)| i != v) {
        out.push_str("# ids:");
        for (i, v) in old.iter().enumerate() {
            let _ = write!(out, " {i}={v}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "{} {}", r.n(), r.m());
    for (u, v) in r.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Extracts the target graph from text that may be full solver output: when a
/// `# target` marker is present the graph block after it (up to the first bag
/// line) is parsed, otherwise the whole text.
pub fn parse_target_graph(text: &str) -> Result<Graph> {
    let lines: Vec<&str> = text.lines().collect();
    match lines.iter().position(|l| l.trim() == TARGET_MARKER) {
        None => parse_graph(text),
        Some(i) => {
            let block: Vec<&str> = lines[i + 1..]
                .iter()
                .take_while(|l| !l.trim_start().starts_with("bag "))
                .copied()
                .collect();
            parse_graph(&block.join("\n")).map_err(|e| match e {
                Error::Parse { line, msg } => Error::Parse { line: line + i + 1, msg },
                other => other,
            })
        }
    }
}

/// Reads every `bag <id>: ...` line; all other lines are ignored.
pub fn parse_witness(text: &str) -> Result<WitnessStructure> {
    let mut bags: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
    for (ln, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        let Some(rest) = line.strip_prefix("bag ") else { continue };
        let (key, members) = rest.split_once(':').ok_or(Error::Parse {
            line: ln,
            msg: "bag line must look like \"bag <id>: v1 v2 ...\"".into(),
        })?;
        let key = parse_num(key.trim(), ln)?;
        let set = members
            .split_whitespace()
            .map(|t| parse_num(t, ln))
            .collect::<Result<BTreeSet<_>>>()?;
        if bags.insert(key, set).is_some() {
            return Err(Error::Parse { line: ln, msg: format!("bag {key} listed twice") });
        }
    }
    Ok(WitnessStructure::new(bags))
}

pub fn format_witness(w: &WitnessStructure) -> String {
    let mut out = String::new();
    for (x, bag) in &w.bags {
        let _ = write!(out, "bag {x}:");
        for v in bag {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}
