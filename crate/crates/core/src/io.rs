//! Line-oriented text formats.
//!
//! Every format starts with a header line naming the format and its sizes,
//! followed by one record per line. Tokens are separated by whitespace,
//! `#` starts a comment running to the end of the line, and blank lines are
//! ignored.
//!
//! ```text
//! intervals <n>          then n lines: <id> <left> <right>
//! graph <n> <m>          then m lines: <u> <v>        (u < v)
//! coloring <n> <k>       then n lines: <vertex> <color>   (colors 0..k-1)
//! binpacking <n> <k> <B> then n lines: <a_j>
//! labels <kind>          then lines:   <part-name> <vertex ids...>
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::gadgets::BinPackingInstance;
use crate::graph::{Graph, IntervalRep};

struct Record<'a> {
    line: usize,
    tokens: Vec<&'a str>,
}

fn records(text: &str) -> impl Iterator<Item = Record<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        (!tokens.is_empty()).then_some(Record { line: i + 1, tokens })
    })
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn field<T: FromStr>(rec: &Record<'_>, index: usize, what: &str) -> Result<T> {
    let token = rec
        .tokens
        .get(index)
        .ok_or_else(|| parse_err(rec.line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| parse_err(rec.line, format!("invalid {what} '{token}'")))
}

fn expect_arity(rec: &Record<'_>, arity: usize) -> Result<()> {
    if rec.tokens.len() != arity {
        return Err(parse_err(
            rec.line,
            format!("expected {arity} fields, found {}", rec.tokens.len()),
        ));
    }
    Ok(())
}

/// Splits off the header, checks its keyword and field count, and returns
/// it together with the remaining records.
fn header<'a>(text: &'a str, keyword: &str, arity: usize) -> Result<(Record<'a>, Vec<Record<'a>>)> {
    let mut recs = records(text);
    let head = recs
        .next()
        .ok_or_else(|| parse_err(1, format!("empty input, expected '{keyword}' header")))?;
    if head.tokens[0] != keyword {
        return Err(parse_err(
            head.line,
            format!("expected '{keyword}' header, found '{}'", head.tokens[0]),
        ));
    }
    expect_arity(&head, arity)?;
    Ok((head, recs.collect()))
}

fn expect_body_len(head: &Record<'_>, body: &[Record<'_>], expected: usize, what: &str) -> Result<()> {
    if body.len() != expected {
        let line = body.get(expected).map_or(head.line, |r| r.line);
        return Err(parse_err(
            line,
            format!("header announces {expected} {what}, found {}", body.len()),
        ));
    }
    Ok(())
}

/// The leading keyword of the first non-comment line, if any.
pub fn format_keyword(text: &str) -> Option<&str> {
    records(text).next().map(|r| r.tokens[0])
}

pub fn parse_intervals(text: &str) -> Result<IntervalRep> {
    let (head, body) = header(text, "intervals", 2)?;
    let n: usize = field(&head, 1, "interval count")?;
    expect_body_len(&head, &body, n, "intervals")?;
    let mut entries = Vec::with_capacity(n);
    for rec in &body {
        expect_arity(rec, 3)?;
        entries.push((
            field::<usize>(rec, 0, "vertex id")?,
            field::<i64>(rec, 1, "left endpoint")?,
            field::<i64>(rec, 2, "right endpoint")?,
        ));
    }
    IntervalRep::new(entries).map_err(|e| match e {
        Error::Representation { index, vertex, reason } => {
            parse_err(body[index].line, format!("vertex {vertex}: {reason}"))
        }
        other => other,
    })
}

pub fn write_intervals(rep: &IntervalRep) -> String {
    let mut out = format!("intervals {}\n", rep.len());
    for (v, t) in rep.iter() {
        let _ = writeln!(out, "{v} {} {}", t.left, t.right);
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let (head, body) = header(text, "graph", 3)?;
    let n: usize = field(&head, 1, "vertex count")?;
    let m: usize = field(&head, 2, "edge count")?;
    expect_body_len(&head, &body, m, "edges")?;
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for rec in &body {
        expect_arity(rec, 2)?;
        let u: usize = field(rec, 0, "vertex")?;
        let v: usize = field(rec, 1, "vertex")?;
        if u >= v {
            return Err(parse_err(rec.line, format!("edge {u} {v} must list the smaller endpoint first")));
        }
        if v >= n {
            return Err(parse_err(rec.line, format!("vertex {v} outside 0..{n}")));
        }
        if !seen.insert((u, v)) {
            return Err(parse_err(rec.line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let (head, body) = header(text, "coloring", 3)?;
    let n: usize = field(&head, 1, "vertex count")?;
    let k: usize = field(&head, 2, "color count")?;
    if k < 1 {
        return Err(parse_err(head.line, "color count must be at least 1"));
    }
    expect_body_len(&head, &body, n, "vertices")?;
    let mut colors = vec![None; n];
    for rec in &body {
        expect_arity(rec, 2)?;
        let v: usize = field(rec, 0, "vertex")?;
        let c: usize = field(rec, 1, "color")?;
        if v >= n {
            return Err(parse_err(rec.line, format!("vertex {v} outside 0..{n}")));
        }
        if c >= k {
            return Err(parse_err(rec.line, format!("color {c} outside 0..{k}")));
        }
        if colors[v].replace(c).is_some() {
            return Err(parse_err(rec.line, format!("vertex {v} colored twice")));
        }
    }
    // n records, no repeats, all in range: every vertex is colored
    Coloring::new(colors.into_iter().map(|c| c.expect("every vertex colored")).collect(), k)
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = format!("coloring {} {}\n", c.len(), c.k());
    for (v, color) in c.as_slice().iter().enumerate() {
        let _ = writeln!(out, "{v} {color}");
    }
    out
}

pub fn parse_binpacking(text: &str) -> Result<BinPackingInstance> {
    let (head, body) = header(text, "binpacking", 4)?;
    let n: usize = field(&head, 1, "item count")?;
    let k: usize = field(&head, 2, "bin count")?;
    let b: usize = field(&head, 3, "capacity")?;
    expect_body_len(&head, &body, n, "items")?;
    let items = body
        .iter()
        .map(|rec| {
            expect_arity(rec, 1)?;
            field(rec, 0, "item size")
        })
        .collect::<Result<Vec<usize>>>()?;
    BinPackingInstance::new(items, k, b)
}

pub fn write_binpacking(inst: &BinPackingInstance) -> String {
    let mut out = format!(
        "binpacking {} {} {}\n",
        inst.items().len(),
        inst.bins(),
        inst.capacity()
    );
    for a in inst.items() {
        let _ = writeln!(out, "{a}");
    }
    out
}

/// Named vertex groups of a generated gadget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labels {
    pub kind: String,
    pub parts: Vec<(String, Vec<usize>)>,
}

pub fn parse_labels(text: &str) -> Result<Labels> {
    let (head, body) = header(text, "labels", 2)?;
    let parts = body
        .iter()
        .map(|rec| {
            let ids = (1..rec.tokens.len())
                .map(|i| field(rec, i, "vertex id"))
                .collect::<Result<Vec<usize>>>()?;
            Ok((rec.tokens[0].to_string(), ids))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Labels {
        kind: head.tokens[1].to_string(),
        parts,
    })
}

pub fn write_labels(labels: &Labels) -> String {
    let mut out = format!("labels {}\n", labels.kind);
    for (name, ids) in &labels.parts {
        out.push_str(name);
        for v in ids {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

/// A graph given either directly or through an interval model.
#[derive(Debug, Clone)]
pub enum GraphSource {
    Intervals(IntervalRep),
    Graph(Graph),
}

impl GraphSource {
    pub fn graph(&self) -> Graph {
        match self {
            GraphSource::Intervals(rep) => crate::graph::derive_graph(rep),
            GraphSource::Graph(g) => g.clone(),
        }
    }
}

/// Dispatches on the header keyword.
pub fn parse_graph_source(text: &str) -> Result<GraphSource> {
    match format_keyword(text) {
        Some("intervals") => parse_intervals(text).map(GraphSource::Intervals),
        Some("graph") => parse_graph(text).map(GraphSource::Graph),
        Some(other) => Err(parse_err(
            records(text).next().map_or(1, |r| r.line),
            format!("expected an 'intervals' or 'graph' file, found '{other}'"),
        )),
        None => Err(parse_err(1, "empty input")),
    }
}
