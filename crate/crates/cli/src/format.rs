//! Line-oriented text formats.
//!
//! Every format starts with a `<tag> 1` header line (matchings have none),
//! ignores blank lines and treats `#` as the start of a comment.
//!
//! ```text
//! tg 1                  mapping 1 rainbow     path 1       cnf 1          lg 1
//! lifetime 6            map path:0 r p0       colours 2    vars 3         nodes 4
//! mode strict           map path:1 r p1       edge 0       clause 1 2 3   edge 0 1 0
//! node a                                      edge 1       clause -1 ...  isolated 3 1
//! node b
//! edge a b 0 2 4 5
//! root a
//! ```
//!
//! A matching is a list of `match <u> <v>` lines with an optional
//! `size <k>` line that must agree with the count.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;
use timedmatch_core::model::{
    EdgeId, GraphSpec, IntervalMode, StaticGraph, StaticGraphError, TemporalGraph, Violation,
};
use timedmatch_core::reductions::{
    CnfFormula, ColouredPath, LabelError, LabelledStaticGraph, Literal, MappingEntry, MappingError,
    ReductionError, ReductionKind, ReductionMapping, SourceElement,
};
use timedmatch_core::TimedMatching;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{}", render_violations(.0))]
    Invalid(Vec<(Option<usize>, Violation)>),
    #[error("line {line}: no edge between {u} and {v}")]
    UnknownEdge { line: usize, u: String, v: String },
    #[error("line {line}: edge {u}-{v} listed twice")]
    RepeatedEdge { line: usize, u: String, v: String },
    #[error("size line says {declared} but {actual} edges are listed")]
    SizeMismatch { declared: usize, actual: usize },
    #[error("{0}")]
    Mapping(MappingError),
    #[error("{0}")]
    Path(ReductionError),
    #[error("{0}")]
    Static(StaticGraphError),
    #[error("{0}")]
    Labels(LabelError),
}

fn render_violations(v: &[(Option<usize>, Violation)]) -> String {
    let mut out = String::new();
    for (i, (line, violation)) in v.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        match line {
            Some(l) => write!(out, "line {l}: {}", kind_message(violation)),
            None => write!(out, "{}", kind_message(violation)),
        }
        .unwrap();
    }
    out
}

// the "edge i: " prefix is dropped; the line number replaces it
fn kind_message(v: &Violation) -> String {
    Violation {
        edge: None,
        kind: v.kind.clone(),
    }
    .to_string()
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-blank lines with comments stripped, as `(line number, words)`.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = content.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn number<T: FromStr>(line: usize, word: &str, what: &str) -> Result<T, FormatError> {
    word.parse()
        .map_err(|_| syntax(line, format!("expected {what}, found {word:?}")))
}

fn arity(line: usize, words: &[&str], n: usize) -> Result<(), FormatError> {
    if words.len() != n {
        return Err(syntax(
            line,
            format!("`{}` takes {} argument(s), found {}", words[0], n - 1, words.len() - 1),
        ));
    }
    Ok(())
}

type Lines<'t> = Vec<(usize, Vec<&'t str>)>;

/// Checks the header and returns its extra words and the remaining lines.
fn header<'t>(text: &'t str, tag: &str, extra: usize) -> Result<(Vec<&'t str>, Lines<'t>), FormatError> {
    let mut it = lines(text);
    let (line, words) = it
        .next()
        .ok_or_else(|| syntax(1, format!("missing `{tag} 1` header")))?;
    if words.first() != Some(&tag) || words.get(1) != Some(&"1") || words.len() != 2 + extra {
        return Err(syntax(line, format!("expected `{tag} 1` header, found {:?}", words.join(" "))));
    }
    Ok((words[2..].to_vec(), it.collect()))
}

fn once<T>(slot: &mut Option<T>, value: T, line: usize, key: &str) -> Result<(), FormatError> {
    if slot.is_some() {
        return Err(syntax(line, format!("`{key}` given twice")));
    }
    *slot = Some(value);
    Ok(())
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

// ---------------------------------------------------------------------------
// temporal graphs

/// A parsed `tg` file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: TemporalGraph,
    pub root: Option<String>,
}

pub fn parse_tg(text: &str) -> Result<Instance, FormatError> {
    let (_, body) = header(text, "tg", 0)?;
    let mut lifetime = None;
    let mut mode = None;
    let mut root: Option<(usize, String)> = None;
    let mut nodes = Vec::new();
    let mut node_lines = Vec::new();
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    for (line, words) in body {
        match words[0] {
            "lifetime" => {
                arity(line, &words, 2)?;
                once(&mut lifetime, number::<u32>(line, words[1], "a lifetime")?, line, "lifetime")?;
            }
            "mode" => {
                arity(line, &words, 2)?;
                let m = match words[1] {
                    "strict" => IntervalMode::Strict,
                    "lenient" => IntervalMode::Lenient,
                    other => return Err(syntax(line, format!("unknown mode {other:?}"))),
                };
                once(&mut mode, m, line, "mode")?;
            }
            "node" => {
                arity(line, &words, 2)?;
                if !valid_name(words[1]) {
                    return Err(syntax(line, format!("bad node name {:?}", words[1])));
                }
                nodes.push(words[1].to_string());
                node_lines.push(line);
            }
            "edge" => {
                if words.len() < 5 || words.len() % 2 == 0 {
                    return Err(syntax(line, "`edge` takes two nodes and start/finish pairs"));
                }
                let mut intervals = Vec::new();
                for pair in words[3..].chunks(2) {
                    intervals.push((
                        number(line, pair[0], "an interval start")?,
                        number(line, pair[1], "an interval finish")?,
                    ));
                }
                edges.push((words[1].to_string(), words[2].to_string(), intervals));
                edge_lines.push(line);
            }
            "root" => {
                arity(line, &words, 2)?;
                if root.is_some() {
                    return Err(syntax(line, "`root` given twice"));
                }
                root = Some((line, words[1].to_string()));
            }
            other => return Err(syntax(line, format!("unknown keyword {other:?}"))),
        }
    }
    let lifetime = lifetime.ok_or_else(|| syntax(1, "missing `lifetime` line"))?;
    let mut spec = GraphSpec::new(lifetime);
    for n in &nodes {
        spec.node(n.clone());
    }
    for (u, v, iv) in &edges {
        spec.edge(u.clone(), v.clone(), iv);
    }
    let graph = spec.validate(mode.unwrap_or_default()).map_err(|violations| {
        let located = violations
            .into_iter()
            .map(|v| {
                let line = match (&v.edge, &v.kind) {
                    (Some(e), _) => Some(edge_lines[*e]),
                    (None, timedmatch_core::model::ViolationKind::DuplicateNode(name)) => nodes
                        .iter()
                        .enumerate()
                        .filter(|(_, n)| *n == name)
                        .nth(1)
                        .map(|(i, _)| node_lines[i]),
                    _ => None,
                };
                (line, v)
            })
            .collect();
        FormatError::Invalid(located)
    })?;
    if let Some((line, r)) = &root {
        if graph.node(r).is_none() {
            return Err(syntax(*line, format!("root {r:?} is not a node")));
        }
    }
    Ok(Instance {
        graph,
        root: root.map(|(_, r)| r),
    })
}

pub fn emit_tg(g: &TemporalGraph, root: Option<&str>) -> String {
    let mut out = String::from("tg 1\n");
    writeln!(out, "lifetime {}", g.lifetime()).unwrap();
    let mode = match g.mode() {
        IntervalMode::Strict => "strict",
        IntervalMode::Lenient => "lenient",
    };
    writeln!(out, "mode {mode}").unwrap();
    for l in g.labels() {
        writeln!(out, "node {l}").unwrap();
    }
    for e in g.edges() {
        let (u, v) = g.edge_labels(e.id());
        write!(out, "edge {u} {v}").unwrap();
        for iv in e.intervals() {
            write!(out, " {} {}", iv.start, iv.finish).unwrap();
        }
        out.push('\n');
    }
    if let Some(r) = root {
        writeln!(out, "root {r}").unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// matchings

/// Parses `match` lines, resolving each endpoint pair with `resolve`.
pub fn parse_matching_with(
    text: &str,
    mut resolve: impl FnMut(&str, &str) -> Option<EdgeId>,
) -> Result<TimedMatching, FormatError> {
    let mut m = TimedMatching::new();
    let mut size = None;
    for (line, words) in lines(text) {
        match words[0] {
            "match" => {
                arity(line, &words, 3)?;
                let (u, v) = (words[1].to_string(), words[2].to_string());
                let e = resolve(&u, &v).ok_or_else(|| FormatError::UnknownEdge {
                    line,
                    u: u.clone(),
                    v: v.clone(),
                })?;
                if !m.insert(e) {
                    return Err(FormatError::RepeatedEdge { line, u, v });
                }
            }
            "size" => {
                arity(line, &words, 2)?;
                once(&mut size, number::<usize>(line, words[1], "a size")?, line, "size")?;
            }
            other => return Err(syntax(line, format!("unknown keyword {other:?}"))),
        }
    }
    match size {
        Some(declared) if declared != m.len() => Err(FormatError::SizeMismatch {
            declared,
            actual: m.len(),
        }),
        _ => Ok(m),
    }
}

pub fn parse_matching(text: &str, g: &TemporalGraph) -> Result<TimedMatching, FormatError> {
    parse_matching_with(text, |a, b| g.edge_by_labels(a, b))
}

/// One `match` line per edge, ascending by edge id.
pub fn emit_matching(g: &TemporalGraph, m: &TimedMatching) -> String {
    let mut out = String::new();
    for e in m.iter() {
        let (u, v) = g.edge_labels(e);
        writeln!(out, "match {u} {v}").unwrap();
    }
    out
}

/// Same lines, endpoints taken from a reduction mapping.
pub fn emit_matching_by_map(map: &ReductionMapping, m: &TimedMatching) -> String {
    let mut out = String::new();
    for e in m.iter() {
        let (u, v) = &map.entries()[e.0].endpoints;
        writeln!(out, "match {u} {v}").unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// reduction mappings

pub fn parse_mapping(text: &str) -> Result<ReductionMapping, FormatError> {
    let kind_line = lines(text).next().map(|(l, _)| l).unwrap_or(1);
    let (extra, body) = header(text, "mapping", 1)?;
    let kind: ReductionKind = extra[0]
        .parse()
        .map_err(|_| syntax(kind_line, format!("unknown reduction kind {:?}", extra[0])))?;
    let mut entries = Vec::new();
    for (line, words) in body {
        if words[0] != "map" {
            return Err(syntax(line, format!("unknown keyword {:?}", words[0])));
        }
        arity(line, &words, 4)?;
        let source: SourceElement = words[1].parse().map_err(|e: String| syntax(line, e))?;
        entries.push(MappingEntry {
            source,
            edge: EdgeId(entries.len()),
            endpoints: (words[2].to_string(), words[3].to_string()),
        });
    }
    ReductionMapping::new(kind, entries).map_err(FormatError::Mapping)
}

pub fn emit_mapping(map: &ReductionMapping) -> String {
    let mut out = format!("mapping 1 {}\n", map.kind());
    for e in map.entries() {
        writeln!(out, "map {} {} {}", e.source, e.endpoints.0, e.endpoints.1).unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// coloured paths

pub fn parse_path(text: &str) -> Result<ColouredPath, FormatError> {
    let (_, body) = header(text, "path", 0)?;
    let mut count = None;
    let mut colours = Vec::new();
    for (line, words) in body {
        match words[0] {
            "colours" => {
                arity(line, &words, 2)?;
                once(&mut count, number::<usize>(line, words[1], "a colour count")?, line, "colours")?;
            }
            "edge" => {
                arity(line, &words, 2)?;
                colours.push(number::<usize>(line, words[1], "a colour")?);
            }
            other => return Err(syntax(line, format!("unknown keyword {other:?}"))),
        }
    }
    let count = count.ok_or_else(|| syntax(1, "missing `colours` line"))?;
    ColouredPath::new(count, colours).map_err(FormatError::Path)
}

pub fn emit_path(p: &ColouredPath) -> String {
    let mut out = format!("path 1\ncolours {}\n", p.colour_count());
    for c in p.colours() {
        writeln!(out, "edge {c}").unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// CNF formulas

pub fn parse_cnf(text: &str) -> Result<CnfFormula, FormatError> {
    let (_, body) = header(text, "cnf", 0)?;
    let mut vars = None;
    let mut clauses = Vec::new();
    for (line, words) in body {
        match words[0] {
            "vars" => {
                arity(line, &words, 2)?;
                once(&mut vars, number::<usize>(line, words[1], "a variable count")?, line, "vars")?;
            }
            "clause" => {
                arity(line, &words, 4)?;
                let mut lits = [Literal::pos(0); 3];
                for (slot, w) in lits.iter_mut().zip(&words[1..]) {
                    let x: i64 = number(line, w, "a signed literal")?;
                    *slot = Literal::from_dimacs(x)
                        .ok_or_else(|| syntax(line, format!("literal {x} must be non-zero")))?;
                    if slot.var >= vars.unwrap_or(usize::MAX) {
                        return Err(syntax(line, format!("literal {x} exceeds the variable count")));
                    }
                }
                clauses.push(lits);
            }
            other => return Err(syntax(line, format!("unknown keyword {other:?}"))),
        }
    }
    let var_count = vars.ok_or_else(|| syntax(1, "missing `vars` line"))?;
    Ok(CnfFormula { var_count, clauses })
}

pub fn emit_cnf(f: &CnfFormula) -> String {
    let mut out = format!("cnf 1\nvars {}\n", f.var_count);
    for c in &f.clauses {
        writeln!(
            out,
            "clause {} {} {}",
            c[0].to_dimacs(),
            c[1].to_dimacs(),
            c[2].to_dimacs()
        )
        .unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// labelled static graphs

pub fn parse_lg(text: &str) -> Result<LabelledStaticGraph, FormatError> {
    let (_, body) = header(text, "lg", 0)?;
    let mut nodes = None;
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    let mut isolated = Vec::new();
    for (line, words) in body {
        match words[0] {
            "nodes" => {
                arity(line, &words, 2)?;
                once(&mut nodes, number::<usize>(line, words[1], "a node count")?, line, "nodes")?;
            }
            "edge" => {
                arity(line, &words, 4)?;
                edges.push((
                    number(line, words[1], "a node index")?,
                    number(line, words[2], "a node index")?,
                ));
                labels.push(number(line, words[3], "a label")?);
            }
            "isolated" => {
                arity(line, &words, 3)?;
                isolated.push((
                    number(line, words[1], "a node index")?,
                    number(line, words[2], "a label")?,
                ));
            }
            other => return Err(syntax(line, format!("unknown keyword {other:?}"))),
        }
    }
    let n = nodes.ok_or_else(|| syntax(1, "missing `nodes` line"))?;
    let graph = StaticGraph::new(n, edges).map_err(FormatError::Static)?;
    LabelledStaticGraph::new(graph, labels, isolated).map_err(FormatError::Labels)
}

pub fn emit_lg(lg: &LabelledStaticGraph) -> String {
    let mut out = format!("lg 1\nnodes {}\n", lg.graph().node_count());
    for (&(u, v), l) in lg.graph().edges().iter().zip(lg.edge_labels()) {
        writeln!(out, "edge {u} {v} {l}").unwrap();
    }
    for (v, l) in lg.isolated() {
        writeln!(out, "isolated {v} {l}").unwrap();
    }
    out
}
