//! Text formats: edge lists (`n m` header, then `u v` per line), colorings
//! (`vertex color [unique]` per line) and Graphviz DOT export. Lines starting
//! with `#` and blank lines are skipped on input.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::verify::{edge_key, CfColoring, Color};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    File(String),
}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        message: message.into(),
    }
}

/// Non-comment lines with their 1-based numbers, split on whitespace.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        (!t.is_empty() && !t.starts_with('#')).then(|| (i + 1, t.split_whitespace().collect()))
    })
}

fn number<T: std::str::FromStr>(line: usize, s: &str, what: &str) -> Result<T, ParseError> {
    s.parse().map_err(|_| at(line, format!("{what} '{s}' is not a non-negative integer")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = records(text);
    let (hl, header) = lines.next().ok_or_else(|| ParseError::File("missing 'n m' header".into()))?;
    if header.len() != 2 {
        return Err(at(hl, "header must be 'n m'"));
    }
    let n: usize = number(hl, header[0], "vertex count")?;
    let m: usize = number(hl, header[1], "edge count")?;
    let mut seen = BTreeSet::new();
    let mut edges = Vec::with_capacity(m);
    let mut last = hl;
    for (ln, f) in lines {
        last = ln;
        if f.len() != 2 {
            return Err(at(ln, "edge must be 'u v'"));
        }
        let u: Vertex = number(ln, f[0], "vertex")?;
        let v: Vertex = number(ln, f[1], "vertex")?;
        if u >= n || v >= n {
            return Err(at(ln, format!("vertex {} out of range 0..{n}", u.max(v))));
        }
        if u == v {
            return Err(at(ln, format!("self-loop at {u}")));
        }
        if !seen.insert(edge_key(u, v)) {
            return Err(at(ln, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(at(last, format!("header declares {m} edges, found {}", edges.len())));
    }
    Ok(Graph::new(n, &edges).expect("checked above"))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringFile {
    pub colors: Vec<Color>,
    pub unique: Option<Vec<Color>>,
}

/// Parses a coloring; vertices must be exactly `0..n` where `n` is the
/// number of lines. The third column must be present on all lines or none.
pub fn parse_coloring(text: &str) -> Result<ColoringFile, ParseError> {
    let rows: Vec<_> = records(text).collect();
    let n = rows.len();
    let mut colors: Vec<Option<Color>> = vec![None; n];
    let mut unique: Vec<Color> = vec![0; n];
    let width = rows.first().map_or(2, |r| r.1.len());
    for (ln, f) in &rows {
        if f.len() != 2 && f.len() != 3 {
            return Err(at(*ln, "expected 'vertex color' or 'vertex color unique'"));
        }
        if f.len() != width {
            return Err(at(*ln, "unique column must appear on every line or none"));
        }
        let v: Vertex = number(*ln, f[0], "vertex")?;
        if v >= n {
            return Err(at(*ln, format!("vertex {v} out of range 0..{n}")));
        }
        if colors[v].is_some() {
            return Err(at(*ln, format!("vertex {v} listed twice")));
        }
        colors[v] = Some(number(*ln, f[1], "color")?);
        if width == 3 {
            unique[v] = number(*ln, f[2], "unique color")?;
        }
    }
    Ok(ColoringFile {
        colors: colors.into_iter().map(|c| c.expect("n distinct ids in 0..n")).collect(),
        unique: (width == 3).then_some(unique),
    })
}

pub fn write_coloring(c: &CfColoring) -> String {
    let mut out = String::new();
    for (v, &col) in c.colors.iter().enumerate() {
        match &c.witness {
            Some(u) => {
                let _ = writeln!(out, "{v} {col} {}", u[v]);
            }
            None => {
                let _ = writeln!(out, "{v} {col}");
            }
        }
    }
    out
}

pub const DOT_PALETTE: [&str; 12] = [
    "tomato",
    "gold",
    "lightskyblue",
    "palegreen",
    "orchid",
    "sandybrown",
    "aquamarine",
    "khaki",
    "lightpink",
    "lightsteelblue",
    "yellowgreen",
    "plum",
];

/// Undirected DOT; color `c ≥ 1` fills with `DOT_PALETTE[(c - 1) % 12]`,
/// color 0 is left unfilled.
pub fn to_dot(g: &Graph, colors: &[Color]) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        let c = colors.get(v).copied().unwrap_or(0);
        if c == 0 {
            let _ = writeln!(out, "  {v} [label=\"{v}:0\", style=solid];");
        } else {
            let fill = DOT_PALETTE[(c as usize - 1) % DOT_PALETTE.len()];
            let _ = writeln!(out, "  {v} [label=\"{v}:{c}\", style=filled, fillcolor={fill}];");
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
