//! JSON and DOT encodings of colorings.
//!
//! JSON layout, fields in this order, edges sorted by `(u, v)`:
//!
//! ```text
//! {"n":10,"a":1,"b":4,"palette":5,"vertices":[0,1,...],
//!  "edges":[{"u":0,"v":1,"offset":1,"color":2},...],"scheme":"5p-case1","type":"I"}
//! ```
//!
//! `scheme` and `type` are optional annotations.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, PartialColoring, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::CirculantGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColor {
    pub u: usize,
    pub v: usize,
    pub offset: usize,
    pub color: Color,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringDocument {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub palette: usize,
    pub vertices: Vec<Color>,
    pub edges: Vec<EdgeColor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scheme: Option<String>,
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
}

impl ColoringDocument {
    pub fn new(g: &CirculantGraph, c: &TotalColoring) -> Self {
        let mut edges: Vec<EdgeColor> = (0..g.edge_count())
            .map(|id| {
                let e = g.edge(id);
                EdgeColor { u: e.u, v: e.v, offset: e.offset, color: c.edge(id) }
            })
            .collect();
        edges.sort_by_key(|e| (e.u, e.v));
        ColoringDocument {
            n: g.n(),
            a: g.a(),
            b: g.b(),
            palette: c.palette_size(),
            vertices: c.vertex_colors().to_vec(),
            edges,
            scheme: None,
            kind: None,
        }
    }

    pub fn with_scheme(mut self, scheme: impl Into<String>) -> Self {
        self.scheme = Some(scheme.into());
        self
    }

    pub fn with_kind(mut self, kind: impl Into<String>) -> Self {
        self.kind = Some(kind.into());
        self
    }

    /// Rebuilds the graph and coloring, checking that the edge list is
    /// exactly the edge set of C_n(a,b).
    pub fn to_coloring(&self) -> Result<(CirculantGraph, TotalColoring)> {
        let g = CirculantGraph::new(self.n, self.a, self.b).map_err(|e| Error::Format(e.to_string()))?;
        if self.vertices.len() != g.n() {
            return Err(Error::Format(format!("{} vertex colors for {} vertices", self.vertices.len(), g.n())));
        }
        if self.edges.len() != g.edge_count() {
            return Err(Error::Format(format!("{} edges listed, {g} has {}", self.edges.len(), g.edge_count())));
        }
        let mut p = PartialColoring::empty(&g, self.palette);
        for (i, &c) in self.vertices.iter().enumerate() {
            p.set_vertex(i, c);
        }
        for e in &self.edges {
            let id = g
                .edge_index(e.u, e.v)
                .ok_or_else(|| Error::Format(format!("{}-{} is not an edge of {g}", e.u, e.v)))?;
            if g.edge(id).offset != e.offset {
                return Err(Error::Format(format!("edge {}-{} has offset {}, not {}", e.u, e.v, g.edge(id).offset, e.offset)));
            }
            if p.edge_colors[id].is_some() {
                return Err(Error::Format(format!("edge {}-{} listed twice", e.u, e.v)));
            }
            p.set_edge(id, e.color);
        }
        let c = p.into_total().map_err(|e| Error::Format(e.to_string()))?;
        Ok((g, c))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"C_{}({},{})\" {{", self.n, self.a, self.b);
        let _ = writeln!(out, "  graph [n={}, a={}, b={}, palette={}];", self.n, self.a, self.b, self.palette);
        for (i, c) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  {i} [total_color={c}];");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  {} -- {} [offset={}, total_color={}];", e.u, e.v, e.offset, e.color);
        }
        out.push_str("}\n");
        out
    }

    /// Reads back the DOT produced by [`Self::to_dot`].
    pub fn from_dot(text: &str) -> Result<Self> {
        let fail = |line: usize, msg: &str| Error::Format(format!("dot line {}: {msg}", line + 1));
        let mut lines = text.lines().enumerate().map(|(i, l)| (i, l.trim())).filter(|(_, l)| !l.is_empty());
        match lines.next() {
            Some((_, l)) if l.starts_with("graph") && l.ends_with('{') => {}
            Some((i, _)) => return Err(fail(i, "expected `graph ... {`")),
            None => return Err(Error::Format("empty dot input".into())),
        }
        let mut header: Option<BTreeMap<String, String>> = None;
        let mut vertices: BTreeMap<usize, Color> = BTreeMap::new();
        let mut edges = Vec::new();
        let mut closed = false;
        for (i, line) in lines {
            if closed {
                return Err(fail(i, "content after closing brace"));
            }
            if line == "}" {
                closed = true;
                continue;
            }
            let body = line.strip_suffix(';').ok_or_else(|| fail(i, "missing `;`"))?;
            let (head, attrs) = split_attrs(body).ok_or_else(|| fail(i, "expected `[...]` attribute list"))?;
            if head == "graph" {
                header = Some(attrs);
            } else if let Some((u, v)) = head.split_once("--") {
                let u = parse_num(u.trim()).ok_or_else(|| fail(i, "bad edge endpoint"))?;
                let v = parse_num(v.trim()).ok_or_else(|| fail(i, "bad edge endpoint"))?;
                let offset = attr(&attrs, "offset").ok_or_else(|| fail(i, "edge without offset"))?;
                let color = attr(&attrs, "total_color").ok_or_else(|| fail(i, "edge without total_color"))?;
                edges.push(EdgeColor { u, v, offset, color: to_color(color).ok_or_else(|| fail(i, "color too large"))? });
            } else {
                let id = parse_num(head).ok_or_else(|| fail(i, "bad node id"))?;
                let color = attr(&attrs, "total_color").ok_or_else(|| fail(i, "node without total_color"))?;
                if vertices.insert(id, to_color(color).ok_or_else(|| fail(i, "color too large"))?).is_some() {
                    return Err(fail(i, "node listed twice"));
                }
            }
        }
        if !closed {
            return Err(Error::Format("dot input ends before `}`".into()));
        }
        let header = header.ok_or_else(|| Error::Format("missing `graph [...]` header".into()))?;
        let field = |k: &str| attr(&header, k).ok_or_else(|| Error::Format(format!("header lacks {k}")));
        let n = field("n")?;
        if vertices.keys().copied().ne(0..n) {
            return Err(Error::Format(format!("nodes are not exactly 0..{n}")));
        }
        edges.sort_by_key(|e| (e.u, e.v));
        Ok(ColoringDocument {
            n,
            a: field("a")?,
            b: field("b")?,
            palette: field("palette")?,
            vertices: vertices.into_values().collect(),
            edges,
            scheme: None,
            kind: None,
        })
    }
}

fn parse_num(s: &str) -> Option<usize> {
    s.trim_matches('"').parse().ok()
}

fn to_color(x: usize) -> Option<Color> {
    Color::try_from(x).ok()
}

fn attr(attrs: &BTreeMap<String, String>, key: &str) -> Option<usize> {
    attrs.get(key).and_then(|v| parse_num(v))
}

/// `head [k=v, k=v]` -> (head, map)
fn split_attrs(s: &str) -> Option<(&str, BTreeMap<String, String>)> {
    let open = s.find('[')?;
    let inner = s[open + 1..].strip_suffix(']')?;
    let mut map = BTreeMap::new();
    for pair in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = pair.split_once('=')?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Some((s[..open].trim(), map))
}
