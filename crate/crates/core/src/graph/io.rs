//! Line-oriented graph text format:
//!
//! ```text
//! # comment
//! graph <V> <E>
//! v <id> <num>/<den>      (or `v <id> <int>`)
//! e <u> <v>
//! ```

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::Weight;

impl WeightedGraph {
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut weights: Vec<Option<Weight>> = Vec::new();
        let mut edges = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |message: String| Error::Parse { line: line_no, message };
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let int = |s: &str| s.parse::<usize>().map_err(|_| err(format!("expected a non-negative integer, got {s:?}")));
            match (fields[0], header) {
                ("graph", None) => {
                    if fields.len() != 3 {
                        return Err(err("expected `graph <V> <E>`".into()));
                    }
                    let (v, e) = (int(fields[1])?, int(fields[2])?);
                    weights = vec![None; v];
                    header = Some((v, e));
                }
                ("graph", Some(_)) => return Err(err("duplicate header".into())),
                (_, None) => return Err(err("first non-comment line must be `graph <V> <E>`".into())),
                ("v", Some((count, _))) => {
                    if fields.len() != 3 {
                        return Err(err("expected `v <id> <weight>`".into()));
                    }
                    let id = int(fields[1])?;
                    if id >= count {
                        return Err(err(format!("vertex id {id} out of range 0..{count}")));
                    }
                    if weights[id].is_some() {
                        return Err(err(format!("vertex {id} declared twice")));
                    }
                    let w = Weight::from_str(fields[2]).map_err(|e| err(e.to_string()))?;
                    weights[id] = Some(w);
                }
                ("e", Some((count, _))) => {
                    if fields.len() != 3 {
                        return Err(err("expected `e <u> <v>`".into()));
                    }
                    let (u, v) = (int(fields[1])?, int(fields[2])?);
                    if u >= count || v >= count {
                        return Err(err(format!("edge {u}-{v} references a vertex outside 0..{count}")));
                    }
                    edges.push((line_no, u, v));
                }
                (other, Some(_)) => return Err(err(format!("unknown record {other:?}"))),
            }
        }

        let (_, edge_count) = header.ok_or(Error::Parse { line: 0, message: "missing `graph` header".into() })?;
        if let Some(missing) = weights.iter().position(Option::is_none) {
            return Err(Error::Parse { line: 0, message: format!("vertex {missing} has no `v` line") });
        }
        if edges.len() != edge_count {
            return Err(Error::Parse {
                line: 0,
                message: format!("header announces {edge_count} edges, found {}", edges.len()),
            });
        }
        let mut g = WeightedGraph::new(weights.into_iter().map(Option::unwrap).collect());
        for (line, u, v) in edges {
            g.add_edge(u, v).map_err(|e| Error::Parse { line, message: e.to_string() })?;
        }
        Ok(g)
    }

    /// Serializes in the text format; integer weights are written without a denominator.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph {} {}", self.vertex_count(), self.edge_count()).unwrap();
        for v in self.vertices() {
            let w = self.weight(v);
            if w.denom() == 1 {
                writeln!(out, "v {v} {}", w.numer()).unwrap();
            } else {
                writeln!(out, "v {v} {}/{}", w.numer(), w.denom()).unwrap();
            }
        }
        for (u, v) in self.edges() {
            writeln!(out, "e {u} {v}").unwrap();
        }
        out
    }
}

impl FromStr for WeightedGraph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        WeightedGraph::parse(s)
    }
}
