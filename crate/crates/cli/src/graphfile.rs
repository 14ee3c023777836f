//! Line-oriented graph files.
//!
//! ```text
//! # path 1-2-3
//! graph 3
//! 1 2
//! 2 3
//! ```
//!
//! The header is `graph N [d D] [directed]`. Each later line holds one edge
//! `u v` with 1-based vertices; in a directed file `u` is the origin.
//! Everything after `#` is ignored.

use std::collections::BTreeSet;
use std::path::Path;

use graphsym::{OrientedGraph, UndirectedGraph};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub levels: Option<usize>,
    pub directed: bool,
    pub edges: Vec<(usize, usize)>,
}

impl GraphFile {
    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Parses `text`; `origin` names the source in error messages.
    pub fn parse(text: &str, origin: &str) -> CliResult<Self> {
        let err = |line: usize, message: String| CliError::Parse {
            path: origin.to_string(),
            line,
            message,
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (line, header) = lines
            .next()
            .ok_or_else(|| err(1, "missing `graph N` header".into()))?;
        let mut tokens = header.split_whitespace();
        if tokens.next() != Some("graph") {
            return Err(err(
                line,
                format!("expected `graph N [d D] [directed]`, found `{header}`"),
            ));
        }
        let vertices = parse_count(tokens.next(), "vertex count").map_err(|m| err(line, m))?;
        if vertices == 0 {
            return Err(err(line, "a graph needs at least one vertex".into()));
        }
        let mut levels = None;
        let mut directed = false;
        while let Some(t) = tokens.next() {
            match t {
                "d" if levels.is_none() => {
                    let d = parse_count(tokens.next(), "level count").map_err(|m| err(line, m))?;
                    if d < 2 {
                        return Err(err(
                            line,
                            format!("level count must be at least 2, got {d}"),
                        ));
                    }
                    levels = Some(d);
                }
                "directed" if !directed => directed = true,
                other => return Err(err(line, format!("unexpected header token `{other}`"))),
            }
        }
        if directed && vertices < 2 {
            return Err(err(
                line,
                "a directed graph needs at least two vertices".into(),
            ));
        }

        let mut seen = BTreeSet::new();
        let mut edges = Vec::new();
        for (line, body) in lines {
            let fields: Vec<&str> = body.split_whitespace().collect();
            let [a, b] = fields[..] else {
                return Err(err(line, format!("expected an edge `u v`, found `{body}`")));
            };
            let u = parse_vertex(a, vertices).map_err(|m| err(line, m))?;
            let v = parse_vertex(b, vertices).map_err(|m| err(line, m))?;
            if u == v {
                return Err(err(line, format!("self-loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(err(line, format!("duplicate edge between {u} and {v}")));
            }
            edges.push((u, v));
        }
        Ok(GraphFile {
            vertices,
            levels,
            directed,
            edges,
        })
    }

    pub fn undirected(&self) -> CliResult<UndirectedGraph> {
        if self.directed {
            return Err(CliError::Usage(
                "the cz construction needs an undirected graph file".into(),
            ));
        }
        Ok(UndirectedGraph::from_edges(
            self.vertices,
            self.edges.iter().copied(),
        )?)
    }

    pub fn oriented(&self) -> CliResult<OrientedGraph> {
        if !self.directed {
            return Err(CliError::Usage(
                "the gr construction needs a directed graph file (`graph N directed`)".into(),
            ));
        }
        Ok(OrientedGraph::from_edges(
            self.vertices,
            self.edges.iter().copied(),
        )?)
    }

    /// Renders the file back into the text grammar.
    pub fn to_text(&self) -> String {
        let mut out = format!("graph {}", self.vertices);
        if let Some(d) = self.levels {
            out.push_str(&format!(" d {d}"));
        }
        if self.directed {
            out.push_str(" directed");
        }
        out.push('\n');
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_count(token: Option<&str>, what: &str) -> Result<usize, String> {
    let t = token.ok_or_else(|| format!("missing {what}"))?;
    t.parse()
        .map_err(|_| format!("{what} `{t}` is not a non-negative integer"))
}

fn parse_vertex(token: &str, vertices: usize) -> Result<usize, String> {
    let v: usize = token
        .parse()
        .map_err(|_| format!("vertex `{token}` is not a positive integer"))?;
    if v == 0 || v > vertices {
        return Err(format!("vertex {v} out of range 1..={vertices}"));
    }
    Ok(v)
}
