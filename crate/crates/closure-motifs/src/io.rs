//! Edge-list text format.
//!
//! Lines starting with `#` are comments. The first non-comment line is the
//! vertex count `n`; every following non-comment line is one edge `u v` with
//! `0 <= u, v < n`, whitespace-separated. Serialization emits this format
//! with edges sorted lexicographically, so `serialize(parse(x))` is the
//! canonical form of `x`.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = idx + 1;
        match n {
            None => {
                n = Some(line.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    message: format!("expected vertex count, got {line:?}"),
                })?);
            }
            Some(_) => {
                let mut it = line.split_whitespace();
                let (u, v) = match (it.next(), it.next(), it.next()) {
                    (Some(u), Some(v), None) => (u, v),
                    _ => {
                        return Err(Error::Parse {
                            line: lineno,
                            message: format!("expected \"u v\", got {line:?}"),
                        })
                    }
                };
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| Error::Parse {
                        line: lineno,
                        message: format!("invalid vertex {s:?}"),
                    })
                };
                edges.push((parse(u)?, parse(v)?));
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: text.lines().count() + 1,
        message: "missing vertex count".into(),
    })?;
    Graph::from_edges(n, edges).map_err(|e| match e {
        Error::VertexOutOfRange { vertex, n } => Error::Parse {
            line: 0,
            message: format!("vertex {vertex} out of range for n = {n}"),
        },
        Error::SelfLoop(v) => Error::Parse {
            line: 0,
            message: format!("self-loop at vertex {v}"),
        },
        other => other,
    })
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{}\n", g.vertex_count()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
