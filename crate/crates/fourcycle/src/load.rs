//! Plain-text edge lists.
//!
//! One edge per line as two whitespace-separated non-negative integers.
//! Lines starting with `#` and blank lines are skipped.

use std::collections::HashMap;
use std::io::{self, BufRead, Write};

use fourcycle_core::{CsrGraph, GraphError, VertexId};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, Default)]
pub struct LoadOptions {
    /// Reject duplicate edges and self-loops instead of dropping them.
    pub strict: bool,
    /// Renumber IDs densely to `0..n` in order of first appearance.
    pub remap_ids: bool,
}

/// What the loader saw and what it discarded.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LoadReport {
    /// Distinct vertex IDs appearing in the input.
    pub vertices_seen: usize,
    /// Undirected edges in the resulting graph.
    pub edges_kept: usize,
    pub duplicates_dropped: usize,
    pub self_loops_dropped: usize,
    pub remapped: bool,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: u64 },
    #[error("duplicate edge {{{u}, {v}}}")]
    Duplicate { u: u64, v: u64 },
    #[error("line {line}: vertex id {id} does not fit a 32-bit vertex id")]
    IdOverflow { line: usize, id: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Reads an edge list into a simple undirected graph.
pub fn load_edge_list<R: BufRead>(
    mut source: R,
    options: LoadOptions,
) -> Result<(CsrGraph, LoadReport), LoadError> {
    let mut report = LoadReport {
        remapped: options.remap_ids,
        ..LoadReport::default()
    };
    let mut dense: HashMap<u64, VertexId> = HashMap::new();
    // original IDs, needed to report duplicates in input terms
    let mut original: Vec<u64> = Vec::new();
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut max_id: Option<VertexId> = None;

    let mut buf = String::new();
    let mut line_no = 0;
    loop {
        buf.clear();
        if source.read_line(&mut buf)? == 0 {
            break;
        }
        line_no += 1;
        let line = buf.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_ascii_whitespace();
        let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (parse_id(a, line_no)?, parse_id(b, line_no)?),
            _ => {
                return Err(LoadError::Parse {
                    line: line_no,
                    message: format!("expected two vertex ids, got {line:?}"),
                })
            }
        };
        let mut vertex = |id: u64| -> Result<VertexId, LoadError> {
            if options.remap_ids {
                let next = dense.len();
                if let Some(&v) = dense.get(&id) {
                    return Ok(v);
                }
                let v = VertexId::try_from(next)
                    .map_err(|_| LoadError::IdOverflow { line: line_no, id })?;
                dense.insert(id, v);
                original.push(id);
                Ok(v)
            } else {
                VertexId::try_from(id).map_err(|_| LoadError::IdOverflow { line: line_no, id })
            }
        };
        let (u, v) = (vertex(a)?, vertex(b)?);
        max_id = max_id.max(Some(u.max(v)));
        if u == v {
            if options.strict {
                return Err(LoadError::SelfLoop {
                    line: line_no,
                    vertex: a,
                });
            }
            report.self_loops_dropped += 1;
            if !options.remap_ids {
                // still counts as a seen vertex
                edges.push((u, u));
            }
            continue;
        }
        edges.push((u.min(v), u.max(v)));
    }

    let n = match (options.remap_ids, max_id) {
        (true, _) => dense.len(),
        (false, Some(max)) => max as usize + 1,
        (false, None) => 0,
    };
    if options.remap_ids {
        report.vertices_seen = n;
    } else {
        let mut seen = vec![false; n];
        for &(u, v) in &edges {
            seen[u as usize] = true;
            seen[v as usize] = true;
        }
        report.vertices_seen = seen.iter().filter(|&&s| s).count();
        edges.retain(|&(u, v)| u != v);
    }

    edges.sort_unstable();
    let before = edges.len();
    if options.strict {
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            let label = |v: VertexId| {
                if options.remap_ids {
                    original[v as usize]
                } else {
                    u64::from(v)
                }
            };
            return Err(LoadError::Duplicate {
                u: label(w[0].0),
                v: label(w[0].1),
            });
        }
    }
    edges.dedup();
    report.duplicates_dropped = before - edges.len();
    report.edges_kept = edges.len();

    let graph = CsrGraph::from_edges(n, &edges)?;
    Ok((graph, report))
}

fn parse_id(token: &str, line: usize) -> Result<u64, LoadError> {
    token.parse().map_err(|_| LoadError::Parse {
        line,
        message: format!("invalid vertex id {token:?}"),
    })
}

/// Writes each undirected edge once as `u v` with `u < v`.
pub fn write_edge_list<W: Write>(graph: &CsrGraph, mut sink: W) -> io::Result<()> {
    for (u, v) in graph.edges() {
        writeln!(sink, "{u} {v}")?;
    }
    sink.flush()
}
