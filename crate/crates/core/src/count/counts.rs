use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{count_global, count_per_edge, count_per_vertex};
use crate::graph::{CsrGraph, VertexId};
use crate::CountError;

/// Global, per-vertex and per-edge 4-cycle counts of one graph.
///
/// `per_edge` is indexed like [`CsrGraph::edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C4Counts {
    pub global: u64,
    pub per_vertex: Vec<u64>,
    pub per_edge: Vec<u64>,
}

/// A local-count identity that does not hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityViolation {
    /// `per_vertex` or `per_edge` has the wrong length.
    Shape,
    /// `Σ_v □(v) ≠ 4·□(G)`.
    VertexSum { sum: u128, global: u64 },
    /// `Σ_e □(e) ≠ 4·□(G)`.
    EdgeSum { sum: u128, global: u64 },
    /// `Σ_{u∈N(v)} □(vu) ≠ 2·□(v)`.
    Incident {
        vertex: VertexId,
        sum: u128,
        local: u64,
    },
}

impl fmt::Display for IdentityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Shape => f.write_str("local count arrays have the wrong length"),
            Self::VertexSum { sum, global } => {
                write!(f, "sum of vertex counts {sum} is not 4 x {global}")
            }
            Self::EdgeSum { sum, global } => {
                write!(f, "sum of edge counts {sum} is not 4 x {global}")
            }
            Self::Incident { vertex, sum, local } => write!(
                f,
                "edge counts around vertex {vertex} sum to {sum}, not 2 x {local}"
            ),
        }
    }
}

impl core::error::Error for IdentityViolation {}

impl C4Counts {
    /// Checks `¼·Σ□(v) = □(G)`, `¼·Σ□(e) = □(G)` and
    /// `½·Σ_{u∈N(v)} □(vu) = □(v)` exactly, in integers.
    pub fn check_identities(&self, graph: &CsrGraph) -> Result<(), IdentityViolation> {
        if self.per_vertex.len() != graph.vertex_count()
            || self.per_edge.len() != graph.edge_count()
        {
            return Err(IdentityViolation::Shape);
        }
        let four_global = 4 * u128::from(self.global);
        let sum: u128 = self.per_vertex.iter().map(|&c| u128::from(c)).sum();
        if sum != four_global {
            return Err(IdentityViolation::VertexSum {
                sum,
                global: self.global,
            });
        }
        let sum: u128 = self.per_edge.iter().map(|&c| u128::from(c)).sum();
        if sum != four_global {
            return Err(IdentityViolation::EdgeSum {
                sum,
                global: self.global,
            });
        }
        let mut incident = vec![0u128; graph.vertex_count()];
        for ((u, v), &c) in graph.edges().zip(&self.per_edge) {
            incident[u as usize] += u128::from(c);
            incident[v as usize] += u128::from(c);
        }
        for (v, (&sum, &local)) in incident.iter().zip(&self.per_vertex).enumerate() {
            if sum != 2 * u128::from(local) {
                return Err(IdentityViolation::Incident {
                    vertex: v as VertexId,
                    sum,
                    local,
                });
            }
        }
        Ok(())
    }
}

/// Runs the global, vertex-local and edge-local array algorithms.
pub fn count_all(graph: &CsrGraph) -> Result<C4Counts, CountError> {
    Ok(C4Counts {
        global: count_global(graph)?,
        per_vertex: count_per_vertex(graph)?,
        per_edge: count_per_edge(graph)?,
    })
}
