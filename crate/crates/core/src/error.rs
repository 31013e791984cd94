use core::fmt;

use crate::graph::VertexId;

/// Errors raised while building or inspecting a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// An endpoint is not below the vertex count.
    VertexOutOfRange {
        vertex: u64,
        n: usize,
    },
    SelfLoop {
        vertex: VertexId,
    },
    DuplicateEdge {
        u: VertexId,
        v: VertexId,
    },
    /// `u` lists `v` as a neighbor but not the other way around.
    Asymmetric {
        u: VertexId,
        v: VertexId,
    },
    /// The offset array is not a valid prefix sum over the adjacency array.
    MalformedOffsets,
    /// Vertex or half-edge count does not fit the index types.
    TooLarge,
    /// A generator dimension was zero.
    EmptyDimension,
    /// The quantity is undefined on a graph without edges.
    NoEdges,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            Self::SelfLoop { vertex } => write!(f, "self-loop on vertex {vertex}"),
            Self::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u}, {v}}}"),
            Self::Asymmetric { u, v } => {
                write!(
                    f,
                    "{v} is a neighbor of {u} but {u} is not a neighbor of {v}"
                )
            }
            Self::MalformedOffsets => f.write_str("offsets are not a prefix sum of the degrees"),
            Self::TooLarge => f.write_str("graph size overflows the vertex or offset type"),
            Self::EmptyDimension => f.write_str("grid dimensions must be positive"),
            Self::NoEdges => f.write_str("graph has no edges"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A 64-bit cycle counter would have wrapped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountError {
    Overflow,
}

impl fmt::Display for CountError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Overflow => f.write_str("4-cycle counter overflowed 64 bits"),
        }
    }
}

impl core::error::Error for CountError {}

/// The brute-force oracles refuse graphs above their size cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { n: usize, cap: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TooLarge { n, cap } => {
                write!(f, "oracle refuses graph with {n} vertices (cap is {cap})")
            }
        }
    }
}

impl core::error::Error for OracleError {}
