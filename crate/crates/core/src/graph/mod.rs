//! Immutable CSR graphs, the degree order and graph statistics.

mod csr;
mod grid;
mod order;
mod sorted;
mod stats;

pub use self::csr::{CsrGraph, EdgeIndex};
pub use self::grid::gen_grid;
pub use self::order::DegreeOrder;
pub use self::sorted::{preprocess_sort, SortedCsrGraph};
pub use self::stats::avg_degeneracy;

/// Vertex identifier. Vertices of a graph with `n` vertices are `0..n`.
pub type VertexId = u32;
