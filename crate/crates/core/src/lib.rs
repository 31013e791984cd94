//! Deterministic 4-cycle counting on sparse undirected graphs.
//!
//! All counting routines walk the graph in a degree order (`u ≺ v` iff
//! `d(u) < d(v)`, ties broken by vertex ID) and use a flat size-`n` counter
//! array instead of a hash table, giving `O(m·δ̄(G))` time and `O(n)`
//! auxiliary space, where `δ̄(G)` is the average degeneracy.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and the
//! hash-map baselines live in the `fourcycle` companion crate.
//!
//! ```
//! use fourcycle_core::{count_global, gen_grid};
//!
//! let grid = gen_grid(3, 3).unwrap();
//! assert_eq!(count_global(&grid).unwrap(), 4);
//! ```

#![no_std]
#![warn(clippy::std_instead_of_alloc)]
#![warn(clippy::std_instead_of_core)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod count;
mod error;
pub mod graph;
pub mod oracle;

pub use self::count::{
    count_all, count_global, count_global_sorted, count_global_sorted_with, count_global_with,
    count_per_edge, count_per_edge_with, count_per_vertex, count_per_vertex_with, enumerate_cycles,
    enumerate_cycles_with, C4Counts, CycleTuple, DualCounter, DualScratch, EnumScratch,
    IdentityViolation, Scratch,
};
pub use self::error::{CountError, GraphError, OracleError};
pub use self::graph::{
    avg_degeneracy, gen_grid, preprocess_sort, CsrGraph, DegreeOrder, EdgeIndex, SortedCsrGraph,
    VertexId,
};
