//! Array-based 4-cycle counting.
//!
//! Every routine visits each vertex `v` and the wedges `(v, u, y)` with
//! `u ≺ v` and `y ≺ v`, tallying wedge endpoints `y` in a size-`n` counter
//! array. A cycle is charged to its `≺`-maximum vertex exactly once. A second
//! pass over the same wedges restores the counters to zero, so one scratch
//! buffer serves the whole run and can be reused across calls.

mod counts;
mod edge;
mod enumerate;
mod global;
mod scratch;
mod vertex;

pub use self::counts::{count_all, C4Counts, IdentityViolation};
pub use self::edge::{count_per_edge, count_per_edge_with};
pub use self::enumerate::{enumerate_cycles, enumerate_cycles_with, CycleTuple, EnumScratch};
pub use self::global::{
    count_global, count_global_sorted, count_global_sorted_with, count_global_with,
};
pub use self::scratch::{DualCounter, DualScratch, Scratch};
pub use self::vertex::{count_per_vertex, count_per_vertex_with};

use crate::CountError;

#[inline]
pub(crate) fn add(total: u64, amount: u64) -> Result<u64, CountError> {
    total.checked_add(amount).ok_or(CountError::Overflow)
}
