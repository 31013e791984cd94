use super::{add, Scratch};
use crate::graph::{CsrGraph, SortedCsrGraph, VertexId};
use crate::CountError;

/// Number of distinct 4-cycles `□(G)`.
///
/// Allocates one size-`n` [`Scratch`]; use [`count_global_with`] to reuse one.
pub fn count_global(graph: &CsrGraph) -> Result<u64, CountError> {
    count_global_with(graph, &mut Scratch::new(graph.vertex_count()))
}

/// [`count_global`] with caller-provided scratch, grown if shorter than `n`.
///
/// The scratch is all-zero when this returns, on success or error.
pub fn count_global_with(graph: &CsrGraph, scratch: &mut Scratch) -> Result<u64, CountError> {
    let result = global_pass(graph, scratch.fit(graph.vertex_count()));
    if result.is_err() {
        scratch.reset();
    }
    result
}

fn global_pass(graph: &CsrGraph, wedges: &mut [u64]) -> Result<u64, CountError> {
    let order = graph.order();
    let mut total = 0u64;
    for v in graph.vertices() {
        let rank_v = order.rank(v);
        let nv = graph.neighbors(v);
        for &u in nv {
            if order.rank(u) < rank_v {
                for &y in graph.neighbors(u) {
                    if order.rank(y) < rank_v {
                        // Adding the running value before the increment sums
                        // 0 + 1 + ... + (ℓ−1) = C(ℓ, 2) over the ℓ wedges.
                        let slot = &mut wedges[y as usize];
                        total = add(total, *slot)?;
                        *slot += 1;
                    }
                }
            }
        }
        for &u in nv {
            if order.rank(u) < rank_v {
                for &y in graph.neighbors(u) {
                    wedges[y as usize] = 0;
                }
            }
        }
    }
    Ok(total)
}

/// `□(G)` on a degree-partitioned graph.
///
/// Inner loops walk `N(u)` from its start and stop at `v` itself, with no
/// order comparisons: everything before `v` in `N(u)` precedes `v`.
pub fn count_global_sorted(graph: &SortedCsrGraph) -> Result<u64, CountError> {
    count_global_sorted_with(graph, &mut Scratch::new(graph.vertex_count()))
}

pub fn count_global_sorted_with(
    graph: &SortedCsrGraph,
    scratch: &mut Scratch,
) -> Result<u64, CountError> {
    let result = sorted_pass(graph, scratch.fit(graph.vertex_count()));
    if result.is_err() {
        scratch.reset();
    }
    result
}

fn sorted_pass(graph: &SortedCsrGraph, wedges: &mut [u64]) -> Result<u64, CountError> {
    let mut total = 0u64;
    for v in 0..graph.vertex_count() as VertexId {
        let lower = graph.lower(v);
        for &u in lower {
            for &y in graph.neighbors(u) {
                if y == v {
                    break;
                }
                let slot = &mut wedges[y as usize];
                total = add(total, *slot)?;
                *slot += 1;
            }
        }
        for &u in lower {
            for &y in graph.neighbors(u) {
                if y == v {
                    break;
                }
                wedges[y as usize] = 0;
            }
        }
    }
    Ok(total)
}
