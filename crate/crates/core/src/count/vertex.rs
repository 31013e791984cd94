use alloc::vec;
use alloc::vec::Vec;

use super::{add, DualCounter, DualScratch};
use crate::graph::CsrGraph;
use crate::CountError;

/// `□(x)` for every vertex `x`: the number of 4-cycles through `x`.
pub fn count_per_vertex(graph: &CsrGraph) -> Result<Vec<u64>, CountError> {
    count_per_vertex_with(graph, &mut DualScratch::new(graph.vertex_count()))
}

/// [`count_per_vertex`] with caller-provided scratch.
///
/// For a cycle with `≺`-maximum `v`, the first pass credits `v` and the
/// vertex antipodal to it; the second pass credits the two neighbors of `v`
/// on the cycle, using the saved copy `ℓ − 1` of the final wedge count `ℓ`.
pub fn count_per_vertex_with(
    graph: &CsrGraph,
    scratch: &mut DualScratch,
) -> Result<Vec<u64>, CountError> {
    let mut local = vec![0u64; graph.vertex_count()];
    let result = vertex_pass(graph, scratch.fit(graph.vertex_count()), &mut local);
    if result.is_err() {
        scratch.reset();
    }
    result.map(|()| local)
}

fn vertex_pass(
    graph: &CsrGraph,
    wedges: &mut [DualCounter],
    local: &mut [u64],
) -> Result<(), CountError> {
    let order = graph.order();
    for v in graph.vertices() {
        let rank_v = order.rank(v);
        let nv = graph.neighbors(v);
        // y ≺ v and u ≺ v, so local[v] is not touched until the pass ends.
        let mut at_v = local[v as usize];
        for &u in nv {
            if order.rank(u) < rank_v {
                for &y in graph.neighbors(u) {
                    if order.rank(y) < rank_v {
                        let slot = &mut wedges[y as usize];
                        at_v = add(at_v, slot.orig)?;
                        local[y as usize] = add(local[y as usize], slot.orig)?;
                        slot.copy = slot.orig;
                        slot.orig += 1;
                    }
                }
            }
        }
        local[v as usize] = at_v;
        for &u in nv {
            if order.rank(u) < rank_v {
                let mut at_u = local[u as usize];
                for &y in graph.neighbors(u) {
                    if order.rank(y) < rank_v {
                        let slot = &mut wedges[y as usize];
                        at_u = add(at_u, slot.copy)?;
                        slot.orig = 0;
                    }
                }
                local[u as usize] = at_u;
            }
        }
    }
    Ok(())
}
