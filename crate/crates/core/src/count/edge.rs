use alloc::vec;
use alloc::vec::Vec;

use super::{add, DualCounter, DualScratch};
use crate::graph::{CsrGraph, VertexId};
use crate::CountError;

/// `□(e)` for every edge, indexed by [`EdgeIndex`](crate::EdgeIndex) order
/// (the order of [`CsrGraph::edges`]).
///
/// Needs `O(m + n)` space: the degree prefix sums, a counter per half-edge
/// and the output.
pub fn count_per_edge(graph: &CsrGraph) -> Result<Vec<u64>, CountError> {
    count_per_edge_with(graph, &mut DualScratch::new(graph.vertex_count()))
}

pub fn count_per_edge_with(
    graph: &CsrGraph,
    scratch: &mut DualScratch,
) -> Result<Vec<u64>, CountError> {
    // One counter per half-edge, laid out like the adjacency array: the
    // counter for (v, N(v)[i]) lives at starts[v] + i.
    let starts = graph.degree_prefix_sums();
    let mut directed = vec![0u64; graph.half_edge_count()];
    let wedges = scratch.fit(graph.vertex_count());
    if let Err(e) = accumulate(graph, &starts, wedges, &mut directed) {
        scratch.reset();
        return Err(e);
    }
    fold_half_edges(graph, &starts, &mut directed)?;

    let mut per_edge = Vec::with_capacity(graph.edge_count());
    for v in graph.vertices() {
        let start = starts[v as usize];
        for (i, &u) in graph.neighbors(v).iter().enumerate() {
            if u > v {
                per_edge.push(directed[start + i]);
            }
        }
    }
    Ok(per_edge)
}

fn accumulate(
    graph: &CsrGraph,
    starts: &[usize],
    wedges: &mut [DualCounter],
    directed: &mut [u64],
) -> Result<(), CountError> {
    let order = graph.order();
    for v in graph.vertices() {
        let rank_v = order.rank(v);
        let nv = graph.neighbors(v);
        for &u in nv {
            if order.rank(u) < rank_v {
                for &y in graph.neighbors(u) {
                    if order.rank(y) < rank_v {
                        let slot = &mut wedges[y as usize];
                        slot.copy = slot.orig;
                        slot.orig += 1;
                    }
                }
            }
        }
        let base_v = starts[v as usize];
        for (i, &u) in nv.iter().enumerate() {
            if order.rank(u) < rank_v {
                let base_u = starts[u as usize];
                let mut at_vu = directed[base_v + i];
                for (j, &y) in graph.neighbors(u).iter().enumerate() {
                    if order.rank(y) < rank_v {
                        let slot = &mut wedges[y as usize];
                        at_vu = add(at_vu, slot.copy)?;
                        directed[base_u + j] = add(directed[base_u + j], slot.copy)?;
                        slot.orig = 0;
                    }
                }
                directed[base_v + i] = at_vu;
            }
        }
    }
    Ok(())
}

/// Sums the two directional counters of every edge into the slot of its
/// low-to-high half-edge.
///
/// The reverse half-edge is found by a linear scan of the `≺`-smaller
/// endpoint's list, which totals `Σ_{uv∈E} min{d(u), d(v)}` steps.
fn fold_half_edges(
    graph: &CsrGraph,
    starts: &[usize],
    directed: &mut [u64],
) -> Result<(), CountError> {
    let order = graph.order();
    for v in graph.vertices() {
        let rank_v = order.rank(v);
        for (i, &u) in graph.neighbors(v).iter().enumerate() {
            if order.rank(u) < rank_v {
                let j = reverse_position(graph.neighbors(u), v);
                let vu = starts[v as usize] + i;
                let uv = starts[u as usize] + j;
                let total = add(directed[vu], directed[uv])?;
                directed[if v < u { vu } else { uv }] = total;
            }
        }
    }
    Ok(())
}

#[inline]
fn reverse_position(list: &[VertexId], target: VertexId) -> usize {
    list.iter()
        .position(|&w| w == target)
        .expect("adjacency is symmetric")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen_grid;

    #[test]
    fn single_cycle() {
        let g = CsrGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(count_per_edge(&g).unwrap(), [1, 1, 1, 1]);
    }

    #[test]
    fn k4() {
        let g = CsrGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(count_per_edge(&g).unwrap(), [2; 6]);
    }

    #[test]
    fn path_has_none() {
        let g = CsrGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(count_per_edge(&g).unwrap(), [0, 0, 0]);
    }

    #[test]
    fn grid_center_spokes() {
        let g = gen_grid(3, 3).unwrap();
        let counts = count_per_edge(&g).unwrap();
        for ((u, v), c) in g.edges().zip(&counts) {
            let expected = if u == 4 || v == 4 { 2 } else { 1 };
            assert_eq!(*c, expected, "edge {u}-{v}");
        }
    }
}
