use alloc::vec::Vec;

use super::{CsrGraph, VertexId};

/// A graph whose neighborhoods are partitioned by the degree order.
///
/// Every `N(v)` starts with `N⁻(v)` (neighbors preceding `v`, in their input
/// order) followed by `N⁺(v)` sorted ascending by `≺`. Only
/// [`preprocess_sort`] produces this type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortedCsrGraph {
    graph: CsrGraph,
    /// Absolute adjacency position where `N⁺(v)` begins.
    split: Vec<usize>,
}

impl SortedCsrGraph {
    /// The underlying CSR graph, with permuted neighborhoods.
    pub fn graph(&self) -> &CsrGraph {
        &self.graph
    }

    pub fn into_graph(self) -> CsrGraph {
        self.graph
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// `N⁻(v)`.
    #[inline]
    pub fn lower(&self, v: VertexId) -> &[VertexId] {
        let start = self.graph.offsets()[v as usize];
        &self.graph.adjacency()[start..self.split[v as usize]]
    }

    /// `N⁺(v)`, sorted by `≺`.
    #[inline]
    pub fn upper(&self, v: VertexId) -> &[VertexId] {
        let end = self.graph.offsets()[v as usize + 1];
        &self.graph.adjacency()[self.split[v as usize]..end]
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        self.graph.neighbors(v)
    }
}

/// Reorders every neighborhood as `N⁻(v)` then `≺`-sorted `N⁺(v)`.
///
/// Works in place on the consumed graph. Auxiliary memory is one buffer of
/// at most the maximum degree plus the `n` split points.
pub fn preprocess_sort(graph: CsrGraph) -> SortedCsrGraph {
    let n = graph.vertex_count();
    // Ranks depend only on degrees, which the permutation leaves alone.
    let degrees: Vec<usize> = graph.offsets().windows(2).map(|w| w[1] - w[0]).collect();
    let rank = |v: VertexId| ((degrees[v as usize] as u64) << 32) | u64::from(v);
    let (offsets, mut adjacency) = graph.into_parts();

    let mut split = Vec::with_capacity(n);
    let mut upper = Vec::new();
    for v in 0..n {
        let own = rank(v as VertexId);
        let list = &mut adjacency[offsets[v]..offsets[v + 1]];
        // stable partition: N⁻ keeps input order at the front
        upper.clear();
        let mut lower_len = 0;
        for i in 0..list.len() {
            let u = list[i];
            if rank(u) < own {
                list[lower_len] = u;
                lower_len += 1;
            } else {
                upper.push(u);
            }
        }
        let tail = &mut list[lower_len..];
        tail.copy_from_slice(&upper);
        tail.sort_unstable_by_key(|&u| rank(u));
        split.push(offsets[v] + lower_len);
    }
    drop(degrees);

    SortedCsrGraph {
        graph: CsrGraph::from_parts_unchecked(offsets, adjacency),
        split,
    }
}
