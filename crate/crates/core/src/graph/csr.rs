use alloc::vec;
use alloc::vec::Vec;

use super::{DegreeOrder, VertexId};
use crate::GraphError;

/// Simple undirected graph in compressed sparse row form.
///
/// Both directions of every edge are stored, so the adjacency array holds
/// `2m` half-edges. `N(v)` is `adjacency[offsets[v]..offsets[v + 1]]`.
/// The graph is immutable once built; every constructor checks (or, for the
/// internal generators, guarantees) that it is symmetric, loop-free and free
/// of duplicate neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsrGraph {
    offsets: Vec<usize>,
    adjacency: Vec<VertexId>,
}

impl CsrGraph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_vertex_count(n)?;
        Ok(Self {
            offsets: vec![0; n + 1],
            adjacency: Vec::new(),
        })
    }

    /// Builds a graph on `n` vertices from undirected edges.
    ///
    /// Self-loops and repeated edges (in either direction) are rejected.
    /// Neighborhoods come out sorted by vertex ID.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        check_vertex_count(n)?;
        let mut canonical = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w as usize >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: u64::from(w),
                        n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            canonical.push((u.min(v), u.max(v)));
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge {
                u: w[0].0,
                v: w[0].1,
            });
        }
        Self::from_sorted_canonical(n, &canonical)
    }

    /// Builds from edges that are already `(low, high)` with `low < high`,
    /// sorted and unique. The caller guarantees this.
    pub(crate) fn from_sorted_canonical(
        n: usize,
        edges: &[(VertexId, VertexId)],
    ) -> Result<Self, GraphError> {
        let half_edges = edges.len().checked_mul(2).ok_or(GraphError::TooLarge)?;
        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in edges {
            offsets[u as usize + 1] += 1;
            offsets[v as usize + 1] += 1;
        }
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        debug_assert_eq!(offsets[n], half_edges);
        let mut cursor = offsets[..n].to_vec();
        let mut adjacency = vec![0; half_edges];
        // Edges sorted by (low, high) fill every N(v) in ascending order.
        for &(u, v) in edges {
            adjacency[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            adjacency[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        Ok(Self { offsets, adjacency })
    }

    /// Wraps raw CSR arrays after validating every graph invariant.
    ///
    /// Neighbor order inside each list is kept as given, which is how tests
    /// feed the algorithms arbitrarily permuted adjacency lists.
    pub fn from_parts(offsets: Vec<usize>, adjacency: Vec<VertexId>) -> Result<Self, GraphError> {
        let n = offsets
            .len()
            .checked_sub(1)
            .ok_or(GraphError::MalformedOffsets)?;
        check_vertex_count(n)?;
        if offsets[0] != 0
            || offsets[n] != adjacency.len()
            || offsets.windows(2).any(|w| w[0] > w[1])
            || !adjacency.len().is_multiple_of(2)
        {
            return Err(GraphError::MalformedOffsets);
        }
        let mut half_edges = Vec::with_capacity(adjacency.len());
        for v in 0..n {
            for &u in &adjacency[offsets[v]..offsets[v + 1]] {
                if u as usize >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: u64::from(u),
                        n,
                    });
                }
                if u as usize == v {
                    return Err(GraphError::SelfLoop { vertex: u });
                }
                half_edges.push((v as VertexId, u));
            }
        }
        half_edges.sort_unstable();
        if let Some(w) = half_edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge {
                u: w[0].0,
                v: w[0].1,
            });
        }
        let mut reversed: Vec<_> = half_edges.iter().map(|&(v, u)| (u, v)).collect();
        reversed.sort_unstable();
        if let Some((&forward, &backward)) = half_edges
            .iter()
            .zip(&reversed)
            .find(|(forward, backward)| forward != backward)
        {
            // The smaller of the two is present on one side only.
            let (u, v) = if forward < backward {
                forward
            } else {
                (backward.1, backward.0)
            };
            return Err(GraphError::Asymmetric { u, v });
        }
        Ok(Self { offsets, adjacency })
    }

    /// Trusted constructor for generators that build valid arrays directly.
    pub(crate) fn from_parts_unchecked(offsets: Vec<usize>, adjacency: Vec<VertexId>) -> Self {
        debug_assert_eq!(offsets.first(), Some(&0));
        debug_assert_eq!(offsets.last(), Some(&adjacency.len()));
        Self { offsets, adjacency }
    }

    pub fn into_parts(self) -> (Vec<usize>, Vec<VertexId>) {
        (self.offsets, self.adjacency)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges `m`.
    #[inline]
    pub fn edge_count(&self) -> usize {
        self.adjacency.len() / 2
    }

    /// Number of stored half-edges, `2m`.
    #[inline]
    pub fn half_edge_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.adjacency[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Prefix sums of the degrees; `offsets()[v]` is where `N(v)` starts.
    #[inline]
    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    #[inline]
    pub fn adjacency(&self) -> &[VertexId] {
        &self.adjacency
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).map(|v| v as VertexId)
    }

    pub fn order(&self) -> DegreeOrder<'_> {
        DegreeOrder::new(self)
    }

    pub fn max_degree(&self) -> usize {
        self.offsets
            .windows(2)
            .map(|w| w[1] - w[0])
            .max()
            .unwrap_or(0)
    }

    /// Recomputes the degree prefix sums from scratch.
    ///
    /// Equal to [`offsets`](Self::offsets). Edge-local counting builds its
    /// own copy as part of the count.
    pub fn degree_prefix_sums(&self) -> Vec<usize> {
        let mut prefix = Vec::with_capacity(self.offsets.len());
        let mut total = 0;
        prefix.push(0);
        for w in self.offsets.windows(2) {
            total += w[1] - w[0];
            prefix.push(total);
        }
        prefix
    }

    /// Undirected edges as `(low, high)` pairs in edge-index order.
    ///
    /// The `i`-th item is the edge whose index is `i`: half-edges with a
    /// smaller source than target, in CSR scan order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |v| {
            self.neighbors(v)
                .iter()
                .filter(move |&&u| u > v)
                .map(move |&u| (v, u))
        })
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let (scan, target) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(scan).contains(&target)
    }
}

fn check_vertex_count(n: usize) -> Result<(), GraphError> {
    // IDs must fit VertexId and n + 1 offsets must be addressable.
    if n > VertexId::MAX as usize + 1 || n == usize::MAX {
        return Err(GraphError::TooLarge);
    }
    Ok(())
}

/// Maps undirected edges to dense indices `0..m`.
///
/// The index of `{u, v}` is the rank of the half-edge `min(u, v) → max(u, v)`
/// among all low-to-high half-edges in CSR scan order, matching
/// [`CsrGraph::edges`].
#[derive(Debug, Clone)]
pub struct EdgeIndex<'g> {
    graph: &'g CsrGraph,
    forward_offsets: Vec<usize>,
}

impl<'g> EdgeIndex<'g> {
    pub fn new(graph: &'g CsrGraph) -> Self {
        let mut forward_offsets = Vec::with_capacity(graph.vertex_count() + 1);
        let mut total = 0;
        forward_offsets.push(0);
        for v in graph.vertices() {
            total += graph.neighbors(v).iter().filter(|&&u| u > v).count();
            forward_offsets.push(total);
        }
        Self {
            graph,
            forward_offsets,
        }
    }

    /// Index of `{u, v}`, or `None` if it is not an edge.
    pub fn index_of(&self, u: VertexId, v: VertexId) -> Option<usize> {
        let (low, high) = (u.min(v), u.max(v));
        if low == high || high as usize >= self.graph.vertex_count() {
            return None;
        }
        let mut rank = self.forward_offsets[low as usize];
        for &w in self.graph.neighbors(low) {
            if w == high {
                return Some(rank);
            }
            if w > low {
                rank += 1;
            }
        }
        None
    }

    pub fn len(&self) -> usize {
        self.forward_offsets[self.forward_offsets.len() - 1]
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
