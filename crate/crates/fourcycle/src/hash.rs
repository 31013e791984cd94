//! Hash-map baselines for the array algorithms.
//!
//! Same wedge traversal as `fourcycle_core::count`, with the counter array
//! replaced by the standard library `HashMap` and its default hasher. These
//! exist for cross-checking and for the array-versus-map benchmark.

use std::collections::HashMap;

use fourcycle_core::{CountError, CsrGraph, DualCounter, VertexId};

/// Vertex → counter map where absent keys read as zero.
#[derive(Debug, Clone, Default)]
pub struct VertexMap {
    counts: HashMap<VertexId, u64>,
}

impl VertexMap {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn get(&self, v: VertexId) -> u64 {
        self.counts.get(&v).copied().unwrap_or(0)
    }

    /// Adds one and returns the value before the increment.
    #[inline]
    pub fn increment(&mut self, v: VertexId) -> u64 {
        let slot = self.counts.entry(v).or_insert(0);
        let before = *slot;
        *slot += 1;
        before
    }

    pub fn clear(&mut self) {
        self.counts.clear();
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

/// Packs `{u, v}` into one word: smaller endpoint in the high 32 bits.
#[inline]
pub fn edge_key(u: VertexId, v: VertexId) -> u64 {
    (u64::from(u.min(v)) << 32) | u64::from(u.max(v))
}

/// Undirected edge → counter map keyed by [`edge_key`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeKeyMap {
    counts: HashMap<u64, u64>,
}

impl EdgeKeyMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(m: usize) -> Self {
        Self {
            counts: HashMap::with_capacity(m),
        }
    }

    /// Count for `{u, v}`; edges never touched read as zero.
    pub fn get(&self, u: VertexId, v: VertexId) -> u64 {
        self.counts.get(&edge_key(u, v)).copied().unwrap_or(0)
    }

    #[inline]
    pub fn add(&mut self, u: VertexId, v: VertexId, amount: u64) -> Result<(), CountError> {
        let slot = self.counts.entry(edge_key(u, v)).or_insert(0);
        *slot = slot.checked_add(amount).ok_or(CountError::Overflow)?;
        Ok(())
    }

    /// Counts laid out in the graph's edge-index order.
    pub fn to_indexed(&self, graph: &CsrGraph) -> Vec<u64> {
        graph.edges().map(|(u, v)| self.get(u, v)).collect()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

#[inline]
fn add(total: u64, amount: u64) -> Result<u64, CountError> {
    total.checked_add(amount).ok_or(CountError::Overflow)
}

/// `□(G)` with a fresh map per outer vertex and a single pass; the map is
/// dropped instead of zeroed.
pub fn count_global_hash(graph: &CsrGraph) -> Result<u64, CountError> {
    let order = graph.order();
    let mut total = 0u64;
    for v in graph.vertices() {
        let rank_v = order.rank(v);
        let mut wedges = VertexMap::new();
        for &u in graph.neighbors(v) {
            if order.rank(u) < rank_v {
                for &y in graph.neighbors(u) {
                    if order.rank(y) < rank_v {
                        total = add(total, wedges.increment(y))?;
                    }
                }
            }
        }
    }
    Ok(total)
}

/// `□(x)` for every vertex, fresh map per outer vertex.
///
/// The second pass credits each `u` with `H(y) − 1` from the final counts.
pub fn count_per_vertex_hash(graph: &CsrGraph) -> Result<Vec<u64>, CountError> {
    let order = graph.order();
    let mut local = vec![0u64; graph.vertex_count()];
    for v in graph.vertices() {
        let rank_v = order.rank(v);
        let nv = graph.neighbors(v);
        let mut wedges = VertexMap::new();
        for &u in nv {
            if order.rank(u) < rank_v {
                for &y in graph.neighbors(u) {
                    if order.rank(y) < rank_v {
                        let before = wedges.increment(y);
                        local[v as usize] = add(local[v as usize], before)?;
                        local[y as usize] = add(local[y as usize], before)?;
                    }
                }
            }
        }
        for &u in nv {
            if order.rank(u) < rank_v {
                for &y in graph.neighbors(u) {
                    if order.rank(y) < rank_v {
                        local[u as usize] = add(local[u as usize], wedges.get(y) - 1)?;
                    }
                }
            }
        }
    }
    Ok(local)
}

/// `□(e)` for every edge, with one vertex map kept across outer vertices and
/// one edge map of size `m`.
///
/// The vertex map stores a running count and a saved copy per key, like the
/// array version: the second pass reads the copy (final count minus one)
/// and zeroes the running count, so no stale count leaks into the next outer
/// vertex.
pub fn count_per_edge_hash(graph: &CsrGraph) -> Result<EdgeKeyMap, CountError> {
    let order = graph.order();
    let mut wedges: HashMap<VertexId, DualCounter> = HashMap::new();
    let mut per_edge = EdgeKeyMap::with_capacity(graph.edge_count());
    for v in graph.vertices() {
        let rank_v = order.rank(v);
        let nv = graph.neighbors(v);
        for &u in nv {
            if order.rank(u) < rank_v {
                for &y in graph.neighbors(u) {
                    if order.rank(y) < rank_v {
                        let slot = wedges.entry(y).or_default();
                        slot.copy = slot.orig;
                        slot.orig += 1;
                    }
                }
            }
        }
        for &u in nv {
            if order.rank(u) < rank_v {
                for &y in graph.neighbors(u) {
                    if order.rank(y) < rank_v {
                        let slot = wedges.get_mut(&y).expect("wedge endpoint was counted");
                        let others = slot.copy;
                        slot.orig = 0;
                        per_edge.add(v, u, others)?;
                        per_edge.add(u, y, others)?;
                    }
                }
            }
        }
    }
    Ok(per_edge)
}
