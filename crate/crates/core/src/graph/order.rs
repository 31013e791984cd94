use super::{CsrGraph, VertexId};

/// The degree order `≺`: `u ≺ v` iff `d(u) < d(v)`, or the degrees are equal
/// and `u < v` by ID.
///
/// Borrowed view over the graph's offsets; degrees are read on demand.
#[derive(Debug, Clone, Copy)]
pub struct DegreeOrder<'g> {
    offsets: &'g [usize],
}

impl<'g> DegreeOrder<'g> {
    pub fn new(graph: &'g CsrGraph) -> Self {
        Self {
            offsets: graph.offsets(),
        }
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Sort key realizing `≺`: degree in the high word, ID in the low word.
    ///
    /// Degrees are below `2^32` because vertex IDs are 32-bit, so
    /// `rank(u) < rank(v)` iff `u ≺ v`.
    #[inline]
    pub fn rank(&self, v: VertexId) -> u64 {
        ((self.degree(v) as u64) << 32) | u64::from(v)
    }

    /// `u ≺ v`.
    #[inline]
    pub fn precedes(&self, u: VertexId, v: VertexId) -> bool {
        self.rank(u) < self.rank(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn degree_dominates_then_id() {
        // star centered at 3 with leaves 0, 1, 2, plus edge 0-7
        let g = CsrGraph::from_edges(8, &[(3, 0), (3, 1), (3, 2), (0, 7), (5, 6)]).unwrap();
        let order = g.order();
        assert!(order.precedes(1, 3));
        assert!(!order.precedes(3, 1));
        // d(0) = d(5) = 2
        assert_eq!(order.degree(0), 2);
        assert!(order.precedes(0, 3));
        // d(5) = d(6) = 1, tie broken by ID
        assert!(order.precedes(5, 6));
        assert!(!order.precedes(6, 5));
        assert!(!order.precedes(4, 4));
    }

    fn small_graph() -> impl Strategy<Value = CsrGraph> {
        (2usize..24).prop_flat_map(|n| {
            proptest::collection::vec((0..n as u32, 0..n as u32), 0..60).prop_map(move |pairs| {
                let mut edges: alloc::vec::Vec<_> = pairs
                    .into_iter()
                    .filter(|(u, v)| u != v)
                    .map(|(u, v)| (u.min(v), u.max(v)))
                    .collect();
                edges.sort_unstable();
                edges.dedup();
                CsrGraph::from_edges(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn strict_total_order(g in small_graph(), picks in proptest::collection::vec(any::<u32>(), 3)) {
            let n = g.vertex_count() as u32;
            let order = g.order();
            let (a, b, c) = (picks[0] % n, picks[1] % n, picks[2] % n);
            let relations = [order.precedes(a, b), order.precedes(b, a), a == b];
            prop_assert_eq!(relations.iter().filter(|&&r| r).count(), 1);
            if order.precedes(a, b) && order.precedes(b, c) {
                prop_assert!(order.precedes(a, c));
            }
            if order.precedes(a, b) {
                prop_assert!(g.degree(a) <= g.degree(b));
            }
        }
    }
}
