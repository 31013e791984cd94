//! Brute-force 4-cycle oracles for desk-scale graphs.
//!
//! Both work on a dense adjacency matrix and share nothing with the counting
//! algorithms beyond the graph type. They exist to check the fast paths.

use alloc::vec;
use alloc::vec::Vec;

use crate::count::C4Counts;
use crate::graph::CsrGraph;
use crate::OracleError;

/// Default size cap for [`oracle_global_codegree`].
pub const CODEGREE_CAP: usize = 128;
/// Default size cap for [`oracle_local_quadruples`].
pub const QUADRUPLE_CAP: usize = 64;

/// Symmetric `n × n` boolean adjacency matrix with a zero diagonal.
#[derive(Debug, Clone)]
pub struct DenseAdjacency {
    n: usize,
    cells: Vec<bool>,
}

impl DenseAdjacency {
    pub fn new(graph: &CsrGraph, cap: usize) -> Result<Self, OracleError> {
        let n = graph.vertex_count();
        if n > cap {
            return Err(OracleError::TooLarge { n, cap });
        }
        let mut cells = vec![false; n * n];
        for v in graph.vertices() {
            for &u in graph.neighbors(v) {
                cells[v as usize * n + u as usize] = true;
                cells[u as usize * n + v as usize] = true;
            }
        }
        Ok(Self { n, cells })
    }

    #[inline]
    pub fn has(&self, a: usize, b: usize) -> bool {
        self.cells[a * self.n + b]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

/// `□(G)` as `½·Σ_{a<b} C(codeg(a, b), 2)`: every 4-cycle has two antipodal
/// pairs, and each pair sees the cycle as a choice of two common neighbors.
pub fn oracle_global_codegree(graph: &CsrGraph) -> Result<u64, OracleError> {
    oracle_global_codegree_capped(graph, CODEGREE_CAP)
}

pub fn oracle_global_codegree_capped(graph: &CsrGraph, cap: usize) -> Result<u64, OracleError> {
    let adj = DenseAdjacency::new(graph, cap)?;
    let n = adj.len();
    let mut twice = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            let common = (0..n).filter(|&c| adj.has(a, c) && adj.has(b, c)).count() as u64;
            twice += common * common.saturating_sub(1) / 2;
        }
    }
    debug_assert!(twice.is_multiple_of(2));
    Ok(twice / 2)
}

/// Global, per-vertex and per-edge counts by enumerating every closed walk
/// `a → b → c → d → a` on four distinct vertices.
///
/// Each distinct cycle yields 8 such walks (4 rotations × 2 directions), so
/// all tallies are divided by 8. `per_edge` follows [`CsrGraph::edges`] order.
pub fn oracle_local_quadruples(graph: &CsrGraph) -> Result<C4Counts, OracleError> {
    oracle_local_quadruples_capped(graph, QUADRUPLE_CAP)
}

pub fn oracle_local_quadruples_capped(
    graph: &CsrGraph,
    cap: usize,
) -> Result<C4Counts, OracleError> {
    let adj = DenseAdjacency::new(graph, cap)?;
    let n = adj.len();
    let mut walks = 0u64;
    let mut vertex_walks = vec![0u64; n];
    let mut pair_walks = vec![0u64; n * n];
    for a in 0..n {
        for b in 0..n {
            if b == a || !adj.has(a, b) {
                continue;
            }
            for c in 0..n {
                if c == a || c == b || !adj.has(b, c) {
                    continue;
                }
                for d in 0..n {
                    if d == a || d == b || d == c || !adj.has(c, d) || !adj.has(d, a) {
                        continue;
                    }
                    walks += 1;
                    for x in [a, b, c, d] {
                        vertex_walks[x] += 1;
                    }
                    for (x, y) in [(a, b), (b, c), (c, d), (d, a)] {
                        pair_walks[x.min(y) * n + x.max(y)] += 1;
                    }
                }
            }
        }
    }
    let per_edge = graph
        .edges()
        .map(|(u, v)| pair_walks[u as usize * n + v as usize] / 8)
        .collect();
    Ok(C4Counts {
        global: walks / 8,
        per_vertex: vertex_walks.into_iter().map(|w| w / 8).collect(),
        per_edge,
    })
}
