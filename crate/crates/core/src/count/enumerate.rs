use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{CsrGraph, VertexId};

/// One distinct 4-cycle `v – u – y – x – v`.
///
/// `v` is the `≺`-maximum of the four vertices, `y` is antipodal to `v`, and
/// `x` reached `y` before `u` did during the scan of `N(v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleTuple {
    pub v: VertexId,
    pub u: VertexId,
    pub y: VertexId,
    pub x: VertexId,
}

impl CycleTuple {
    /// Order-free identity of the cycle: its two antipodal pairs, each
    /// sorted, with the pairs sorted.
    pub fn canonical(&self) -> [[VertexId; 2]; 2] {
        let sorted = |a: VertexId, b: VertexId| [a.min(b), a.max(b)];
        let first = sorted(self.v, self.y);
        let second = sorted(self.u, self.x);
        if first <= second {
            [first, second]
        } else {
            [second, first]
        }
    }

    /// The cycle's edges in walk order.
    pub fn edges(&self) -> [(VertexId, VertexId); 4] {
        [
            (self.v, self.u),
            (self.u, self.y),
            (self.y, self.x),
            (self.x, self.v),
        ]
    }
}

const NIL: usize = usize::MAX;

#[derive(Debug, Clone, Copy)]
struct Node {
    vertex: VertexId,
    next: usize,
}

/// Per-vertex append-only lists of earlier wedge midpoints.
///
/// Lists live in one arena that is cleared after each outer vertex.
#[derive(Debug, Clone, Default)]
pub struct EnumScratch {
    head: Vec<usize>,
    tail: Vec<usize>,
    nodes: Vec<Node>,
}

impl EnumScratch {
    pub fn new(n: usize) -> Self {
        Self {
            head: vec![NIL; n],
            tail: vec![NIL; n],
            nodes: Vec::new(),
        }
    }

    /// Every list is empty.
    pub fn is_clear(&self) -> bool {
        self.nodes.is_empty() && self.head.iter().all(|&h| h == NIL)
    }

    fn fit(&mut self, n: usize) {
        if self.head.len() < n {
            self.head.resize(n, NIL);
            self.tail.resize(n, NIL);
        }
    }

    fn reset(&mut self) {
        self.head.fill(NIL);
        self.tail.fill(NIL);
        self.nodes.clear();
    }

    fn push(&mut self, list: VertexId, vertex: VertexId) {
        let id = self.nodes.len();
        self.nodes.push(Node { vertex, next: NIL });
        let list = list as usize;
        match self.tail[list] {
            NIL => self.head[list] = id,
            last => self.nodes[last].next = id,
        }
        self.tail[list] = id;
    }
}

/// Streams every distinct 4-cycle to `sink` exactly once and returns how many
/// were emitted, which equals [`count_global`](crate::count_global).
///
/// A sink error stops the enumeration and is returned as is.
pub fn enumerate_cycles<E, F>(graph: &CsrGraph, sink: F) -> Result<u64, E>
where
    F: FnMut(CycleTuple) -> Result<(), E>,
{
    enumerate_cycles_with(graph, &mut EnumScratch::new(graph.vertex_count()), sink)
}

pub fn enumerate_cycles_with<E, F>(
    graph: &CsrGraph,
    scratch: &mut EnumScratch,
    mut sink: F,
) -> Result<u64, E>
where
    F: FnMut(CycleTuple) -> Result<(), E>,
{
    scratch.fit(graph.vertex_count());
    let order = graph.order();
    let mut emitted = 0u64;
    for v in graph.vertices() {
        let rank_v = order.rank(v);
        let nv = graph.neighbors(v);
        for &u in nv {
            if order.rank(u) < rank_v {
                for &y in graph.neighbors(u) {
                    if order.rank(y) < rank_v {
                        let mut cursor = scratch.head[y as usize];
                        while cursor != NIL {
                            let node = scratch.nodes[cursor];
                            if let Err(e) = sink(CycleTuple {
                                v,
                                u,
                                y,
                                x: node.vertex,
                            }) {
                                scratch.reset();
                                return Err(e);
                            }
                            emitted += 1;
                            cursor = node.next;
                        }
                        scratch.push(y, u);
                    }
                }
            }
        }
        for &u in nv {
            if order.rank(u) < rank_v {
                for &y in graph.neighbors(u) {
                    scratch.head[y as usize] = NIL;
                    scratch.tail[y as usize] = NIL;
                }
            }
        }
        scratch.nodes.clear();
    }
    Ok(emitted)
}
