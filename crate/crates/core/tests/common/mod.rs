#![allow(dead_code)]

use fourcycle_core::{CsrGraph, VertexId};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn gnp(n: usize, p: f64, seed: u64) -> CsrGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as VertexId {
        for v in u + 1..n as VertexId {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    CsrGraph::from_edges(n, &edges).unwrap()
}

pub fn clique(k: u32) -> CsrGraph {
    let edges: Vec<_> = (0..k)
        .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
        .collect();
    CsrGraph::from_edges(k as usize, &edges).unwrap()
}

/// Same graph with every adjacency list shuffled.
pub fn shuffle_neighbors(graph: &CsrGraph, seed: u64) -> CsrGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (offsets, mut adjacency) = graph.clone().into_parts();
    for w in offsets.windows(2) {
        adjacency[w[0]..w[1]].shuffle(&mut rng);
    }
    CsrGraph::from_parts(offsets, adjacency).unwrap()
}
