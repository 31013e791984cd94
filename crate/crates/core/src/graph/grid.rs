use alloc::vec::Vec;

use super::{CsrGraph, VertexId};
use crate::GraphError;

/// The `rows × cols` lattice graph.
///
/// Vertex `(r, c)` has ID `r·cols + c`. The result has `rows·cols` vertices,
/// `(rows−1)·cols + rows·(cols−1)` edges and exactly `(rows−1)·(cols−1)`
/// four-cycles. Neighbor lists are in ascending ID order.
pub fn gen_grid(rows: usize, cols: usize) -> Result<CsrGraph, GraphError> {
    if rows == 0 || cols == 0 {
        return Err(GraphError::EmptyDimension);
    }
    let n = rows.checked_mul(cols).ok_or(GraphError::TooLarge)?;
    if n > VertexId::MAX as usize + 1 {
        return Err(GraphError::TooLarge);
    }
    let vertical = (rows - 1).checked_mul(cols).ok_or(GraphError::TooLarge)?;
    let horizontal = rows.checked_mul(cols - 1).ok_or(GraphError::TooLarge)?;
    let half_edges = vertical
        .checked_add(horizontal)
        .and_then(|m| m.checked_mul(2))
        .ok_or(GraphError::TooLarge)?;
    let n_offsets = n.checked_add(1).ok_or(GraphError::TooLarge)?;

    let mut offsets = Vec::with_capacity(n_offsets);
    let mut adjacency = Vec::with_capacity(half_edges);
    offsets.push(0);
    for r in 0..rows {
        for c in 0..cols {
            let id = r * cols + c;
            if r > 0 {
                adjacency.push((id - cols) as VertexId);
            }
            if c > 0 {
                adjacency.push((id - 1) as VertexId);
            }
            if c + 1 < cols {
                adjacency.push((id + 1) as VertexId);
            }
            if r + 1 < rows {
                adjacency.push((id + cols) as VertexId);
            }
            offsets.push(adjacency.len());
        }
    }
    debug_assert_eq!(adjacency.len(), half_edges);
    Ok(CsrGraph::from_parts_unchecked(offsets, adjacency))
}
