use super::CsrGraph;
use crate::GraphError;

/// Average degeneracy `δ̄(G) = (1/m)·Σ_{uv∈E} min{d(u), d(v)}`.
///
/// The sum is accumulated exactly in a `u64` and divided once.
pub fn avg_degeneracy(graph: &CsrGraph) -> Result<f64, GraphError> {
    let m = graph.edge_count();
    if m == 0 {
        return Err(GraphError::NoEdges);
    }
    let order = graph.order();
    let sum: u64 = graph
        .edges()
        .map(|(u, v)| order.degree(u).min(order.degree(v)) as u64)
        .sum();
    Ok(sum as f64 / m as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen_grid;

    #[test]
    fn simple_values() {
        let cycle = CsrGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(avg_degeneracy(&cycle).unwrap(), 2.0);
        let star = CsrGraph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(avg_degeneracy(&star).unwrap(), 1.0);
        assert_eq!(
            avg_degeneracy(&CsrGraph::empty(5).unwrap()),
            Err(GraphError::NoEdges)
        );
    }

    #[test]
    fn grid_three_by_three() {
        // 8 boundary edges touch a degree-2 corner; the 4 spokes have min 3.
        let g = gen_grid(3, 3).unwrap();
        let expected = (8.0 * 2.0 + 4.0 * 3.0) / 12.0;
        assert_eq!(avg_degeneracy(&g).unwrap(), expected);
    }
}
