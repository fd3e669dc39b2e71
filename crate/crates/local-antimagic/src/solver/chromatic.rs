//! Exact chromatic number by branch-and-bound vertex coloring, with a
//! greedy clique for the lower bound.

use crate::graph::Graph;

use super::SolveError;

pub const MAX_CHROMATIC_VERTICES: u32 = 16;

/// Size of a clique grown greedily from each vertex in descending-degree
/// order. A lower bound for the chromatic number.
pub fn greedy_clique_lower_bound(graph: &Graph) -> usize {
    let n = graph.vertex_count();
    let mut order: Vec<u32> = graph.vertices().collect();
    order.sort_by_key(|&u| std::cmp::Reverse(graph.degree(u)));
    let mut best = if n > 0 { 1 } else { 0 };
    for &start in &order {
        let mut clique = vec![start];
        for &u in &order {
            if u != start && clique.iter().all(|&c| graph.are_adjacent(c, u)) {
                clique.push(u);
            }
        }
        best = best.max(clique.len());
    }
    best
}

fn colorable(adj: &[Vec<usize>], order: &[usize], colors: &mut [usize], pos: usize, k: usize, max_used: usize) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    for color in 1..=k.min(max_used + 1) {
        if adj[v].iter().all(|&u| colors[u] != color) {
            colors[v] = color;
            if colorable(adj, order, colors, pos + 1, k, max_used.max(color)) {
                return true;
            }
            colors[v] = 0;
        }
    }
    false
}

/// Exact chromatic number; capped at [`MAX_CHROMATIC_VERTICES`] vertices.
pub fn chromatic_number(graph: &Graph) -> Result<usize, SolveError> {
    let n = graph.vertex_count();
    if n > MAX_CHROMATIC_VERTICES {
        return Err(SolveError::TooManyVertices(n, MAX_CHROMATIC_VERTICES));
    }
    if graph.edge_count() == 0 {
        return Ok(1);
    }
    // 0-based adjacency
    let mut adj = vec![Vec::new(); n as usize];
    for &(a, b) in graph.edges() {
        adj[(a - 1) as usize].push((b - 1) as usize);
        adj[(b - 1) as usize].push((a - 1) as usize);
    }
    let mut order: Vec<usize> = (0..n as usize).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));

    let lb = greedy_clique_lower_bound(graph);
    for k in lb..=n as usize {
        let mut colors = vec![0usize; n as usize];
        if colorable(&adj, &order, &mut colors, 0, k, 0) {
            return Ok(k);
        }
    }
    unreachable!("a graph on n vertices is always n-colorable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_h, make_star, Graph};

    #[test]
    fn triangle_needs_three() {
        let g = Graph::new(3, vec![(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(chromatic_number(&g).unwrap(), 3);
    }

    #[test]
    fn stars_are_bipartite() {
        assert_eq!(chromatic_number(&make_star(5).unwrap()).unwrap(), 2);
    }

    #[test]
    fn join_is_three_chromatic() {
        // classes {v}, {leaves}, {x, y}
        let h = make_h(3).unwrap();
        assert_eq!(chromatic_number(&h).unwrap(), 3);
    }

    #[test]
    fn complete_graphs() {
        for k in 2u32..=6 {
            let mut edges = Vec::new();
            for a in 1..=k {
                for b in a + 1..=k {
                    edges.push((a, b));
                }
            }
            let g = Graph::new(k, edges).unwrap();
            assert_eq!(greedy_clique_lower_bound(&g), k as usize);
            assert_eq!(chromatic_number(&g).unwrap(), k as usize);
        }
    }

    #[test]
    fn odd_cycle() {
        let c5 = Graph::new(5, vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
        assert_eq!(chromatic_number(&c5).unwrap(), 3);
    }

    #[test]
    fn vertex_cap_enforced() {
        let g = make_star(20).unwrap();
        assert!(matches!(chromatic_number(&g), Err(SolveError::TooManyVertices(21, _))));
    }
}
