//! Seeded generation of small connected graphs for oracle comparisons.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// A uniform-ish connected graph with the given edge count: a random
/// spanning tree first, then extra edges drawn from the remaining pairs.
/// Vertex count is drawn from the connected-feasible range.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, edge_count: usize) -> Graph {
    assert!(edge_count >= 1);
    let min_v = {
        // need C(v,2) >= edge_count
        let mut v = 2u32;
        while (v * (v - 1) / 2) < edge_count as u32 {
            v += 1;
        }
        v
    };
    let max_v = (edge_count + 1) as u32;
    let v = rng.gen_range(min_v..=max_v);

    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(edge_count);
    // random recursive tree keeps it connected
    for new in 2..=v {
        let parent = rng.gen_range(1..new);
        edges.push((parent, new));
    }
    let mut candidates: Vec<(u32, u32)> = Vec::new();
    for a in 1..=v {
        for b in a + 1..=v {
            if !edges.contains(&(a, b)) {
                candidates.push((a, b));
            }
        }
    }
    while edges.len() < edge_count {
        let pick = rng.gen_range(0..candidates.len());
        edges.push(candidates.swap_remove(pick));
    }
    Graph::new(v, edges).expect("generated edges are simple by construction")
}

/// All connected graphs on labeled vertices with exactly `edge_count`
/// edges and no isolated vertices (so the vertex count is determined by
/// the edges actually used).
pub fn all_connected_graphs(edge_count: usize) -> Vec<Graph> {
    assert!(edge_count <= 7, "enumeration meant for tiny sizes");
    let max_v = (edge_count + 1) as u32;
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for a in 1..=max_v {
        for b in a + 1..=max_v {
            pairs.push((a, b));
        }
    }
    let mut out = Vec::new();
    // choose edge_count pairs out of all candidate pairs
    let mut choice: Vec<usize> = (0..edge_count).collect();
    loop {
        let edges: Vec<(u32, u32)> = choice.iter().map(|&i| pairs[i]).collect();
        // vertices must be exactly 1..=k for some k, with none skipped,
        // otherwise the same shape is counted again under a relabeling
        let used_max = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap();
        let mut used = vec![false; used_max as usize + 1];
        for &(a, b) in &edges {
            used[a as usize] = true;
            used[b as usize] = true;
        }
        if used[1..=used_max as usize].iter().all(|&u| u) {
            let g = Graph::new(used_max, edges).unwrap();
            if g.is_connected() {
                out.push(g);
            }
        }
        // next combination
        let mut i = edge_count;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if choice[i] != i + pairs.len() - edge_count {
                choice[i] += 1;
                for j in i + 1..edge_count {
                    choice[j] = choice[j - 1] + 1;
                }
                break;
            }
        }
    }
}
