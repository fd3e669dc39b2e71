//! The desk-scale oracle: try every bijection of labels onto edges and take
//! the minimum color count over the ones the verifier accepts.

use std::time::Instant;

use crate::graph::Graph;
use crate::labeling::EdgeLabeling;

use super::{ChiLaSolver, LowerBoundSource, SolveError, SolveOptions, SolveReport};

pub const MAX_ORACLE_EDGES: usize = 8;

/// Minimum color count over all accepted labelings, found by full |E|!
/// enumeration. Errors if no bijection passes the check at all.
pub fn exhaustive_chi_la(graph: &Graph) -> Result<(usize, EdgeLabeling), SolveError> {
    let m = graph.edge_count();
    if m > MAX_ORACLE_EDGES {
        return Err(SolveError::TooLarge(m, MAX_ORACLE_EDGES));
    }
    let n = graph.vertex_count() as usize;
    let edge_ends: Vec<(usize, usize)> = graph
        .edges()
        .iter()
        .map(|&(a, b)| ((a - 1) as usize, (b - 1) as usize))
        .collect();

    let mut best: Option<(usize, Vec<u64>)> = None;
    let mut perm: Vec<u64> = (1..=m as u64).collect();
    let mut weights = vec![0u64; n];
    let mut seen = vec![0u64; n];

    // Heap's algorithm over label orders
    let mut evaluate = |perm: &[u64], best: &mut Option<(usize, Vec<u64>)>| {
        weights.iter_mut().for_each(|w| *w = 0);
        for (idx, &(a, b)) in edge_ends.iter().enumerate() {
            weights[a] += perm[idx];
            weights[b] += perm[idx];
        }
        if edge_ends.iter().any(|&(a, b)| weights[a] == weights[b]) {
            return;
        }
        seen.clear();
        seen.extend_from_slice(&weights);
        seen.sort_unstable();
        seen.dedup();
        let colors = seen.len();
        if best.as_ref().map_or(true, |(b, _)| colors < *b) {
            *best = Some((colors, perm.to_vec()));
        }
    };

    let mut counters = vec![0usize; m];
    evaluate(&perm, &mut best);
    let mut i = 0;
    while i < m {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            evaluate(&perm, &mut best);
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }

    let (colors, labels) = best.ok_or(SolveError::NoLabeling)?;
    Ok((colors, EdgeLabeling::for_graph(graph, labels)?))
}

/// The oracle as a registry solver. Always exact on its (tiny) domain.
pub struct ExhaustiveSolver;

impl ChiLaSolver for ExhaustiveSolver {
    fn name(&self) -> &'static str {
        "exhaustive"
    }

    fn solve(&self, graph: &Graph, opts: &SolveOptions) -> Result<SolveReport, SolveError> {
        let start = Instant::now();
        let (chi_la, witness) = exhaustive_chi_la(graph)?;
        let m = graph.edge_count() as u64;
        Ok(SolveReport {
            vertex_count: graph.vertex_count(),
            edge_count: graph.edge_count(),
            chi_la,
            exact: true,
            witness: Some(witness),
            nodes_explored: (1..=m).product(),
            elapsed_ms: start.elapsed().as_millis() as u64,
            lower_bound: chi_la,
            lower_bound_source: LowerBoundSource::Trivial,
            seed: opts.seed,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_h, make_star, Graph};
    use crate::labeling::{check_local_antimagic, color_count};

    #[test]
    fn small_paths_and_cycles() {
        let p4 = Graph::new(4, vec![(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(exhaustive_chi_la(&p4).unwrap().0, 3);

        let c3 = Graph::new(3, vec![(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(exhaustive_chi_la(&c3).unwrap().0, 3);

        let k12 = make_star(2).unwrap();
        assert_eq!(exhaustive_chi_la(&k12).unwrap().0, 3);
    }

    #[test]
    fn witness_is_valid() {
        let h1 = make_h(1).unwrap();
        let (chi, witness) = exhaustive_chi_la(&h1).unwrap();
        assert_eq!(chi, 3);
        assert!(check_local_antimagic(&h1, &witness).unwrap().accepted());
        assert_eq!(color_count(&h1, &witness).unwrap(), chi);
    }

    #[test]
    fn no_labeling_on_k2() {
        // both endpoints of the single edge always weigh the same
        let k2 = make_star(1).unwrap();
        assert!(matches!(exhaustive_chi_la(&k2), Err(SolveError::NoLabeling)));
    }

    #[test]
    fn edge_cap() {
        let g = make_star(9).unwrap();
        assert!(matches!(exhaustive_chi_la(&g), Err(SolveError::TooLarge(9, 8))));
    }

    #[test]
    fn every_star_bijection_gives_n_plus_1_colors() {
        // stars are the one family where the oracle value is forced
        for n in 2..=5u32 {
            let g = make_star(n).unwrap();
            assert_eq!(exhaustive_chi_la(&g).unwrap().0, n as usize + 1);
        }
    }
}
