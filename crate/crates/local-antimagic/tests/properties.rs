//! Property tests for the kernel invariants and file formats.

use proptest::prelude::*;

use local_antimagic::construct::{applicable_case, construct, expected_weights, partition_pair};
use local_antimagic::graph::Graph;
use local_antimagic::io;
use local_antimagic::labeling::{check_local_antimagic, color_count, weight_vector, EdgeLabeling};
use local_antimagic::solver::chromatic_number;

/// A random simple graph on 2..=8 vertices with at least one edge.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (2u32..=8)
        .prop_flat_map(|n| {
            let all_pairs: Vec<(u32, u32)> = (1..=n)
                .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
                .collect();
            let len = all_pairs.len();
            (Just(n), prop::collection::vec(any::<bool>(), len), Just(all_pairs))
        })
        .prop_filter_map("need an edge", |(n, mask, pairs)| {
            let edges: Vec<(u32, u32)> = pairs
                .into_iter()
                .zip(mask)
                .filter_map(|(e, keep)| keep.then_some(e))
                .collect();
            if edges.is_empty() {
                return None;
            }
            Graph::new(n, edges).ok()
        })
}

fn arb_labeled_graph() -> impl Strategy<Value = (Graph, EdgeLabeling)> {
    (arb_graph(), any::<u64>()).prop_map(|(g, seed)| {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut labels: Vec<u64> = (1..=g.edge_count() as u64).collect();
        labels.shuffle(&mut rng);
        let f = EdgeLabeling::for_graph(&g, labels).unwrap();
        (g, f)
    })
}

proptest! {
    #[test]
    fn handshake_identity((g, f) in arb_labeled_graph()) {
        let m = g.edge_count() as u64;
        let total: u64 = weight_vector(&g, &f).unwrap().0.iter().sum();
        prop_assert_eq!(total, m * (m + 1));
    }

    #[test]
    fn non_permutations_rejected((g, f) in arb_labeled_graph(), dup_at in any::<prop::sample::Index>()) {
        let mut labels = f.labels().to_vec();
        if labels.len() >= 2 {
            let i = dup_at.index(labels.len());
            let j = (i + 1) % labels.len();
            labels[i] = labels[j];
            prop_assert!(EdgeLabeling::for_graph(&g, labels).is_err());
        }
    }

    #[test]
    fn accepted_labelings_bound_the_chromatic_number((g, f) in arb_labeled_graph()) {
        if check_local_antimagic(&g, &f).unwrap().accepted() {
            let chi = chromatic_number(&g).unwrap();
            prop_assert!(color_count(&g, &f).unwrap() >= chi);
        }
    }

    #[test]
    fn color_count_is_isomorphism_invariant((g, f) in arb_labeled_graph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = g.vertex_count();
        let mut perm: Vec<u32> = (1..=n).collect();
        perm.shuffle(&mut rng);
        let map = |u: u32| perm[(u - 1) as usize];

        let new_edges: Vec<(u32, u32)> = g.edges().iter().map(|&(a, b)| (map(a), map(b))).collect();
        let h = Graph::new(n, new_edges).unwrap();
        let mut new_labels = vec![0u64; g.edge_count()];
        for (idx, &(a, b)) in g.edges().iter().enumerate() {
            let key = (map(a).min(map(b)), map(a).max(map(b)));
            let new_idx = h.edges().binary_search(&key).unwrap();
            new_labels[new_idx] = f.label(idx);
        }
        let f2 = EdgeLabeling::for_graph(&h, new_labels).unwrap();
        prop_assert_eq!(color_count(&g, &f).unwrap(), color_count(&h, &f2).unwrap());
    }

    #[test]
    fn graph_format_round_trip(g in arb_graph()) {
        let text = io::write_graph_text(&g);
        let back = io::read_graph_text(&text).unwrap();
        prop_assert_eq!(g.vertex_count(), back.vertex_count());
        prop_assert_eq!(g.edges(), back.edges());
    }

    #[test]
    fn labeling_formats_round_trip((g, f) in arb_labeled_graph()) {
        let text = io::write_labeling_text(&g, &f);
        let records = io::read_labeling_text(&text).unwrap();
        prop_assert_eq!(&io::bind_labeling(&g, &records).unwrap(), &f);

        let json = io::write_labeling_json(&g, &f);
        let records = io::read_labeling_json(&json).unwrap();
        prop_assert_eq!(&io::bind_labeling(&g, &records).unwrap(), &f);
    }

    #[test]
    fn partition_blocks_cover_the_label_range(k in 1u64..200) {
        // k-th odd number >= 3
        let n = 2 * k + 1;
        if applicable_case(n).unwrap().accepting() {
            let mut all = Vec::new();
            for i in 1..=n {
                let (a, b) = partition_pair(n, i).unwrap();
                prop_assert_eq!(i + a + b, (9 * n + 11) / 2);
                all.push(a);
                all.push(b);
            }
            all.sort_unstable();
            let expected: Vec<u64> = (n + 3..=3 * n + 2).collect();
            prop_assert_eq!(all, expected);
        }
    }

    #[test]
    fn constructions_verify_for_random_accepting_n(k in 1u64..500) {
        let n = 2 * k + 1;
        if applicable_case(n).unwrap().accepting() {
            let c = construct(n).unwrap();
            prop_assert!(check_local_antimagic(&c.graph, &c.labeling).unwrap().accepted());
            prop_assert_eq!(c.weights.distinct_count(), 3);
            let p = expected_weights(n).unwrap();
            prop_assert_eq!(c.weights.get(1), p.hub);
            prop_assert_eq!(c.weights.get(n as u32 + 2), p.apex);
            prop_assert_eq!(c.weights.get(n as u32 + 3), p.apex);
        }
    }
}
