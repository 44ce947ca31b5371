use hyperspectra::families::power_hypergraph;
use hyperspectra::SimpleGraph;
use hyperspectra_verify::canon::{graph_code, hypergraph_code};
use proptest::prelude::*;

fn graph_and_relabeling() -> impl Strategy<Value = (SimpleGraph, SimpleGraph)> {
    (3..=9usize)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
            let chords = prop::collection::vec((0..n, 0..n), 0..=3);
            let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
            (Just(n), parents, chords, perm)
        })
        .prop_map(|(n, parents, chords, perm)| {
            let mut edges: Vec<(usize, usize)> = parents
                .into_iter()
                .enumerate()
                .map(|(i, p)| (p, i + 1))
                .collect();
            for (a, b) in chords {
                if a != b
                    && !edges
                        .iter()
                        .any(|&(x, y)| (x == a && y == b) || (x == b && y == a))
                {
                    edges.push((a, b));
                }
            }
            let relabeled: Vec<(usize, usize)> = edges
                .iter()
                .rev()
                .map(|&(a, b)| (perm[b], perm[a]))
                .collect();
            (
                SimpleGraph::new(n, edges).unwrap(),
                SimpleGraph::new(n, relabeled).unwrap(),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn codes_ignore_labels((g, h) in graph_and_relabeling()) {
        prop_assert_eq!(graph_code(&g).unwrap(), graph_code(&h).unwrap());
        let (pg, ph) = (power_hypergraph(&g, 3).unwrap(), power_hypergraph(&h, 3).unwrap());
        prop_assert_eq!(hypergraph_code(&pg).unwrap(), hypergraph_code(&ph).unwrap());
    }

    #[test]
    fn equal_codes_mean_equal_spectra((g, _) in graph_and_relabeling(), (g2, _) in graph_and_relabeling()) {
        if graph_code(&g).unwrap() == graph_code(&g2).unwrap() {
            let a = hyperspectra::spectral::full_spectrum(&power_hypergraph(&g, 3).unwrap()).unwrap();
            let b = hyperspectra::spectral::full_spectrum(&power_hypergraph(&g2, 3).unwrap()).unwrap();
            prop_assert_eq!(a.len(), b.len());
            prop_assert!(a.iter().zip(&b).all(|(x, y)| (x - y).abs() < 1e-9));
        }
    }
}
