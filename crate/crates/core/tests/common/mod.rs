#![allow(dead_code)]

use hyperspectra::families::power_hypergraph;
use hyperspectra::{Hypergraph, SimpleGraph};
use proptest::prelude::*;

/// Connected simple graph: a random tree on `n` vertices plus up to `chords`
/// extra edges (duplicates dropped).
pub fn connected_graph(max_n: usize, chords: usize) -> impl Strategy<Value = SimpleGraph> {
    (2..=max_n)
        .prop_flat_map(move |n| {
            let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
            let extra = prop::collection::vec((0..n, 0..n), 0..=chords);
            (Just(n), parents, extra)
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .into_iter()
                .enumerate()
                .map(|(i, p)| (p, i + 1))
                .collect();
            for (a, b) in extra {
                let (a, b) = (a.min(b), a.max(b));
                if a != b && !edges.iter().any(|&(x, y)| (x.min(y), x.max(y)) == (a, b)) {
                    edges.push((a, b));
                }
            }
            SimpleGraph::new(n, edges).expect("valid graph")
        })
}

pub fn power(max_n: usize, chords: usize) -> impl Strategy<Value = Hypergraph> {
    (connected_graph(max_n, chords), 3..=5usize)
        .prop_map(|(g, m)| power_hypergraph(&g, m).expect("power"))
}

/// Connected linear hypergraph that need not be a power hypergraph: edges are
/// added one at a time, each meeting up to `max_shared` pairwise non-adjacent
/// existing vertices, the rest fresh.
pub fn linear(max_k: usize, max_shared: usize) -> impl Strategy<Value = Hypergraph> {
    (3..=4usize, 1..=max_k)
        .prop_flat_map(move |(m, k)| {
            let picks = prop::collection::vec(
                prop::collection::vec(any::<prop::sample::Index>(), 1..=max_shared.min(m)),
                k - 1,
            );
            (Just(m), picks)
        })
        .prop_map(|(m, picks)| {
            let mut edges: Vec<Vec<usize>> = vec![(0..m).collect()];
            let mut n = m;
            for pick in picks {
                let mut shared: Vec<usize> = Vec::new();
                for (t, idx) in pick.into_iter().enumerate() {
                    let v = idx.index(n);
                    // First pick always joins; later ones only if they keep the
                    // hypergraph linear.
                    let ok = !shared.contains(&v)
                        && shared
                            .iter()
                            .all(|&u| !edges.iter().any(|e| e.contains(&u) && e.contains(&v)))
                        && (t == 0 || shared.len() < m);
                    if ok {
                        shared.push(v);
                    }
                }
                let mut e = shared.clone();
                while e.len() < m {
                    e.push(n);
                    n += 1;
                }
                e.sort_unstable();
                edges.push(e);
            }
            Hypergraph::new(m, n, edges).expect("construction keeps the hypergraph linear")
        })
}
