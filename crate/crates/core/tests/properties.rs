//! Structural and spectral invariants over randomly generated instances.

mod common;

use hyperspectra::closed_forms as cf;
use hyperspectra::cycles::{classify_cyclicity, Cyclicity};
use hyperspectra::families::{self as fam, power_hypergraph, AttachmentSpec};
use hyperspectra::partition::{
    canonical_power_partition, coarsest_equitable_refinement, quotient_matrix, Partition,
};
use hyperspectra::spectral::{
    full_spectrum, rayleigh_quotient, spectral_radius, spectrum_contained,
};
use hyperspectra::transform::{
    move_certified, move_edges, release_edge, spread_edges, SpreadGroup, SpreadPlan,
};
use hyperspectra::{Hypergraph, SimpleGraph};
use proptest::prelude::*;

fn lam(h: &Hypergraph) -> f64 {
    spectral_radius(h, 1e-12).unwrap().lambda1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn perron_vector_is_positive_with_small_residual(h in common::linear(12, 3)) {
        let r = spectral_radius(&h, 1e-12).unwrap();
        prop_assert!(r.residual <= 1e-10);
        prop_assert!(r.perron_vector.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn rayleigh_quotient_never_exceeds_radius(
        h in common::power(8, 2),
        raw in prop::collection::vec(-1.0f64..1.0, 64),
    ) {
        let x: Vec<f64> = raw.iter().cycle().take(h.n()).copied().collect();
        prop_assume!(x.iter().any(|v| v.abs() > 1e-3));
        prop_assert!(rayleigh_quotient(&h, &x).unwrap() <= lam(&h) + 1e-10);
    }

    #[test]
    fn spectrum_has_zero_trace(h in common::linear(10, 2)) {
        let s: f64 = full_spectrum(&h).unwrap().iter().sum();
        prop_assert!(s.abs() <= 1e-8);
    }

    #[test]
    fn adding_an_edge_never_lowers_the_radius(g in common::connected_graph(8, 2), at in any::<prop::sample::Index>(), m in 3..=4usize) {
        let v = at.index(g.n());
        let mut edges = g.edges().to_vec();
        edges.push((v, g.n()));
        let bigger = SimpleGraph::new(g.n() + 1, edges).unwrap();
        prop_assert!(lam(&power_hypergraph(&bigger, m).unwrap()) >= lam(&power_hypergraph(&g, m).unwrap()) - 1e-12);
    }

    #[test]
    fn degrees_are_integers(h in common::linear(12, 3)) {
        for v in 0..h.n() {
            prop_assert!(h.degree(v).unwrap().is_integer());
        }
    }

    #[test]
    fn acyclic_exactly_when_vertex_count_is_tree_like(h in common::linear(10, 3)) {
        let r = classify_cyclicity(&h).unwrap();
        prop_assert_eq!(r.loose_cycle_count == 0, h.n() == h.k() * (h.m() - 1) + 1);
    }

    #[test]
    fn release_is_monotone_and_preserves_counts(h in common::power(8, 2), pick in any::<prop::sample::Index>()) {
        let candidates: Vec<usize> = (0..h.k()).filter(|&e| h.non_pendant_vertices(e).len() >= 2).collect();
        prop_assume!(!candidates.is_empty());
        let e = candidates[pick.index(candidates.len())];
        let u = h.non_pendant_vertices(e)[0];
        // On cyclic shapes releasing can fold two edges together; that is an
        // error, never a silent result.
        let out = match release_edge(&h, e, u) {
            Ok(out) => out,
            Err(_) => {
                prop_assert!(h.cyclomatic_number() > 0);
                return Ok(());
            }
        };
        prop_assert_eq!((out.n(), out.k()), (h.n(), h.k()));
        prop_assert!(out.validate().is_valid());
        prop_assert!(lam(&out) - lam(&h) > 1e-9);
    }

    #[test]
    fn certified_moves_increase_the_radius(h in common::power(8, 1), pick in any::<prop::sample::Index>()) {
        let x = spectral_radius(&h, 1e-12).unwrap().perron_vector;
        // Move a pendant edge hanging at u to the vertex with the largest
        // Perron entry outside it.
        let pendants: Vec<usize> = (0..h.k()).filter(|&e| h.is_pendant_edge(e)).collect();
        prop_assume!(!pendants.is_empty());
        let e = pendants[pick.index(pendants.len())];
        let u = h.non_pendant_vertices(e)[0];
        let to = (0..h.n()).filter(|&v| !h.contains(e, v)).max_by(|&a, &b| x[a].total_cmp(&x[b])).unwrap();
        prop_assume!(x[to] > x[u] + 1e-9);
        prop_assert!(move_certified(&x, &[(e, u)], to));
        match move_edges(&h, &[(e, u)], to) {
            Ok(out) => {
                prop_assert_eq!((out.n(), out.k()), (h.n(), h.k()));
                prop_assert!(lam(&out) - lam(&h) > 1e-9);
            }
            // Regluing may collide with an edge already through `to`.
            Err(_) => {}
        }
    }

    #[test]
    fn single_target_spread_is_a_move(h in common::power(8, 1), pick in any::<prop::sample::Index>(), to in any::<prop::sample::Index>()) {
        let e = pick.index(h.k());
        let u = h.edge(e)[0];
        let to = to.index(h.n());
        let moved = move_edges(&h, &[(e, u)], to);
        let spread = spread_edges(&h, &SpreadPlan { groups: vec![SpreadGroup { source: u, edges: vec![e], targets: vec![to] }] });
        match (moved, spread) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a.edges(), b.edges()),
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "move {:?} vs spread {:?}", a.is_ok(), b.is_ok()),
        }
    }

    #[test]
    fn equitable_quotients_share_the_radius(g in common::connected_graph(7, 2), m in 3..=4usize) {
        let (h, canonical) = canonical_power_partition(&g, m).unwrap();
        let whole = coarsest_equitable_refinement(&h, &Partition::whole(h.n())).unwrap();
        let spectrum = full_spectrum(&h).unwrap();
        let r = spectral_radius(&h, 1e-12).unwrap();
        for pi in [canonical, whole] {
            let q = quotient_matrix(&h, &pi).unwrap();
            prop_assert!(q.is_irreducible());
            prop_assert!((q.spectral_radius().unwrap() - r.lambda1).abs() <= 1e-9);
            prop_assert!(spectrum_contained(&q.eigenvalues().unwrap(), &spectrum, 1e-8));
            for part in pi.parts() {
                let x0 = r.perron_vector[part[0]];
                prop_assert!(part.iter().all(|&v| (r.perron_vector[v] - x0).abs() <= 1e-8));
            }
        }
    }

    #[test]
    fn families_validate_and_classify(m in 3..=5usize, a in 0..4usize, b in 0..4usize, l in 3..7usize) {
        let cases: Vec<(Hypergraph, Cyclicity)> = vec![
            (fam::loose_path(m, l).unwrap(), Cyclicity::Supertree),
            (fam::hypertree_td(m, l, &AttachmentSpec::from_pairs(&[(2, a), (l, b)])).unwrap(), Cyclicity::Supertree),
            (fam::loose_cycle(m, l).unwrap(), Cyclicity::Unicyclic),
            (fam::unicyclic_uc(m, l, &AttachmentSpec::from_pairs(&[(1, a), (2, b)])).unwrap(), Cyclicity::Unicyclic),
            (fam::unicyclic_ulc(m, l, a + 1).unwrap(), Cyclicity::Unicyclic),
            (fam::bicyclic_b2c(m, a, b).unwrap(), Cyclicity::Bicyclic),
            (fam::tricyclic_t1c(m, [a, b, a, b]).unwrap(), Cyclicity::TricyclicTypeI),
            (fam::tricyclic_t2c(m, [a, b, 0, a, 0, b, 0]).unwrap(), Cyclicity::TricyclicTypeII),
        ];
        for (h, want) in cases {
            prop_assert!(h.validate().is_valid());
            let r = classify_cyclicity(&h).unwrap();
            prop_assert_eq!(r.classification, want);
            prop_assert!(r.identity_consistent);
        }
    }

    #[test]
    fn bounds_increase_with_k(m in 3..=5usize, k in 12..40usize, d in 3..6usize) {
        let pairs = [
            (cf::hypertree_diameter_bound(m, k, d), cf::hypertree_diameter_bound(m, k + 1, d)),
            (cf::even_diameter_bound(m, k, 4), cf::even_diameter_bound(m, k + 1, 4)),
            (cf::unicyclic_bounds(m, k, d), cf::unicyclic_bounds(m, k + 1, d)),
            (cf::unicyclic_second_bound(m, k, d), cf::unicyclic_second_bound(m, k + 1, d)),
            (cf::t1c_bound(m, k), cf::t1c_bound(m, k + 1)),
            (cf::bc_scaled_bounds(m, k), cf::bc_scaled_bounds(m, k + 1)),
            (cf::t2c_scaled_bound(m, k), cf::t2c_scaled_bound(m, k + 1)),
            (cf::uc3_scaled_bounds(m, k), cf::uc3_scaled_bounds(m, k + 1)),
        ];
        for (a, b) in pairs {
            prop_assert!(a.upper.unwrap() < b.upper.unwrap());
            if let (Some(x), Some(y)) = (a.lower, b.lower) {
                prop_assert!(x < y);
            }
        }
        prop_assert!(cf::hyperstar_radius(m, k) < cf::hyperstar_radius(m, k + 1));
    }
}

#[test]
fn power_of_two_is_the_graph_itself() {
    let g = SimpleGraph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)]).unwrap();
    let h = power_hypergraph(&g, 2).unwrap();
    let edges: Vec<Vec<usize>> = g
        .edges()
        .iter()
        .map(|&(a, b)| vec![a.min(b), a.max(b)])
        .collect();
    assert_eq!(h.edges(), edges.as_slice());
}
