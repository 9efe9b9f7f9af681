mod common;

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use glo_core::graph::{canonical_certificate, enumerate_connected_graphs, Family};
use glo_core::Graph;

fn random_graph(rng: &mut StdRng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn labeled_graph(n: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

#[test]
fn enumeration_is_complete_and_isomorph_free() {
    let labeled = common::labeled_connected_counts(6);
    for n in 1..=6 {
        let perms = common::permutations(n);
        let graphs = enumerate_connected_graphs(n).unwrap();
        let codes: BTreeSet<u64> = graphs
            .iter()
            .map(|g| common::brute_canonical(&common::adjacency_rows(g), &perms))
            .collect();
        assert_eq!(codes.len(), graphs.len(), "n={n}: isomorphic duplicates");
        assert!(graphs.iter().all(|g| g.is_connected() && g.order() == n));
        let orbit_sum: u128 = graphs
            .iter()
            .map(|g| perms.len() as u128 / common::automorphism_count(g, &perms) as u128)
            .sum();
        assert_eq!(orbit_sum, labeled[n], "n={n}");
    }
}

#[test]
fn every_labeled_connected_graph_is_represented() {
    for n in 1..=5 {
        let perms = common::permutations(n);
        let listed: BTreeSet<u64> = enumerate_connected_graphs(n)
            .unwrap()
            .iter()
            .map(|g| common::brute_canonical(&common::adjacency_rows(g), &perms))
            .collect();
        let pairs = n * (n - 1) / 2;
        let seen: BTreeSet<u64> = (0u32..1 << pairs)
            .map(|m| labeled_graph(n, m))
            .filter(|g| g.is_connected())
            .map(|g| common::brute_canonical(&common::adjacency_rows(&g), &perms))
            .collect();
        assert_eq!(listed, seen, "n={n}");
    }
}

#[test]
fn certificates_agree_with_brute_force() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let perms = common::permutations(n);
        let a = random_graph(&mut rng, n, 0.5);
        let b = if rng.gen_bool(0.5) {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            a.permuted(&p)
        } else {
            random_graph(&mut rng, n, 0.5)
        };
        let brute = common::brute_canonical(&common::adjacency_rows(&a), &perms)
            == common::brute_canonical(&common::adjacency_rows(&b), &perms);
        assert_eq!(canonical_certificate(&a) == canonical_certificate(&b), brute);
        assert_eq!(a.is_isomorphic(&b), brute);
    }
}

#[test]
fn graph6_round_trips() {
    let mut rng = StdRng::seed_from_u64(5);
    for n in [1, 2, 5, 13, 62, 63, 64, 100, 300] {
        let g = random_graph(&mut rng, n, 0.3);
        assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g, "n={n}");
    }
}

#[test]
fn neighborhood_and_reduction_laws() {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..200 {
        let n = rng.gen_range(1..=9);
        let density = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, density);
        for v in 0..n {
            assert!(g.closed_neighborhood(v).unwrap().contains(&v));
        }
        let r = g.reduce_indistinguishable();
        assert!(r.is_neighborhood_distinguishable());
        assert_eq!(r.reduce_indistinguishable(), r);
    }
}

#[test]
fn girth_five_has_no_square_completion() {
    let mut fixtures: Vec<Graph> = (5..=9).map(|n| Family::Cycle(n).build().unwrap()).collect();
    fixtures.push(Family::Petersen.build().unwrap());
    fixtures.extend((3..=8).map(|n| Family::Path(n).build().unwrap()));
    for g in &fixtures {
        assert!(g.classify().girth.at_least(5));
        assert!(!g.classify().square_completion);
    }
    let q3 = Family::Hypercube(3).build().unwrap().classify();
    assert!(q3.square_completion);
}
