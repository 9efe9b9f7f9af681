use num_bigint::BigInt;
use num_traits::Zero;

use glo_core::graph::{enumerate_connected_graphs, Family};
use glo_core::ra::{heisenberg_ra, is_ra, is_ra_full_snf, pqr_criterion, ra_matrix, structural_ra_hints};
use glo_core::zlinalg::elementary_divisors;
use glo_core::Graph;

fn census_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| enumerate_connected_graphs(n).unwrap())
        .filter(|g| g.is_neighborhood_distinguishable())
        .collect()
}

fn cube_fixtures() -> Vec<Graph> {
    [Family::Hypercube(3), Family::Hypercube(4), Family::Hypercube(5), Family::FoldedCube(5)]
        .into_iter()
        .map(|f| f.build().unwrap())
        .collect()
}

fn prime_factors(x: &BigInt) -> Vec<u64> {
    let mut v = u64::try_from(x.clone()).unwrap();
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= v {
        if v % p == 0 {
            out.push(p);
            while v % p == 0 {
                v /= p;
            }
        }
        p += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

#[test]
fn fast_and_full_paths_agree() {
    let mut graphs = census_graphs(7);
    graphs.extend(cube_fixtures());
    for g in &graphs {
        let fast = is_ra(g).unwrap();
        let full = is_ra_full_snf(g).unwrap();
        assert_eq!(fast.ra, full.ra, "{}", g.to_graph6());
    }
}

#[test]
fn ra_divisor_primes_divide_the_largest_activation_divisor() {
    for g in census_graphs(7) {
        let a = elementary_divisors(&glo_core::ra::activation_matrix(&g));
        let Some(top) = a.largest() else { continue };
        if a.is_trivial() || top.is_zero() {
            continue;
        }
        let c = elementary_divisors(&ra_matrix(&g));
        for d in c.values().iter().filter(|d| !d.is_zero()) {
            for p in prime_factors(d) {
                assert!((top % BigInt::from(p)).is_zero(), "{}: {p} vs {top}", g.to_graph6());
            }
        }
    }
}

#[test]
fn heisenberg_failure_iff_not_ra() {
    let mut graphs = census_graphs(6);
    graphs.extend(cube_fixtures());
    for g in &graphs {
        let v = is_ra(g).unwrap();
        let mut primes: Vec<u64> = vec![2, 3, 5, 7];
        if let Some(p) = v.failing_prime {
            primes.push(p);
        }
        let any_fail = primes.iter().any(|&p| !heisenberg_ra(g, p).unwrap());
        if v.ra {
            assert!(!any_fail, "{}", g.to_graph6());
        } else if v.failing_prime.is_some() {
            assert!(any_fail, "{}", g.to_graph6());
        }
    }
}

#[test]
fn pqr_implies_heisenberg_failure() {
    let mut graphs = census_graphs(6);
    graphs.extend(cube_fixtures());
    for g in &graphs {
        for p in [2, 3, 5] {
            if pqr_criterion(g, p).unwrap() {
                assert!(!heisenberg_ra(g, p).unwrap(), "{} p={p}", g.to_graph6());
            }
        }
    }
}

#[test]
fn structural_hints_are_sound() {
    for g in census_graphs(7) {
        if !structural_ra_hints(&g).is_empty() {
            assert!(is_ra(&g).unwrap().ra, "{}", g.to_graph6());
        }
    }
}

#[test]
fn standing_assumption_is_enforced() {
    let k3 = Family::Complete(3).build().unwrap();
    assert!(is_ra(&k3).is_err());
    let split = Family::Path(3).build().unwrap().disjoint_union(&Family::Path(4).build().unwrap());
    assert!(is_ra(&split).is_err());
}
