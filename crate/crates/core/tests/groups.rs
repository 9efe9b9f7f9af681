use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use glo_core::{FiniteGroup, Perm, PermGroup};

fn factorial(m: u64) -> u64 {
    (1..=m).product()
}

fn closure(degree: usize, gens: &[Perm]) -> BTreeSet<Perm> {
    let mut seen = BTreeSet::from([Perm::identity(degree)]);
    let mut queue = VecDeque::from([Perm::identity(degree)]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

fn random_perm(rng: &mut StdRng, n: usize) -> Perm {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Perm::from_images(v).unwrap()
}

#[test]
fn builtin_orders_match_closed_forms() {
    let cases: Vec<(String, u64)> = (1..=9)
        .map(|n| (format!("C{n}"), n))
        .chain((1..=8).map(|n| (format!("D{}", 2 * n), 2 * n)))
        .chain((1..=6).map(|m| (format!("S{m}"), factorial(m))))
        .chain((3..=6).map(|m| (format!("A{m}"), factorial(m) / 2)))
        .chain([2u64, 3, 5].map(|p| (format!("H{p}"), p * p * p)))
        .chain([("D8xC3".to_string(), 24), ("S3xS3xC2".to_string(), 72)])
        .collect();
    for (spec, want) in cases {
        let g = FiniteGroup::parse(&spec).unwrap();
        assert_eq!(g.order(), BigUint::from(want), "{spec}");
        let brute = closure(g.degree(), g.generators()).len() as u64;
        assert_eq!(brute, want, "{spec} closure");
    }
}

#[test]
fn derived_subgroup_is_normal_and_abelianization_fits() {
    for spec in ["D8", "D10", "S3", "S4", "A4", "A5", "H2", "H3", "D8xC3"] {
        let g = FiniteGroup::parse(spec).unwrap();
        let d = g.derived_subgroup();
        assert!(d.is_normalized_by(g.generators()), "{spec}");
        for h in d.generators() {
            for x in g.generators() {
                assert!(d.contains(&h.conjugate_by(x)), "{spec}");
            }
        }
        // Brute-force commutator closure.
        let elems: Vec<Perm> = g.elements(200).unwrap();
        let comms: Vec<Perm> = elems
            .iter()
            .flat_map(|a| elems.iter().map(move |b| a.commutator(b)))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let brute = closure(g.degree(), &comms).len();
        assert_eq!(d.order(), BigUint::from(brute), "{spec}");
        let ab: u64 = g.abelianization().factors().iter().product();
        assert_eq!(BigUint::from(ab) * d.order(), g.order(), "{spec}");
    }
}

#[test]
fn heisenberg_exponents() {
    for (p, want) in [(2u64, 4u64), (3, 3), (5, 5)] {
        let g = FiniteGroup::parse(&format!("H{p}")).unwrap();
        let exp = g
            .elements(1000)
            .unwrap()
            .iter()
            .map(|x| x.order())
            .fold(1u64, num_integer::lcm);
        assert_eq!(exp, want, "H{p}");
    }
}

#[test]
fn membership_matches_closure() {
    let mut rng = StdRng::seed_from_u64(21);
    let mut tested = 0;
    while tested < 60 {
        let n = rng.gen_range(3..=7);
        let k = rng.gen_range(1..=2);
        let gens: Vec<Perm> = (0..k).map(|_| random_perm(&mut rng, n)).collect();
        let g = PermGroup::new(n, &gens).unwrap();
        if g.order() > BigUint::from(10_000u32) {
            continue;
        }
        let brute = closure(n, &gens);
        assert_eq!(g.order(), BigUint::from(brute.len()));
        for _ in 0..50 {
            let x = random_perm(&mut rng, n);
            assert_eq!(g.contains(&x), brute.contains(&x));
        }
        for x in brute.iter().take(20) {
            assert!(g.contains(x));
        }
        tested += 1;
    }
}
