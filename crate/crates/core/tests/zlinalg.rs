mod common;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use glo_core::zlinalg::{
    elementary_divisors, hnf, rank_mod_p, row_sum_divisibility_certificate, snf, solve_row_combination,
    spans_full_lattice,
};
use glo_core::IntMat;

fn mat(rows: &[Vec<i64>]) -> IntMat {
    let cols = rows.first().map_or(0, |r| r.len());
    IntMat::from_rows(cols, rows).unwrap()
}

fn as_i128(rows: &[Vec<i64>]) -> Vec<Vec<i128>> {
    rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect()
}

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-5i64..=5, cols), rows)
}

fn divisor_values(m: &IntMat) -> Vec<BigInt> {
    elementary_divisors(m).values().to_vec()
}

fn primes_of(x: &BigInt) -> Vec<u64> {
    let mut v = x.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while BigInt::from(p * p) <= v {
        let pb = BigInt::from(p);
        if (&v % &pb).is_zero() {
            out.push(p);
            while (&v % &pb).is_zero() {
                v /= &pb;
            }
        }
        p += 1;
    }
    if v > BigInt::one() {
        out.push(u64::try_from(v).unwrap());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_matches_minor_gcds(rows in small_matrix(4, 4)) {
        let want = common::divisors_by_minors(&as_i128(&rows));
        let got: Vec<i128> = divisor_values(&mat(&rows))
            .iter()
            .map(|d| i128::try_from(d.clone()).unwrap())
            .collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn snf_decomposition_is_exact(rows in small_matrix(4, 5)) {
        let m = mat(&rows);
        let s = snf(&m);
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
        prop_assert!(s.u.determinant().unwrap().abs().is_one());
        prop_assert!(s.v.determinant().unwrap().abs().is_one());
        let d = s.divisors.values();
        for w in d.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
        }
    }

    #[test]
    fn hnf_is_exact_and_spans_same_lattice(rows in small_matrix(5, 4)) {
        let m = mat(&rows);
        let d = hnf(&m, false);
        prop_assert_eq!(d.u.mul(&m).unwrap(), d.h.clone());
        prop_assert!(d.u.determinant().unwrap().abs().is_one());
        let mut last = None;
        for (r, &c) in d.pivots.iter().enumerate() {
            prop_assert!(last.is_none_or(|l| c > l));
            last = Some(c);
            let piv = d.h.get(r, c).clone();
            prop_assert!(piv.is_positive());
            for j in 0..c {
                prop_assert!(d.h.get(r, j).is_zero());
            }
            for above in 0..r {
                let x = d.h.get(above, c);
                prop_assert!(!x.is_negative() && x < &piv);
            }
        }
        for r in d.pivots.len()..d.h.rows() {
            prop_assert!(d.h.row(r).iter().all(|x| x.is_zero()));
        }
        for i in 0..m.rows() {
            prop_assert!(solve_row_combination(&d.h, m.row(i)).unwrap().is_some());
        }
        for i in 0..d.h.rows() {
            prop_assert!(solve_row_combination(&m, d.h.row(i)).unwrap().is_some());
        }
    }

    #[test]
    fn rank_mod_p_counts_units_mod_p(rows in small_matrix(4, 4), pi in 0usize..4) {
        let p = [2u64, 3, 5, 7][pi];
        let m = mat(&rows);
        let pb = BigInt::from(p);
        let want = divisor_values(&m)
            .iter()
            .filter(|d| !d.is_zero() && !(*d % &pb).is_zero())
            .count();
        prop_assert_eq!(rank_mod_p(&m, p).unwrap(), want);
    }

    #[test]
    fn full_lattice_iff_full_rank_at_divisor_primes(rows in small_matrix(5, 4)) {
        let m = mat(&rows);
        let d = divisor_values(&m);
        let mut primes: Vec<u64> = d.iter().filter(|x| !x.is_zero()).flat_map(primes_of).collect();
        primes.sort_unstable();
        primes.dedup();
        let by_rank = d.len() == 4
            && d.iter().all(|x| !x.is_zero())
            && primes.iter().all(|&p| rank_mod_p(&m, p).unwrap() == 4);
        prop_assert_eq!(spans_full_lattice(&m), by_rank);
    }
}

#[test]
fn engineered_row_sums_force_a_divisor() {
    let mut rng = StdRng::seed_from_u64(11);
    for trial in 0..200 {
        let p = [2u64, 3, 5, 7][trial % 4];
        let cols = rng.gen_range(2..=5);
        let rows = rng.gen_range(cols..=cols + 2);
        let data: Vec<Vec<i64>> = (0..rows)
            .map(|_| {
                let mut r: Vec<i64> = (0..cols - 1).map(|_| rng.gen_range(-6..=6)).collect();
                let s: i64 = r.iter().sum();
                let k = rng.gen_range(-2..=2);
                r.push(k * p as i64 - s);
                r
            })
            .collect();
        let m = mat(&data);
        assert!(row_sum_divisibility_certificate(&m, p).unwrap());
        let pb = BigInt::from(p);
        let d = divisor_values(&m);
        assert!(
            d.iter().any(|x| (x % &pb).is_zero()),
            "{data:?}: divisors {d:?} avoid {p}"
        );
    }
}
