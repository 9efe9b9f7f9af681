//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use glo_core::Graph;

/// Labeled connected graphs on `n` vertices from the total count
/// `2^C(n,2)` by removing graphs whose vertex 0 lies in a smaller component.
pub fn labeled_connected_counts(max_n: usize) -> Vec<u128> {
    let binom = |n: usize, k: usize| -> u128 {
        let mut r: u128 = 1;
        for i in 0..k {
            r = r * (n - i) as u128 / (i + 1) as u128;
        }
        r
    };
    let total = |n: usize| -> u128 { 1u128 << (n * n.saturating_sub(1) / 2) };
    let mut c = vec![0u128; max_n + 1];
    for n in 1..=max_n {
        let mut s = total(n);
        for k in 1..n {
            s -= binom(n - 1, k - 1) * c[k] * total(n - k);
        }
        c[n] = s;
    }
    c
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Adjacency bitmask rows.
pub fn adjacency_rows(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|u| (0..g.order()).filter(|&v| g.is_adjacent(u, v)).fold(0, |m, v| m | 1 << v))
        .collect()
}

/// Number of automorphisms by checking every permutation.
pub fn automorphism_count(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let edges = g.edges();
    perms
        .iter()
        .filter(|p| edges.iter().all(|&(a, b)| g.is_adjacent(p[a], p[b])))
        .count() as u64
}

/// Brute-force canonical code: the largest upper-triangle bit string over
/// all relabelings.
pub fn brute_canonical(rows: &[u32], perms: &[Vec<usize>]) -> u64 {
    let n = rows.len();
    perms
        .iter()
        .map(|p| {
            let mut code = 0u64;
            for i in 0..n {
                for j in i + 1..n {
                    code = (code << 1) | u64::from(rows[p[i]] >> p[j] & 1 == 1);
                }
            }
            code
        })
        .max()
        .unwrap()
}

/// Solves `x·A = t` over GF(2) by Gaussian elimination on bitsets.
/// `a[i]` is row `i` of `A` as a bitmask over columns.
pub fn gf2_solve(a: &[u128], t: u128, n: usize) -> Option<u128> {
    // Work with the transposed system: columns of the augmented matrix.
    let m = a.len();
    // equation j: sum_i x_i a[i]_j = t_j
    let mut eqs: Vec<(u128, bool)> = (0..n)
        .map(|j| {
            let lhs = (0..m).filter(|&i| a[i] >> j & 1 == 1).fold(0u128, |s, i| s | 1 << i);
            (lhs, t >> j & 1 == 1)
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for var in 0..m {
        let Some(p) = (r..eqs.len()).find(|&k| eqs[k].0 >> var & 1 == 1) else {
            continue;
        };
        eqs.swap(r, p);
        let (pl, pr) = eqs[r];
        for k in 0..eqs.len() {
            if k != r && eqs[k].0 >> var & 1 == 1 {
                eqs[k].0 ^= pl;
                eqs[k].1 ^= pr;
            }
        }
        pivots.push(var);
        r += 1;
    }
    if eqs[r..].iter().any(|e| e.1) {
        return None;
    }
    let mut x = 0u128;
    for (k, &var) in pivots.iter().enumerate() {
        if eqs[k].1 {
            x |= 1 << var;
        }
    }
    Some(x)
}

/// Rank over GF(2) of bitmask rows.
pub fn gf2_rank(rows: &[u128]) -> usize {
    let mut basis: Vec<u128> = Vec::new();
    for &r in rows {
        let mut x = r;
        for &b in &basis {
            x = x.min(x ^ b);
        }
        if x != 0 {
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

pub fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Determinant by cofactor expansion.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// Elementary divisors from gcds of k×k minors: `a_k = D_k / D_{k−1}`.
pub fn divisors_by_minors(m: &[Vec<i128>]) -> Vec<i128> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut prev = 1i128;
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                g = gcd(g, det(&sub));
            }
        }
        if g == 0 || prev == 0 {
            out.push(0);
            prev = 0;
        } else {
            out.push(g / prev);
            prev = g;
        }
    }
    out
}
