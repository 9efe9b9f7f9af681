use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::hnf::hermite;
use super::{DivisorTuple, IntMat};

/// Smith normal form `U·M·V = D` with unimodular `U`, `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
    /// Diagonal of `d`: ones, then the nontrivial chain, then zeros.
    pub divisors: DivisorTuple,
}

struct Transforms<'a> {
    u: Option<&'a mut IntMat>,
    v: Option<&'a mut IntMat>,
}

impl Transforms<'_> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if let Some(u) = self.u.as_deref_mut() {
            u.swap_rows(a, b);
        }
    }
    fn swap_cols(&mut self, a: usize, b: usize) {
        if let Some(v) = self.v.as_deref_mut() {
            v.swap_cols(a, b);
        }
    }
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        if let Some(u) = self.u.as_deref_mut() {
            u.row_axpy(dst, src, q);
        }
    }
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        if let Some(v) = self.v.as_deref_mut() {
            v.col_axpy(dst, src, q);
        }
    }
    fn negate_row(&mut self, i: usize) {
        if let Some(u) = self.u.as_deref_mut() {
            u.negate_row(i);
        }
    }
}

fn min_abs_nonzero(a: &IntMat, cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for (i, j) in cells {
        let x = a.get(i, j);
        if x.is_zero() {
            continue;
        }
        let ax = x.abs();
        if best.as_ref().is_none_or(|(_, b)| ax < *b) {
            best = Some(((i, j), ax));
        }
    }
    best.map(|(p, _)| p)
}

/// Diagonalizes `a` in place; returns the diagonal.
fn smith(a: &mut IntMat, mut t: Transforms<'_>) -> Vec<BigInt> {
    let (m, n) = (a.rows(), a.cols());
    let k = m.min(n);
    for s in 0..k {
        let Some((pi, pj)) = min_abs_nonzero(a, (s..m).flat_map(|i| (s..n).map(move |j| (i, j))))
        else {
            break;
        };
        a.swap_rows(s, pi);
        t.swap_rows(s, pi);
        a.swap_cols(s, pj);
        t.swap_cols(s, pj);
        loop {
            let mut dirty = false;
            for i in s + 1..m {
                if a.get(i, s).is_zero() {
                    continue;
                }
                let q = a.get(i, s) / a.get(s, s);
                a.row_axpy(i, s, &q);
                t.row_axpy(i, s, &q);
                dirty |= !a.get(i, s).is_zero();
            }
            for j in s + 1..n {
                if a.get(s, j).is_zero() {
                    continue;
                }
                let q = a.get(s, j) / a.get(s, s);
                a.col_axpy(j, s, &q);
                t.col_axpy(j, s, &q);
                dirty |= !a.get(s, j).is_zero();
            }
            if dirty {
                let line = (s..m).map(|i| (i, s)).chain((s + 1..n).map(|j| (s, j)));
                let (pi, pj) = min_abs_nonzero(a, line).expect("remainder is nonzero");
                a.swap_rows(s, pi);
                t.swap_rows(s, pi);
                a.swap_cols(s, pj);
                t.swap_cols(s, pj);
                continue;
            }
            let pivot = a.get(s, s).clone();
            let bad = (s + 1..m).find(|&i| (s + 1..n).any(|j| !(a.get(i, j) % &pivot).is_zero()));
            match bad {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    a.row_axpy(s, i, &minus_one);
                    t.row_axpy(s, i, &minus_one);
                }
                None => break,
            }
        }
        if a.get(s, s).is_negative() {
            a.negate_row(s);
            t.negate_row(s);
        }
    }
    (0..k).map(|i| a.get(i, i).clone()).collect()
}

/// Smith normal form with both unimodular witnesses.
pub fn snf(m: &IntMat) -> SnfDecomposition {
    let mut d = m.clone();
    let mut u = IntMat::identity(m.rows());
    let mut v = IntMat::identity(m.cols());
    let diag = smith(
        &mut d,
        Transforms {
            u: Some(&mut u),
            v: Some(&mut v),
        },
    );
    SnfDecomposition {
        u,
        d,
        v,
        divisors: DivisorTuple::new(diag),
    }
}

/// Elementary divisors without transforms.
///
/// The row lattice is first reduced to an echelon basis, which is much
/// smaller than tall inputs such as RA matrices; zero divisors are then
/// padded back to length `min(rows, cols)`.
pub fn elementary_divisors(m: &IntMat) -> DivisorTuple {
    let k = m.rows().min(m.cols());
    let (h, pivots) = hermite(m.clone(), None);
    let idx: Vec<usize> = (0..pivots.len()).collect();
    let mut basis = h.select_rows(&idx);
    let mut diag = smith(&mut basis, Transforms { u: None, v: None });
    diag.resize(k, BigInt::zero());
    DivisorTuple::new(diag)
}
