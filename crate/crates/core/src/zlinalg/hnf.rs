use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMat;

/// Row Hermite normal form `H = U·M`.
///
/// `H` is in row echelon form with positive pivots moving strictly right,
/// zeros below each pivot and entries above a pivot reduced into
/// `[0, pivot)`. When the nice form is requested, `column_permutation` lists
/// the original column placed at each position of `H` and the rows are
/// reordered so that `H` has the block shape `[[I_r, *, *], [0, T, *], [0, 0, 0]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnfDecomposition {
    pub u: IntMat,
    pub h: IntMat,
    /// Pivot column of each nonzero row of `h` (in `h`'s column order).
    pub pivots: Vec<usize>,
    pub column_permutation: Option<Vec<usize>>,
}

impl HnfDecomposition {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Size `r` of the leading identity block (pivots equal to 1).
    pub fn identity_block(&self) -> usize {
        self.pivots
            .iter()
            .enumerate()
            .take_while(|(i, &c)| self.h.get(*i, c) == &BigInt::from(1))
            .count()
    }
}

/// Echelon reduction shared by [`hnf`] and the divisor routines.
pub(crate) fn hermite(mut a: IntMat, mut u: Option<&mut IntMat>) -> (IntMat, Vec<usize>) {
    let (m, n) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..n {
        if r == m {
            break;
        }
        loop {
            let pick = (r..m)
                .filter(|&i| !a.get(i, j).is_zero())
                .min_by(|&x, &y| a.get(x, j).abs().cmp(&a.get(y, j).abs()));
            let Some(p) = pick else { break };
            a.swap_rows(r, p);
            if let Some(u) = u.as_deref_mut() {
                u.swap_rows(r, p);
            }
            let mut clean = true;
            for i in r + 1..m {
                if a.get(i, j).is_zero() {
                    continue;
                }
                let q = a.get(i, j) / a.get(r, j);
                a.row_axpy(i, r, &q);
                if let Some(u) = u.as_deref_mut() {
                    u.row_axpy(i, r, &q);
                }
                if !a.get(i, j).is_zero() {
                    clean = false;
                }
            }
            if clean {
                if a.get(r, j).is_negative() {
                    a.negate_row(r);
                    if let Some(u) = u.as_deref_mut() {
                        u.negate_row(r);
                    }
                }
                for i in 0..r {
                    let q = a.get(i, j).div_floor(a.get(r, j));
                    a.row_axpy(i, r, &q);
                    if let Some(u) = u.as_deref_mut() {
                        u.row_axpy(i, r, &q);
                    }
                }
                pivots.push(j);
                r += 1;
                break;
            }
        }
    }
    (a, pivots)
}

/// Row Hermite normal form with its unimodular witness.
pub fn hnf(m: &IntMat, nice: bool) -> HnfDecomposition {
    let mut u = IntMat::identity(m.rows());
    let (h, pivots) = hermite(m.clone(), Some(&mut u));
    if !nice {
        return HnfDecomposition {
            u,
            h,
            pivots,
            column_permutation: None,
        };
    }
    // Unit pivots sit in columns that are standard basis vectors of H, so
    // moving those rows and columns to the front keeps the other pivot rows
    // zero there and leaves their block upper triangular.
    let one = BigInt::from(1);
    let (unit, other): (Vec<usize>, Vec<usize>) =
        (0..pivots.len()).partition(|&i| h.get(i, pivots[i]) == &one);
    let mut row_order: Vec<usize> = unit.iter().chain(&other).copied().collect();
    row_order.extend(pivots.len()..m.rows());
    let mut col_order: Vec<usize> = row_order[..pivots.len()].iter().map(|&i| pivots[i]).collect();
    col_order.extend((0..m.cols()).filter(|c| !pivots.contains(c)));

    let h_rows = h.select_rows(&row_order);
    let mut h_nice = IntMat::zeros(h.rows(), h.cols());
    for i in 0..h.rows() {
        for (pos, &c) in col_order.iter().enumerate() {
            h_nice.set(i, pos, h_rows.get(i, c).clone());
        }
    }
    HnfDecomposition {
        u: u.select_rows(&row_order),
        h: h_nice,
        pivots: (0..pivots.len()).collect(),
        column_permutation: Some(col_order),
    }
}
