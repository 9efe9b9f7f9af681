use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::hnf::hnf;
use super::hnf::hermite;
use super::modp::require_prime;
use super::IntMat;
use crate::error::{Error, Result};

/// True iff the rows of `m` generate all of `Z^cols`.
pub fn spans_full_lattice(m: &IntMat) -> bool {
    let n = m.cols();
    let (h, pivots) = hermite(m.clone(), None);
    pivots.len() == n && (0..n).all(|i| h.get(i, i).is_one())
}

/// True iff every row sum of `m` is divisible by `p`.
pub fn row_sum_divisibility_certificate(m: &IntMat, p: u64) -> Result<bool> {
    require_prime(p)?;
    let p = BigInt::from(p);
    Ok((0..m.rows()).all(|i| {
        let s: BigInt = m.row(i).iter().sum();
        s.is_multiple_of(&p)
    }))
}

/// Outcome of a lattice membership solve: coefficients, or the first column
/// where back-substitution failed.
pub(crate) type Solve = std::result::Result<Vec<BigInt>, usize>;

/// Finds `c` with `c·m = t` using the Hermite form `H = U·m`.
pub(crate) fn solve_with_witness(m: &IntMat, t: &[BigInt]) -> Result<Solve> {
    if t.len() != m.cols() {
        return Err(Error::DimensionMismatch(format!(
            "target has length {}, matrix has {} columns",
            t.len(),
            m.cols()
        )));
    }
    let d = hnf(m, false);
    let mut residual = t.to_vec();
    let mut y = vec![BigInt::zero(); m.rows()];
    for (r, &c) in d.pivots.iter().enumerate() {
        // Columns before this pivot are already cleared or non-pivot.
        if let Some(j) = (0..c).find(|&j| !residual[j].is_zero()) {
            return Ok(Err(j));
        }
        let (q, rem) = residual[c].div_rem(d.h.get(r, c));
        if !rem.is_zero() {
            return Ok(Err(c));
        }
        for (x, h) in residual.iter_mut().zip(d.h.row(r)) {
            *x -= &q * h;
        }
        y[r] = q;
    }
    if let Some(j) = residual.iter().position(|x| !x.is_zero()) {
        return Ok(Err(j));
    }
    let c = d.u.left_apply(&y)?;
    debug_assert_eq!(m.left_apply(&c)?, t);
    Ok(Ok(c))
}

/// Integer row combination `c` with `c·m = t`, or `None` when `t` is outside
/// the row lattice.
pub fn solve_row_combination(m: &IntMat, t: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    Ok(solve_with_witness(m, t)?.ok())
}
