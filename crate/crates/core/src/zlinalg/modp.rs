use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::IntMat;
use crate::error::{Error, Result};

/// Deterministic primality by trial division.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = x % BigInt::from(p);
    let r = if r.sign() == num_bigint::Sign::Minus { r + p } else { r };
    r.to_u64().expect("residue fits")
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Rank of `m` over the field with `p` elements.
pub fn rank_mod_p(m: &IntMat, p: u64) -> Result<usize> {
    require_prime(p)?;
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|i| m.row(i).iter().map(|x| reduce(x, p)).collect())
        .collect();
    let mul = |x: u64, y: u64| (x as u128 * y as u128 % p as u128) as u64;
    let mut rank = 0;
    for j in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| a[i][j] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][j], p - 2, p);
        for x in a[rank].iter_mut() {
            *x = mul(*x, inv);
        }
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == rank || row[j] == 0 {
                continue;
            }
            let f = row[j];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + p - mul(f, y)) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_mod_p(&IntMat::identity(5), 7).unwrap(), 5);
        let c4 = IntMat::from_i64(&[&[1, 1, 0, 1], &[1, 1, 1, 0], &[0, 1, 1, 1], &[1, 0, 1, 1]]);
        assert_eq!(rank_mod_p(&c4, 3).unwrap(), 3);
        assert_eq!(rank_mod_p(&c4, 2).unwrap(), 4);
        let neg = IntMat::from_i64(&[&[-1, 2], &[1, -2]]);
        assert_eq!(rank_mod_p(&neg, 5).unwrap(), 1);
        assert_eq!(rank_mod_p(&c4, 4), Err(Error::NotPrime(4)));
        assert_eq!(rank_mod_p(&IntMat::zeros(0, 3), 2).unwrap(), 0);
    }
}
