//! Explicit click vectors for abelian Lights Out.
//!
//! Each cyclic factor `Z/r` is solved on its own: `c·A_Γ ≡ t (mod r)` is a
//! lattice membership question for the stacked matrix `[A_Γ; r·I]`, decided
//! by Hermite back-substitution. Over `Z` the matrix is `A_Γ` itself.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ra::activation_matrix;
use crate::zlinalg::lattice::solve_with_witness;
use crate::zlinalg::{hnf, snf, IntMat};

/// The state group: `Z`, or `⊕ Z/r_α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Moduli {
    Integers,
    Cyclic(Vec<u64>),
}

impl Moduli {
    pub fn factor_count(&self) -> usize {
        match self {
            Moduli::Integers => 1,
            Moduli::Cyclic(r) => r.len(),
        }
    }

    fn modulus(&self, alpha: usize) -> Option<u64> {
        match self {
            Moduli::Integers => None,
            Moduli::Cyclic(r) => Some(r[alpha]),
        }
    }
}

/// Per-vertex exponent vectors, one entry per factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianState {
    pub exponents: Vec<Vec<i64>>,
}

impl AbelianState {
    pub fn new(exponents: Vec<Vec<i64>>) -> Self {
        AbelianState { exponents }
    }

    /// A single-factor state.
    pub fn single(values: &[i64]) -> Self {
        AbelianState {
            exponents: values.iter().map(|&v| vec![v]).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    fn column(&self, alpha: usize) -> Vec<i64> {
        self.exponents.iter().map(|e| e[alpha]).collect()
    }
}

/// A linear functional `w` with `w·row ≡ 0 (mod q)` for every row of `A_Γ`
/// but `w·t ≢ 0 (mod q)`; `q = 0` means an exact (rational) obstruction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub functional: Vec<i64>,
    pub modulus: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SolveOutcome {
    /// `clicks[alpha][v]`: how often vertex `v` is clicked with the
    /// generator of factor `alpha`.
    Solved { clicks: Vec<Vec<i64>> },
    Unsolvable {
        factor: usize,
        /// First obstructed pivot column, i.e. a vertex.
        vertex: usize,
        obstruction: Option<Obstruction>,
    },
}

impl SolveOutcome {
    pub fn is_solved(&self) -> bool {
        matches!(self, SolveOutcome::Solved { .. })
    }
}

fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Internal(format!("click count {x} does not fit in 64 bits")))
}

/// Over `Z`, a functional from the Smith form certifying that `t` is outside
/// the row lattice.
fn integer_obstruction(a: &IntMat, t: &[BigInt]) -> Option<Obstruction> {
    let s = snf(a);
    let tv = s.v.left_apply(t).ok()?;
    // (t·V)_i must be divisible by d_i (and vanish where d_i = 0).
    let n = a.cols();
    for i in 0..n {
        let d = s.divisors.values().get(i).cloned().unwrap_or_else(BigInt::zero);
        let x = &tv[i];
        let bad = if d.is_zero() { !x.is_zero() } else { !x.is_multiple_of(&d) };
        if bad {
            let col: Vec<BigInt> = (0..n).map(|j| s.v.get(j, i).clone()).collect();
            let functional = if d.is_zero() {
                col.iter().map(to_i64).collect::<Result<Vec<_>>>().ok()?
            } else {
                col.iter().map(|c| c.mod_floor(&d).to_i64()).collect::<Option<Vec<_>>>()?
            };
            return Some(Obstruction {
                functional,
                modulus: d.to_u64()?,
            });
        }
    }
    None
}

/// Finds clicks reaching `target` from the all-identity state, factor by factor.
pub fn solve(gamma: &Graph, moduli: &Moduli, target: &AbelianState) -> Result<SolveOutcome> {
    let n = gamma.order();
    if target.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "target has {} vertices, graph has {n}",
            target.len()
        )));
    }
    let k = moduli.factor_count();
    if let Some(bad) = target.exponents.iter().find(|e| e.len() != k) {
        return Err(Error::DimensionMismatch(format!(
            "vertex state {bad:?} has {} entries, expected {k}",
            bad.len()
        )));
    }
    if let Moduli::Cyclic(rs) = moduli {
        if let Some(r) = rs.iter().find(|&&r| r < 2) {
            return Err(Error::InvalidParameter(format!("modulus {r} must be at least 2")));
        }
    }
    let a = activation_matrix(gamma);
    let mut clicks = Vec::with_capacity(k);
    for alpha in 0..k {
        let t: Vec<BigInt> = target.column(alpha).into_iter().map(BigInt::from).collect();
        match moduli.modulus(alpha) {
            None => match solve_with_witness(&a, &t)? {
                Ok(c) => clicks.push(c.iter().map(to_i64).collect::<Result<Vec<_>>>()?),
                Err(vertex) => {
                    return Ok(SolveOutcome::Unsolvable {
                        factor: alpha,
                        vertex,
                        obstruction: integer_obstruction(&a, &t),
                    })
                }
            },
            Some(r) => {
                let rb = BigInt::from(r);
                let t: Vec<BigInt> = t.iter().map(|x| x.mod_floor(&rb)).collect();
                let mut ri = IntMat::identity(n);
                for i in 0..n {
                    ri.set(i, i, rb.clone());
                }
                let stacked = a.vstack(&ri)?;
                match solve_with_witness(&stacked, &t)? {
                    Ok(c) => clicks.push(
                        c[..n]
                            .iter()
                            .map(|x| to_i64(&x.mod_floor(&rb)))
                            .collect::<Result<Vec<_>>>()?,
                    ),
                    Err(vertex) => {
                        return Ok(SolveOutcome::Unsolvable {
                            factor: alpha,
                            vertex,
                            obstruction: None,
                        })
                    }
                }
            }
        }
    }
    Ok(SolveOutcome::Solved { clicks })
}

/// The state reached by `clicks` (exponents reduced mod each factor).
pub fn apply_clicks(gamma: &Graph, moduli: &Moduli, clicks: &[Vec<i64>]) -> AbelianState {
    let n = gamma.order();
    let mut ex = vec![vec![0i64; moduli.factor_count()]; n];
    for (alpha, c) in clicks.iter().enumerate() {
        for v in 0..n {
            for w in gamma.closed_row(v) {
                ex[w][alpha] += c[v];
            }
        }
        if let Some(r) = moduli.modulus(alpha) {
            for e in ex.iter_mut() {
                e[alpha] = e[alpha].rem_euclid(r as i64);
            }
        }
    }
    AbelianState { exponents: ex }
}

/// The nice Hermite form picture of `Z^Γ`: `r` freely settable coordinates,
/// constrained coordinates with their pivots, and `u` fixed coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReachabilityProfile {
    pub free_count: usize,
    /// `(vertex, pivot)` for each row of the `T` block.
    pub constrained: Vec<(usize, u64)>,
    pub fixed_count: usize,
    pub column_permutation: Vec<usize>,
}

impl ReachabilityProfile {
    pub fn pivots(&self) -> Vec<u64> {
        self.constrained.iter().map(|&(_, p)| p).collect()
    }
}

pub fn reachability_profile(gamma: &Graph) -> Result<ReachabilityProfile> {
    let d = hnf(&activation_matrix(gamma), true);
    let perm = d.column_permutation.clone().expect("nice form has a permutation");
    let r = d.identity_block();
    let constrained = (r..d.rank())
        .map(|i| {
            let p = d.h.get(i, i);
            p.to_u64()
                .map(|p| (perm[i], p))
                .ok_or_else(|| Error::Internal(format!("pivot {p} does not fit in 64 bits")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ReachabilityProfile {
        free_count: r,
        constrained,
        fixed_count: gamma.order() - d.rank(),
        column_permutation: perm,
    })
}

/// Whether a parity pattern (for instance the signs of the scrambles of one
/// Rubik's cube per vertex) can be cleared.
///
/// The reduction from the nonabelian puzzle to this mod-2 Lights Out
/// instance is faithful when `Γ` is RA; that is the caller's
/// responsibility and is not checked here.
pub fn solvable_iff_lights_out(gamma: &Graph, parity_state: &[u8]) -> Result<bool> {
    let t: Vec<i64> = parity_state.iter().map(|&b| i64::from(b & 1)).collect();
    Ok(solve(gamma, &Moduli::Cyclic(vec![2]), &AbelianState::single(&t))?.is_solved())
}
