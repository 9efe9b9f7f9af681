//! Activation and RA matrices, the RA verdict and the small-graph census.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{enumerate_connected_graphs, Family, Girth, Graph};
use crate::zlinalg::modp::require_prime;
use crate::zlinalg::{elementary_divisors, rank_mod_p, DivisorTuple, IntMat};

/// `A_Γ = Adj(Γ) + I`.
pub fn activation_matrix(gamma: &Graph) -> IntMat {
    let n = gamma.order();
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|v| gamma.closed_indicator(v).into_iter().map(i64::from).collect())
        .collect();
    IntMat::from_rows(n, &rows).expect("square")
}

/// `C_Γ`: one row `B(i) ∩ B(j)` per pair `i ≤ j`, in lexicographic order.
pub fn ra_matrix(gamma: &Graph) -> IntMat {
    let n = gamma.order();
    let b: Vec<Vec<bool>> = (0..n).map(|v| gamma.closed_indicator(v)).collect();
    let mut rows = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            rows.push((0..n).map(|k| i64::from(b[i][k] && b[j][k])).collect::<Vec<_>>());
        }
    }
    IntMat::from_rows(n, &rows).expect("rows of length n")
}

/// `C_Γ` without zero or repeated rows; same row lattice.
fn ra_matrix_dedup(gamma: &Graph) -> IntMat {
    let c = ra_matrix(gamma);
    let mut seen = BTreeSet::new();
    let keep: Vec<usize> = (0..c.rows())
        .filter(|&i| {
            let r = c.row_vec(i);
            r.iter().any(|x| !x.is_zero()) && seen.insert(r)
        })
        .collect();
    c.select_rows(&keep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RaMethod {
    /// Smith form of `C_Γ`.
    SnfFullLattice,
    /// Ranks of `C_Γ` modulo the primes dividing the largest divisor of `A_Γ`.
    PrimeRankScan,
    StructuralGirth5,
    StructuralGirth4,
    /// Verdict carried over from a census row.
    CensusCache,
}

/// Outcome of [`is_ra`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RaVerdict {
    /// graph6 of the input.
    pub graph: String,
    pub n: usize,
    pub ra: bool,
    pub method: RaMethod,
    /// Primes `p` for which `rank_p(C_Γ)` was computed.
    pub checked_primes: Vec<u64>,
    /// A prime with `rank_p(C_Γ) < n`, when the verdict is negative and the
    /// defect is torsion.
    pub failing_prime: Option<u64>,
    pub activation_divisors: DivisorTuple,
    /// Divisors of `C_Γ`, present when its Smith form was computed.
    pub ra_divisors: Option<DivisorTuple>,
}

/// Prime factors by trial division up to `limit`; `None` if a cofactor
/// above the limit remains unfactored.
fn prime_factors(d: &BigInt, limit: u64) -> Option<Vec<u64>> {
    let mut x = d.clone();
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= limit {
        let pb = BigInt::from(p);
        if (&pb * &pb) > x {
            break;
        }
        if x.is_multiple_of(&pb) {
            out.push(p);
            while x.is_multiple_of(&pb) {
                x /= &pb;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if x.is_one() {
        return Some(out);
    }
    let pb = BigInt::from(p);
    if &pb * &pb > x {
        out.push(x.to_u64()?);
        Some(out)
    } else {
        None
    }
}

const FACTOR_LIMIT: u64 = 1_000_000;

/// Requires the standing assumption: connected and neighborhood-distinguishable.
fn check_standing(gamma: &Graph) -> Result<()> {
    if !gamma.is_connected() {
        return Err(Error::PreconditionViolated("graph is not connected".into()));
    }
    if !gamma.is_neighborhood_distinguishable() {
        return Err(Error::PreconditionViolated(
            "graph has vertices with equal closed neighborhoods".into(),
        ));
    }
    Ok(())
}

/// RA iff `C_Γ` spans `Z^n`.
///
/// Every prime dividing a divisor of `C_Γ` divides the largest divisor `d`
/// of `A_Γ`, so when `d ≠ 0` it suffices to check `rank_p(C_Γ) = n` for
/// the primes `p | d`. Otherwise, or if some prime fails, the Smith form of
/// `C_Γ` decides.
pub fn is_ra(gamma: &Graph) -> Result<RaVerdict> {
    check_standing(gamma)?;
    let n = gamma.order();
    let a_div = elementary_divisors(&activation_matrix(gamma));
    let d = a_div.largest().cloned().unwrap_or_else(BigInt::one);
    let c = ra_matrix_dedup(gamma);
    let mut checked = Vec::new();
    if !d.is_zero() {
        if let Some(primes) = prime_factors(&d, FACTOR_LIMIT) {
            let mut all_full = true;
            for p in primes {
                checked.push(p);
                if rank_mod_p(&c, p)? < n {
                    all_full = false;
                    break;
                }
            }
            if all_full {
                return Ok(RaVerdict {
                    graph: gamma.to_graph6(),
                    n,
                    ra: true,
                    method: RaMethod::PrimeRankScan,
                    checked_primes: checked,
                    failing_prime: None,
                    activation_divisors: a_div,
                    ra_divisors: None,
                });
            }
        }
    }
    Ok(full_verdict(gamma, a_div, checked, &c))
}

fn full_verdict(gamma: &Graph, a_div: DivisorTuple, checked: Vec<u64>, c: &IntMat) -> RaVerdict {
    let n = gamma.order();
    let mut c_div = elementary_divisors(c).values().to_vec();
    c_div.resize(n, BigInt::zero());
    let c_div = DivisorTuple::new(c_div);
    let ra = c_div.is_trivial();
    let failing_prime = if ra {
        None
    } else {
        c_div
            .values()
            .iter()
            .find(|x| !x.is_one() && !x.is_zero())
            .and_then(|x| prime_factors(x, FACTOR_LIMIT))
            .and_then(|ps| ps.first().copied())
    };
    RaVerdict {
        graph: gamma.to_graph6(),
        n,
        ra,
        method: RaMethod::SnfFullLattice,
        checked_primes: checked,
        failing_prime,
        activation_divisors: a_div,
        ra_divisors: Some(c_div),
    }
}

/// The verdict from the Smith form of `C_Γ` alone, bypassing the prime scan.
pub fn is_ra_full_snf(gamma: &Graph) -> Result<RaVerdict> {
    check_standing(gamma)?;
    let a_div = elementary_divisors(&activation_matrix(gamma));
    Ok(full_verdict(gamma, a_div, Vec::new(), &ra_matrix_dedup(gamma)))
}

/// `rank_p(C_Γ) = |Γ|`: RA over the Heisenberg group mod `p`.
pub fn heisenberg_ra(gamma: &Graph, p: u64) -> Result<bool> {
    Ok(rank_mod_p(&ra_matrix_dedup(gamma), p)? == gamma.order())
}

/// Degrees `≡ −1`, adjacent pairs with `≡ −2` common neighbors and
/// distance-2 pairs with `≡ 0` common neighbors, all mod `p`.
pub fn pqr_criterion(gamma: &Graph, p: u64) -> Result<bool> {
    require_prime(p)?;
    let n = gamma.order();
    let p = p as usize;
    let is = |x: usize, target: usize| x % p == target % p;
    for u in 0..n {
        if !is(gamma.degree(u), p - 1) {
            return Ok(false);
        }
        let dist = gamma.distances_from(u);
        for v in u + 1..n {
            let common = gamma.common_neighbors(u, v);
            match dist[v] {
                Some(1) if !is(common, 2 * p - 2) => return Ok(false),
                Some(2) if !is(common, 0) => return Ok(false),
                _ => {}
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    Ra,
    StronglyRa,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HintKind {
    /// Girth at least 5 (forests included), at least 3 vertices.
    Girth5,
    /// Girth 4 with a vertex of degree 2.
    Girth4Degree2,
    /// Girth 4 without the square completion property.
    Girth4NoSquareCompletion,
    /// Girth 4 with a vertex of degree 1.
    Girth4Degree1,
    /// Complete bipartite.
    CompleteBipartite,
    /// Complete bipartite with coprime part sizes.
    CompleteBipartiteCoprime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralHint {
    pub kind: HintKind,
    pub conclusion: Conclusion,
}

impl StructuralHint {
    pub fn method(&self) -> RaMethod {
        match self.kind {
            HintKind::Girth5 => RaMethod::StructuralGirth5,
            _ => RaMethod::StructuralGirth4,
        }
    }
}

/// Part sizes `(m, n)` with `m ≤ n` if `gamma` is complete bipartite.
fn complete_bipartite_parts(gamma: &Graph) -> Option<(usize, usize)> {
    let n = gamma.order();
    if n < 2 || !gamma.is_connected() {
        return None;
    }
    let side_a: Vec<usize> = (0..n).filter(|&v| v == 0 || !gamma.is_adjacent(0, v)).collect();
    let in_a = |v: usize| side_a.contains(&v);
    for u in 0..n {
        for v in u + 1..n {
            if gamma.is_adjacent(u, v) == (in_a(u) == in_a(v)) {
                return None;
            }
        }
    }
    let m = side_a.len();
    Some((m.min(n - m), m.max(n - m)))
}

/// Sufficient conditions for RA / strongly RA that apply to `gamma`.
///
/// Only graphs under the standing assumption (connected, neighborhood
/// distinguishable) get hints.
pub fn structural_ra_hints(gamma: &Graph) -> Vec<StructuralHint> {
    let mut out = Vec::new();
    if check_standing(gamma).is_err() {
        return out;
    }
    let hint = |kind, conclusion| StructuralHint { kind, conclusion };
    let girth = gamma.girth();
    if girth.at_least(5) && gamma.order() >= 3 {
        out.push(hint(HintKind::Girth5, Conclusion::StronglyRa));
    }
    if girth == Girth::Finite(4) {
        let degrees: Vec<usize> = (0..gamma.order()).map(|v| gamma.degree(v)).collect();
        if degrees.contains(&2) {
            out.push(hint(HintKind::Girth4Degree2, Conclusion::Ra));
        }
        if !gamma.has_square_completion() {
            out.push(hint(HintKind::Girth4NoSquareCompletion, Conclusion::StronglyRa));
        }
        if degrees.contains(&1) {
            out.push(hint(HintKind::Girth4Degree1, Conclusion::StronglyRa));
        }
    }
    if let Some((m, n)) = complete_bipartite_parts(gamma) {
        out.push(hint(HintKind::CompleteBipartite, Conclusion::Ra));
        if m.gcd(&n) == 1 {
            out.push(hint(HintKind::CompleteBipartiteCoprime, Conclusion::StronglyRa));
        }
    }
    out
}

/// Closed-form elementary divisors of `A_Γ` for paths, cycles, complete
/// bipartite graphs and stars.
pub fn known_family_divisors(family: Family) -> Result<DivisorTuple> {
    let ones = |k: usize| vec![1u64; k];
    let v = match family {
        Family::Path(n) if n >= 1 => {
            if n % 3 == 2 {
                [ones(n - 1), vec![0]].concat()
            } else {
                ones(n)
            }
        }
        Family::Cycle(n) if n >= 3 => {
            if n % 3 == 0 {
                [ones(n - 2), vec![0, 0]].concat()
            } else {
                [ones(n - 1), vec![3]].concat()
            }
        }
        Family::CompleteBipartite(m, n) if m >= 1 && n >= 1 => {
            let last = (m * n) as u64 - 1;
            if last == 1 {
                ones(m + n)
            } else {
                [ones(m + n - 1), vec![last]].concat()
            }
        }
        Family::Star(n) if n >= 1 => return known_family_divisors(Family::CompleteBipartite(1, n)),
        Family::Path(_) | Family::Cycle(_) | Family::CompleteBipartite(..) | Family::Star(_) => {
            return Err(Error::InvalidParameter(format!("{family:?} has no vertices")))
        }
        other => return Err(Error::UnsupportedFamily(format!("{other:?}"))),
    };
    Ok(DivisorTuple::from_u64(&v))
}

/// One census row per connected, neighborhood-distinguishable graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub graph6: String,
    pub divisors: DivisorTuple,
    pub ra: bool,
    pub method: RaMethod,
    pub witness: String,
}

/// Per-order counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusCounts {
    pub n: usize,
    pub connected: usize,
    pub distinguishable: usize,
    pub full_lattice: usize,
    pub ra: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Census {
    pub counts: Vec<CensusCounts>,
    pub rows: Vec<CensusRow>,
    /// Distinct divisor tuples other than all-ones, with the graphs having them.
    pub nontrivial_divisors: BTreeMap<String, Vec<String>>,
}

/// Largest census order accepted without `allow_eight`.
pub const CENSUS_MAX_DEFAULT: usize = 7;

/// Enumerates connected graphs up to `max_n`, keeps the neighborhood
/// distinguishable ones, and records `A_Γ` divisors and the RA verdict.
pub fn census(max_n: usize, allow_eight: bool) -> Result<Census> {
    let limit = if allow_eight { 8 } else { CENSUS_MAX_DEFAULT };
    if max_n == 0 || max_n > limit {
        return Err(Error::LimitExceeded(format!(
            "census supports 1 <= max_n <= {limit}, got {max_n}"
        )));
    }
    let mut counts = Vec::new();
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let graphs = enumerate_connected_graphs(n)?;
        let dist: Vec<&Graph> = graphs.iter().filter(|g| g.is_neighborhood_distinguishable()).collect();
        let mut level: Vec<CensusRow> = dist
            .par_iter()
            .map(|g| {
                let v = is_ra(g)?;
                let witness = match (&v.failing_prime, &v.ra_divisors) {
                    (Some(p), _) => format!("p={p}"),
                    (None, Some(d)) if !v.ra => d.to_string(),
                    _ => v
                        .checked_primes
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                };
                Ok(CensusRow {
                    n,
                    graph6: v.graph.clone(),
                    divisors: v.activation_divisors.clone(),
                    ra: v.ra,
                    method: v.method,
                    witness,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        level.sort_by(|a, b| a.graph6.cmp(&b.graph6));
        counts.push(CensusCounts {
            n,
            connected: graphs.len(),
            distinguishable: level.len(),
            full_lattice: level.iter().filter(|r| r.divisors.is_trivial()).count(),
            ra: level.iter().filter(|r| r.ra).count(),
        });
        rows.extend(level);
    }
    let mut nontrivial: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for r in &rows {
        if !r.divisors.is_trivial() {
            nontrivial.entry(r.divisors.to_string()).or_default().push(r.graph6.clone());
        }
    }
    Ok(Census {
        counts,
        rows,
        nontrivial_divisors: nontrivial,
    })
}

impl Census {
    /// `n,graph6,divisors,ra,method,witness` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,graph6,divisors,ra,method,witness\n");
        for r in &self.rows {
            let method = serde_json::to_value(r.method).unwrap();
            s.push_str(&format!(
                "{},{},\"{}\",{},{},{}\n",
                r.n,
                r.graph6,
                r.divisors,
                r.ra,
                method.as_str().unwrap(),
                r.witness
            ));
        }
        s
    }
}

/// Parses an OEIS b-file (`index value` per line, `#` comments).
pub fn parse_bfile(text: &str) -> Result<BTreeMap<u64, BigInt>> {
    let mut out = BTreeMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(i), Some(v)) = (it.next(), it.next()) else {
            return Err(Error::parse(line, "expected `index value`"));
        };
        let i: u64 = i.parse().map_err(|_| Error::parse(i, "bad index"))?;
        let v: BigInt = v.parse().map_err(|_| Error::parse(v, "bad value"))?;
        out.insert(i, v);
    }
    Ok(out)
}
