//! Graph powers `G^M ≤ G^n` and the commutator chain inside them.
//!
//! A state vector of `G^n` is realized as one permutation on `n` disjoint
//! copies of `G`'s domain, so every subgroup of `G^n` is an ordinary
//! permutation group and order/membership come from the stabilizer chain.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groups::{FiniteGroup, Perm, PermGroup, DEFAULT_SEARCH_BOUND};
use crate::ra::activation_matrix;
use crate::zlinalg::{elementary_divisors, rank_mod_p, IntMat};

/// Default cap on the order of any computed subgroup of `G^n`.
pub fn default_capacity() -> BigUint {
    BigUint::one() << 30u32
}

/// Resource limits for power computations.
#[derive(Clone, Debug)]
pub struct PowerOptions {
    /// Largest subgroup order built before failing with `CapacityExceeded`.
    pub capacity: Option<BigUint>,
    /// Largest `|G|` for which elements of `G` are enumerated.
    pub search_bound: u64,
}

impl Default for PowerOptions {
    fn default() -> Self {
        PowerOptions {
            capacity: Some(default_capacity()),
            search_bound: DEFAULT_SEARCH_BOUND,
        }
    }
}

/// An element of `G^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateVector(pub Vec<Perm>);

/// Click multiplicities, one per vertex.
pub type ClickVector = Vec<i64>;

impl StateVector {
    pub fn identity(degree: usize, n: usize) -> StateVector {
        StateVector(vec![Perm::identity(degree); n])
    }

    pub fn components(&self) -> &[Perm] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|p| p.is_identity())
    }

    pub fn then(&self, other: &StateVector) -> StateVector {
        StateVector(self.0.iter().zip(&other.0).map(|(a, b)| a.then(b)).collect())
    }

    pub fn inverse(&self) -> StateVector {
        StateVector(self.0.iter().map(|a| a.inverse()).collect())
    }

    pub fn commutator(&self, other: &StateVector) -> StateVector {
        StateVector(self.0.iter().zip(&other.0).map(|(a, b)| a.commutator(b)).collect())
    }

    pub fn to_perm(&self) -> Perm {
        Perm::concat(&self.0.iter().collect::<Vec<_>>())
    }

    pub fn from_perm(p: &Perm, degree: usize, n: usize) -> StateVector {
        StateVector((0..n).map(|i| p.slice(i * degree, degree)).collect())
    }
}

/// `g^x = (g^{x_1}, …, g^{x_n})`.
pub fn power_click(g: &Perm, x: &[i64]) -> StateVector {
    StateVector(x.iter().map(|&e| g.pow(e)).collect())
}

/// A subgroup of `G^n` with the state vectors that generate it.
#[derive(Clone, Debug)]
pub struct PowerSubgroup {
    n: usize,
    degree: usize,
    generators: Vec<StateVector>,
    group: PermGroup,
}

impl PowerSubgroup {
    fn build(degree: usize, n: usize, gens: Vec<StateVector>, cap: Option<BigUint>) -> Result<Self> {
        let gens: Vec<StateVector> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let perms: Vec<Perm> = gens.iter().map(|g| g.to_perm()).collect();
        let group = PermGroup::with_cap(degree * n, &perms, cap)?;
        Ok(PowerSubgroup {
            n,
            degree,
            generators: gens,
            group,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> BigUint {
        self.group.order()
    }

    pub fn generators(&self) -> &[StateVector] {
        &self.generators
    }

    pub fn as_perm_group(&self) -> &PermGroup {
        &self.group
    }

    pub fn contains(&self, x: &StateVector) -> bool {
        x.len() == self.n && self.group.contains(&x.to_perm())
    }

    /// All elements, sorted; fails past `bound`.
    pub fn elements(&self, bound: u64) -> Result<Vec<StateVector>> {
        Ok(self
            .group
            .elements(bound)?
            .iter()
            .map(|p| StateVector::from_perm(p, self.degree, self.n))
            .collect())
    }

    /// Normal closure of this subgroup under conjugation by `conj`.
    fn normal_closure(&self, conj: &[StateVector], cap: Option<BigUint>) -> Result<PowerSubgroup> {
        let perms: Vec<Perm> = conj.iter().map(|c| c.to_perm()).collect();
        let group = self.group.normal_closure_under(&perms, cap)?;
        let generators = group
            .generators()
            .iter()
            .map(|p| StateVector::from_perm(p, self.degree, self.n))
            .collect();
        Ok(PowerSubgroup {
            n: self.n,
            degree: self.degree,
            generators,
            group,
        })
    }
}

fn rows_i64(m: &IntMat) -> Result<Vec<Vec<i64>>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| {
                    x.to_i64()
                        .ok_or_else(|| Error::InvalidParameter(format!("matrix entry {x} too large")))
                })
                .collect()
        })
        .collect()
}

/// `G^M`: the subgroup generated by `g^x` over the rows `x` of `M`.
///
/// For 0/1 matrices clicks by generators suffice, since `(gh)^x = g^x h^x`
/// then. Other matrices are clicked with every element of `G`.
pub fn matrix_power(g: &FiniteGroup, m: &IntMat, opts: &PowerOptions) -> Result<PowerSubgroup> {
    let rows = rows_i64(m)?;
    let clickers: Vec<Perm> = if m.is_binary() {
        g.generators().to_vec()
    } else {
        g.elements(opts.search_bound)?
    };
    let mut gens = Vec::new();
    for x in &rows {
        for s in &clickers {
            gens.push(power_click(s, x));
        }
    }
    PowerSubgroup::build(g.degree(), m.cols(), gens, opts.capacity.clone())
}

/// `G^Γ = G^{A_Γ}`.
pub fn graph_power(g: &FiniteGroup, gamma: &Graph, opts: &PowerOptions) -> Result<PowerSubgroup> {
    matrix_power(g, &activation_matrix(gamma), opts)
}

/// `|(⊕ Z/r_α)^M|`, read off the elementary divisors of `M`: the image of
/// `(Z/r)^m` under `M` has order `∏_i r / gcd(d_i, r)`.
pub fn abelian_power_order(factors: &[u64], m: &IntMat) -> BigUint {
    let d = elementary_divisors(m);
    let mut order = BigUint::one();
    for &r in factors {
        let rb = BigInt::from(r);
        for di in d.values() {
            let g = di.gcd(&rb);
            order *= (&rb / g).to_biguint().expect("positive");
        }
    }
    order
}

fn exact_div(a: &BigUint, b: &BigUint, what: &str) -> Result<BigUint> {
    let (q, r) = a.div_rem(b);
    if !r.is_zero() {
        return Err(Error::Internal(format!("{what}: {a} is not divisible by {b}")));
    }
    Ok(q)
}

/// `|Comm(G, M)| = |G^M| / |(G^Ab)^M|`.
pub fn comm_intersection_order(g: &FiniteGroup, m: &IntMat, opts: &PowerOptions) -> Result<BigUint> {
    let power = matrix_power(g, m, opts)?;
    comm_order_from(g, m, &power)
}

fn comm_order_from(g: &FiniteGroup, m: &IntMat, power: &PowerSubgroup) -> Result<BigUint> {
    let ab = abelian_power_order(g.abelianization().factors(), m);
    exact_div(&power.order(), &ab, "|G^M| / |(G^Ab)^M|")
}

/// `x ∈ Comm(G, M)`: `x ∈ G^M` with every coordinate in `[G, G]`.
pub fn comm_contains(g: &FiniteGroup, power: &PowerSubgroup, x: &StateVector) -> bool {
    power.contains(x) && x.components().iter().all(|c| g.derived_subgroup().contains(c))
}

fn meet(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(&a, &b)| (a != 0 && b != 0) as i64).collect()
}

/// Generators `[g^x, h^y]` of the basic commutator subgroup over row
/// pairs `x ≤ y` (`distinct` drops `x = y`).
fn basic_commutators(
    g: &FiniteGroup,
    m: &IntMat,
    distinct: bool,
    opts: &PowerOptions,
) -> Result<Vec<StateVector>> {
    let rows = rows_i64(m)?;
    let mut gens = Vec::new();
    if m.is_binary() {
        // [g^x, h^y] = [g, h]^{x ∧ y}, checked on one witness pair per value.
        let witnesses = g.commutator_witnesses(opts.search_bound)?;
        for i in 0..rows.len() {
            for j in i + usize::from(distinct)..rows.len() {
                let ind = meet(&rows[i], &rows[j]);
                for (c, (a, b)) in &witnesses {
                    if c.is_identity() {
                        continue;
                    }
                    let direct = power_click(a, &rows[i]).commutator(&power_click(b, &rows[j]));
                    let packed = power_click(c, &ind);
                    if direct != packed {
                        return Err(Error::Internal(format!(
                            "commutator of clicks on rows {i}, {j} is not supported on their meet"
                        )));
                    }
                    gens.push(packed);
                }
            }
        }
    } else {
        let elems = g.elements(opts.search_bound)?;
        for i in 0..rows.len() {
            for j in i + usize::from(distinct)..rows.len() {
                for a in &elems {
                    for b in &elems {
                        gens.push(power_click(a, &rows[i]).commutator(&power_click(b, &rows[j])));
                    }
                }
            }
        }
    }
    Ok(gens)
}

/// `Comm_b(G, M)`, generated by all `[g^x, h^y]`.
pub fn comm_b(g: &FiniteGroup, m: &IntMat, opts: &PowerOptions) -> Result<PowerSubgroup> {
    let gens = basic_commutators(g, m, false, opts)?;
    PowerSubgroup::build(g.degree(), m.cols(), gens, opts.capacity.clone())
}

/// `Comm_d(G, M)`, generated by `[g^x, h^y]` for distinct rows.
pub fn comm_d(g: &FiniteGroup, m: &IntMat, opts: &PowerOptions) -> Result<PowerSubgroup> {
    let gens = basic_commutators(g, m, true, opts)?;
    PowerSubgroup::build(g.degree(), m.cols(), gens, opts.capacity.clone())
}

/// Orders of `Comm_d` and `Comm_b` when `[G, G]` has prime order `p`.
///
/// Then `Comm_b` is `Z_p` raised to the meets of row pairs, so its order is
/// `p^rank_p`. Returns `None` when the shortcut does not apply.
pub fn comm_orders_by_rank(g: &FiniteGroup, m: &IntMat) -> Result<Option<(BigUint, BigUint)>> {
    let p = match g.derived_subgroup().order_u64() {
        Some(p) if crate::zlinalg::is_prime(p) => p,
        _ => return Ok(None),
    };
    if !m.is_binary() {
        return Ok(None);
    }
    let rows = rows_i64(m)?;
    let mut diag = Vec::new();
    let mut off = Vec::new();
    for i in 0..rows.len() {
        for j in i..rows.len() {
            let v = meet(&rows[i], &rows[j]);
            if i == j {
                diag.push(v);
            } else {
                off.push(v);
            }
        }
    }
    let n = m.cols();
    let off_m = IntMat::from_rows(n, &off)?;
    let all_m = off_m.vstack(&IntMat::from_rows(n, &diag)?)?;
    let pb = BigUint::from(p);
    Ok(Some((
        pb.pow(rank_mod_p(&off_m, p)? as u32),
        pb.pow(rank_mod_p(&all_m, p)? as u32),
    )))
}

/// `[G^M, G^M]`: the normal closure of `Comm_b` in `G^M`.
pub fn derived_of_power(g: &FiniteGroup, m: &IntMat, opts: &PowerOptions) -> Result<PowerSubgroup> {
    let power = matrix_power(g, m, opts)?;
    derived_from(g, m, &power, opts)
}

fn derived_from(
    g: &FiniteGroup,
    m: &IntMat,
    power: &PowerSubgroup,
    opts: &PowerOptions,
) -> Result<PowerSubgroup> {
    let cb = comm_b(g, m, opts)?;
    cb.normal_closure(power.generators(), opts.capacity.clone())
}

/// `|[G,G]|^n · |(G^Ab)^M| / |G^M|`, the index of `Comm(G, M)` in `[G,G]^n`.
pub fn ra_index(g: &FiniteGroup, m: &IntMat, opts: &PowerOptions) -> Result<BigUint> {
    let power = matrix_power(g, m, opts)?;
    ra_index_from(g, m, &power)
}

fn ra_index_from(g: &FiniteGroup, m: &IntMat, power: &PowerSubgroup) -> Result<BigUint> {
    let comm = comm_order_from(g, m, power)?;
    let full = g.derived_subgroup().order().pow(m.cols() as u32);
    exact_div(&full, &comm, "|[G,G]|^n / |Comm(G, M)|")
}

/// `[G,G]^n ≤ G^M`.
pub fn is_g_ra(g: &FiniteGroup, m: &IntMat, opts: &PowerOptions) -> Result<bool> {
    Ok(ra_index(g, m, opts)?.is_one())
}

/// The five orders of `Comm_d ≤ Comm_b ≤ [G^M,G^M] ≤ Comm ≤ [G,G]^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    #[serde(serialize_with = "ser_big")]
    pub comm_d: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub comm_b: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub derived_of_power: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub comm: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub commutator_power: BigUint,
}

impl ChainReport {
    pub fn as_array(&self) -> [&BigUint; 5] {
        [
            &self.comm_d,
            &self.comm_b,
            &self.derived_of_power,
            &self.comm,
            &self.commutator_power,
        ]
    }
}

pub(crate) fn ser_big<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.serialize_str(&x.to_string()),
    }
}

/// Every order in the chain, each checked to divide the next.
pub fn chain_report(g: &FiniteGroup, m: &IntMat, opts: &PowerOptions) -> Result<ChainReport> {
    let power = matrix_power(g, m, opts)?;
    let report = ChainReport {
        comm_d: comm_d(g, m, opts)?.order(),
        comm_b: comm_b(g, m, opts)?.order(),
        derived_of_power: derived_from(g, m, &power, opts)?.order(),
        comm: comm_order_from(g, m, &power)?,
        commutator_power: g.derived_subgroup().order().pow(m.cols() as u32),
    };
    let a = report.as_array();
    for w in a.windows(2) {
        exact_div(w[1], w[0], "chain orders")?;
    }
    Ok(report)
}

/// Machine-readable summary for one graph and group.
#[derive(Clone, Debug, Serialize)]
pub struct PowerReport {
    pub graph: String,
    pub group: String,
    #[serde(serialize_with = "ser_big")]
    pub power_order: BigUint,
    pub orders: Option<ChainReport>,
    #[serde(serialize_with = "ser_big")]
    pub ra_index: BigUint,
    pub g_ra: bool,
}

/// `ra_index` and the G-RA verdict, with the full chain when `with_chain`.
pub fn power_report(g: &FiniteGroup, gamma: &Graph, with_chain: bool, opts: &PowerOptions) -> Result<PowerReport> {
    let m = activation_matrix(gamma);
    let power = matrix_power(g, &m, opts)?;
    let idx = ra_index_from(g, &m, &power)?;
    let orders = if with_chain {
        Some(chain_report(g, &m, opts)?)
    } else {
        None
    };
    Ok(PowerReport {
        graph: gamma.to_graph6(),
        group: g.name().to_string(),
        power_order: power.order(),
        orders,
        g_ra: idx.is_one(),
        ra_index: idx,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn grp(s: &str) -> FiniteGroup {
        FiniteGroup::parse(s).unwrap()
    }

    fn act(f: Family) -> IntMat {
        activation_matrix(&f.build().unwrap())
    }

    fn opts() -> PowerOptions {
        PowerOptions::default()
    }

    #[test]
    fn clicks() {
        let d8 = grp("D8");
        let r = &d8.generators()[0];
        assert_eq!(power_click(r, &[-1]).0[0], r.pow(3));
        let s = power_click(r, &[1, 1, 0]);
        assert_eq!(s.0, vec![r.clone(), r.clone(), d8.identity()]);
        let back = StateVector::from_perm(&s.to_perm(), 4, 3);
        assert_eq!(back, s);
    }

    #[test]
    fn small_powers() {
        let d8 = grp("D8");
        let two = IntMat::from_i64(&[&[2]]);
        let p = matrix_power(&d8, &two, &opts()).unwrap();
        assert_eq!(p.order(), BigUint::from(2u32));
        let k4 = act(Family::Complete(4));
        assert_eq!(matrix_power(&d8, &k4, &opts()).unwrap().order(), BigUint::from(8u32));
        let c2 = grp("C2");
        assert_eq!(matrix_power(&c2, &act(Family::Cycle(4)), &opts()).unwrap().order(), BigUint::from(16u32));
        let s3 = grp("S3");
        assert_eq!(matrix_power(&s3, &act(Family::Path(3)), &opts()).unwrap().order(), BigUint::from(216u32));
    }

    #[test]
    fn abelian_orders() {
        let c4 = act(Family::Cycle(4));
        assert_eq!(abelian_power_order(&[2], &c4), BigUint::from(16u32));
        assert_eq!(abelian_power_order(&[3], &c4), BigUint::from(27u32));
        assert_eq!(abelian_power_order(&[2], &act(Family::Star(3))), BigUint::from(8u32));
        assert_eq!(abelian_power_order(&[], &c4), BigUint::one());
    }

    #[test]
    fn cycle_four_chain() {
        let d8 = grp("D8");
        let c4 = act(Family::Cycle(4));
        let r = chain_report(&d8, &c4, &opts()).unwrap();
        let v: Vec<u32> = r.as_array().iter().map(|x| x.to_u32().unwrap()).collect();
        assert_eq!(v, vec![8, 16, 16, 16, 16]);
        let fast = comm_orders_by_rank(&d8, &c4).unwrap().unwrap();
        assert_eq!(fast, (r.comm_d.clone(), r.comm_b.clone()));
        assert!(ra_index(&d8, &c4, &opts()).unwrap().is_one());
    }

    #[test]
    fn abelian_groups_are_trivial() {
        let c6 = grp("C6");
        let q3 = act(Family::Hypercube(3));
        let r = chain_report(&c6, &q3, &opts()).unwrap();
        assert!(r.as_array().iter().all(|x| x.is_one()));
        assert!(is_g_ra(&c6, &q3, &opts()).unwrap());
    }

    #[test]
    fn capacity_is_enforced() {
        let s4 = grp("S4");
        let small = PowerOptions {
            capacity: Some(BigUint::from(1000u32)),
            ..PowerOptions::default()
        };
        assert!(matches!(
            graph_power(&s4, &Family::Cycle(5).build().unwrap(), &small),
            Err(Error::CapacityExceeded { .. })
        ));
    }
}
