//! Finite permutation groups.
//!
//! Every group is carried by a faithful permutation representation, and
//! orders and membership come from a base and strong generating set.

mod abelian;
mod builtin;
mod perm;
mod stabchain;

pub use abelian::AbelianInvariants;
pub use builtin::GroupSpec;
pub use perm::{GroupElement, Perm};
pub use stabchain::StabChain;

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::ops::Deref;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// Largest group order for which elements are enumerated (`|S_7|`).
pub const DEFAULT_SEARCH_BOUND: u64 = 5040;

/// A subgroup of `Sym(degree)` given by generators.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: StabChain,
}

/// Subgroups are permutation groups on the parent's domain.
pub type Subgroup = PermGroup;

impl PermGroup {
    pub fn new(degree: usize, gens: &[Perm]) -> Result<PermGroup> {
        PermGroup::with_cap(degree, gens, None)
    }

    /// Like [`PermGroup::new`], failing with `CapacityExceeded` once the
    /// order provably exceeds `cap`.
    pub fn with_cap(degree: usize, gens: &[Perm], cap: Option<BigUint>) -> Result<PermGroup> {
        let mut g = PermGroup {
            degree,
            gens: Vec::new(),
            chain: StabChain::new(degree, cap),
        };
        g.add_generators(gens)?;
        Ok(g)
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, &[]).expect("no generators")
    }

    pub fn add_generators(&mut self, gens: &[Perm]) -> Result<()> {
        self.chain.add_generators(gens)?;
        self.gens
            .extend(gens.iter().filter(|g| !g.is_identity()).cloned());
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn strong_generators(&self) -> &[Perm] {
        self.chain.strong_generators()
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    pub fn order(&self) -> BigUint {
        self.chain.order()
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain.contains(g)
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
    }

    pub fn is_normalized_by(&self, conj: &[Perm]) -> bool {
        self.gens
            .iter()
            .all(|g| conj.iter().all(|c| self.contains(&g.conjugate_by(c))))
    }

    /// Smallest subgroup containing `self` and normalized by `conj`.
    pub fn normal_closure_under(&self, conj: &[Perm], cap: Option<BigUint>) -> Result<PermGroup> {
        let mut g = PermGroup::with_cap(self.degree, &self.gens, cap)?;
        let mut k = 0;
        while k < g.gens.len() {
            let x = g.gens[k].clone();
            for c in conj {
                let y = x.conjugate_by(c);
                if !g.contains(&y) {
                    g.add_generators(&[y])?;
                }
            }
            k += 1;
        }
        Ok(g)
    }

    /// The commutator subgroup: normal closure of generator commutators.
    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        let mut comms = Vec::new();
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                let c = a.commutator(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        PermGroup::new(self.degree, &comms)?.normal_closure_under(&self.gens, None)
    }

    fn check_bound(&self, bound: u64) -> Result<()> {
        let order = self.order();
        if order > BigUint::from(bound) {
            return Err(Error::SearchBoundExceeded { order, bound });
        }
        Ok(())
    }

    /// All elements, sorted, by breadth-first closure.
    pub fn elements(&self, bound: u64) -> Result<Vec<Perm>> {
        self.check_bound(bound)?;
        let id = self.identity();
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for s in &self.gens {
                let y = x.then(s);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<Perm> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }
}

/// A named finite group with cached derived data.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    group: PermGroup,
    derived: OnceLock<PermGroup>,
    abelian: OnceLock<AbelianInvariants>,
}

impl Deref for FiniteGroup {
    type Target = PermGroup;
    fn deref(&self) -> &PermGroup {
        &self.group
    }
}

impl FiniteGroup {
    pub fn new(name: impl Into<String>, group: PermGroup) -> FiniteGroup {
        FiniteGroup {
            name: name.into(),
            group,
            derived: OnceLock::new(),
            abelian: OnceLock::new(),
        }
    }

    pub fn from_generators(name: impl Into<String>, degree: usize, gens: &[Perm]) -> Result<FiniteGroup> {
        Ok(FiniteGroup::new(name, PermGroup::new(degree, gens)?))
    }

    pub fn parse(spec: &str) -> Result<FiniteGroup> {
        spec.parse::<GroupSpec>()?.build()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn as_perm_group(&self) -> &PermGroup {
        &self.group
    }

    /// `[G, G]`.
    pub fn derived_subgroup(&self) -> &PermGroup {
        self.derived.get_or_init(|| {
            self.group
                .derived_subgroup()
                .expect("uncapped closure inside the parent domain")
        })
    }

    /// Invariant factors of `G / [G, G]` with a projection homomorphism.
    pub fn abelianization(&self) -> &AbelianInvariants {
        self.abelian
            .get_or_init(|| AbelianInvariants::compute(&self.group, self.derived_subgroup()))
    }

    /// Each commutator value with one pair `(x, y)` realizing it.
    pub fn commutator_witnesses(&self, bound: u64) -> Result<BTreeMap<Perm, (Perm, Perm)>> {
        let elems = self.group.elements(bound)?;
        let mut out = BTreeMap::new();
        for x in &elems {
            for y in &elems {
                out.entry(x.commutator(y))
                    .or_insert_with(|| (x.clone(), y.clone()));
            }
        }
        Ok(out)
    }

    /// `{[x, y] : x, y ∈ G}` as a set (not the generated subgroup).
    pub fn commutator_set(&self, bound: u64) -> Result<BTreeSet<Perm>> {
        Ok(self.commutator_witnesses(bound)?.into_keys().collect())
    }

    /// Elements `y_α` of order exactly `r_α` whose images form a basis
    /// `e_α ↦ ȳ_α` of `G^Ab ≅ ⊕ Z/r_α`, if such elements exist.
    ///
    /// Whether coset representatives of the standard generators can be
    /// chosen with the right orders depends on the chosen decomposition, so
    /// every decomposition is searched.
    pub fn has_faithful_abelian_generators(&self, bound: u64) -> Result<Option<Vec<Perm>>> {
        let elems = self.group.elements(bound)?;
        let ab = self.abelianization();
        let factors = ab.factors();
        let mut candidates: Vec<BTreeMap<Vec<u64>, Perm>> = vec![BTreeMap::new(); factors.len()];
        for x in &elems {
            let ord = x.order();
            for (alpha, &r) in factors.iter().enumerate() {
                if ord == r {
                    candidates[alpha].entry(ab.project(x)).or_insert_with(|| x.clone());
                }
            }
        }
        let candidates: Vec<Vec<(Vec<u64>, Perm)>> =
            candidates.into_iter().map(|m| m.into_iter().collect()).collect();
        let mut chosen: Vec<usize> = Vec::new();
        if faithful_search(factors, &candidates, &mut chosen) {
            Ok(Some(
                chosen
                    .iter()
                    .enumerate()
                    .map(|(alpha, &i)| candidates[alpha][i].1.clone())
                    .collect(),
            ))
        } else {
            Ok(None)
        }
    }
}

/// Size of the subgroup of `⊕ Z/r_α` generated by `vecs`.
fn span_size(factors: &[u64], vecs: &[&Vec<u64>]) -> usize {
    let zero = vec![0u64; factors.len()];
    let mut seen: HashSet<Vec<u64>> = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(x) = queue.pop_front() {
        for v in vecs {
            let y: Vec<u64> = x
                .iter()
                .zip(v.iter())
                .zip(factors)
                .map(|((a, b), r)| (a + b) % r)
                .collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

fn faithful_search(factors: &[u64], cands: &[Vec<(Vec<u64>, Perm)>], chosen: &mut Vec<usize>) -> bool {
    let alpha = chosen.len();
    if alpha == factors.len() {
        return true;
    }
    let target: u64 = factors[..=alpha].iter().product();
    for i in 0..cands[alpha].len() {
        chosen.push(i);
        let vecs: Vec<&Vec<u64>> = chosen.iter().enumerate().map(|(b, &j)| &cands[b][j].0).collect();
        if span_size(factors, &vecs) as u64 == target && faithful_search(factors, cands, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

impl std::fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name)
    }
}
