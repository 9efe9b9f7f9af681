use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::{Perm, PermGroup};
use crate::zlinalg::{snf, IntMat};

/// `G / [G, G] ≅ ⊕ Z/r_α` with an explicit projection.
#[derive(Clone, Debug)]
pub struct AbelianInvariants {
    factors: Vec<u64>,
    derived: PermGroup,
    /// Coset representatives of `[G, G]` and their exponent vectors.
    reps: Vec<Perm>,
    rep_inverses: Vec<Perm>,
    rep_proj: Vec<Vec<u64>>,
}

impl AbelianInvariants {
    /// Enumerates the cosets of `derived` breadth-first along the
    /// generators; the non-tree edges give the relation lattice, and its
    /// Smith form gives the invariant factors and coordinates.
    pub(crate) fn compute(g: &PermGroup, derived: &PermGroup) -> AbelianInvariants {
        let gens = g.generators();
        let k = gens.len();
        let mut reps = vec![g.identity()];
        let mut rep_inverses = vec![g.identity()];
        let mut words: Vec<Vec<i64>> = vec![vec![0; k]];
        let mut relations: Vec<Vec<i64>> = Vec::new();
        let mut t = 0;
        while t < reps.len() {
            for (si, s) in gens.iter().enumerate() {
                let y = reps[t].then(s);
                let mut w = words[t].clone();
                w[si] += 1;
                match rep_inverses.iter().position(|ri| derived.contains(&y.then(ri))) {
                    Some(j) => {
                        let rel: Vec<i64> = w.iter().zip(&words[j]).map(|(a, b)| a - b).collect();
                        if rel.iter().any(|&x| x != 0) {
                            relations.push(rel);
                        }
                    }
                    None => {
                        rep_inverses.push(y.inverse());
                        reps.push(y);
                        words.push(w);
                    }
                }
            }
            t += 1;
        }

        let (factors, coords) = if k == 0 {
            (Vec::new(), Vec::new())
        } else {
            let rel = IntMat::from_rows(k, &relations).expect("relation rows have length k");
            let s = snf(&rel);
            let d = s.divisors.values();
            let idx: Vec<usize> = (0..d.len()).filter(|&i| d[i] > BigInt::one()).collect();
            let factors: Vec<u64> = idx.iter().map(|&i| d[i].to_u64().expect("small factor")).collect();
            (factors, idx.into_iter().map(|i| (i, s.v.clone())).collect::<Vec<_>>())
        };
        let rep_proj = words
            .iter()
            .map(|w| {
                coords
                    .iter()
                    .zip(&factors)
                    .map(|((i, v), &r)| {
                        let x: BigInt = (0..k).map(|j| BigInt::from(w[j]) * v.get(j, *i)).sum();
                        x.mod_floor(&BigInt::from(r)).to_u64().unwrap()
                    })
                    .collect()
            })
            .collect();

        let out = AbelianInvariants {
            factors,
            derived: derived.clone(),
            reps,
            rep_inverses,
            rep_proj,
        };
        assert_eq!(
            out.order(),
            BigUint::from(out.reps.len()),
            "invariant factors must multiply to the number of cosets"
        );
        out
    }

    /// Invariant factors `r_1 | r_2 | …`, each at least 2.
    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> BigUint {
        self.factors.iter().map(|&r| BigUint::from(r)).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    fn coset_of(&self, x: &Perm) -> usize {
        self.rep_inverses
            .iter()
            .position(|ri| self.derived.contains(&x.then(ri)))
            .expect("every element lies in some coset")
    }

    /// Exponent vector of the image of `x` in `⊕ Z/r_α`.
    pub fn project(&self, x: &Perm) -> Vec<u64> {
        self.rep_proj[self.coset_of(x)].clone()
    }

    /// A coset representative with the given exponent vector.
    pub fn lift(&self, e: &[u64]) -> Perm {
        let want: Vec<u64> = e.iter().zip(&self.factors).map(|(x, r)| x % r).collect();
        let i = self.rep_proj.iter().position(|p| *p == want).expect("projection is onto");
        self.reps[i].clone()
    }
}

#[cfg(test)]
mod tests {
    use crate::groups::{FiniteGroup, DEFAULT_SEARCH_BOUND};

    #[test]
    fn invariant_factors() {
        for (s, f) in [
            ("H3", vec![3, 3]),
            ("H5", vec![5, 5]),
            ("S4", vec![2]),
            ("D10", vec![2]),
            ("D8", vec![2, 2]),
            ("C6", vec![6]),
            ("C2xC4", vec![2, 4]),
            ("C2xC3", vec![6]),
            ("A4", vec![3]),
            ("A5", vec![]),
            ("C1", vec![]),
        ] {
            let g = FiniteGroup::parse(s).unwrap();
            assert_eq!(g.abelianization().factors(), f.as_slice(), "{s}");
        }
    }

    #[test]
    fn projection_is_a_homomorphism() {
        for s in ["D8", "S4", "H3", "C2xC4", "D12"] {
            let g = FiniteGroup::parse(s).unwrap();
            let ab = g.abelianization();
            let el = g.elements(DEFAULT_SEARCH_BOUND).unwrap();
            for x in el.iter().step_by(3) {
                for y in el.iter().step_by(5) {
                    let sum: Vec<u64> = ab
                        .project(x)
                        .iter()
                        .zip(ab.project(y))
                        .zip(ab.factors())
                        .map(|((a, b), r)| (a + b) % r)
                        .collect();
                    assert_eq!(ab.project(&x.then(y)), sum, "{s}");
                }
            }
        }
    }
}
