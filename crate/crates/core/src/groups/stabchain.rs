//! Deterministic incremental Schreier–Sims.

use num_bigint::BigUint;
use num_traits::One;

use super::Perm;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    /// Indices into the chain's strong generators.
    gens: Vec<usize>,
    /// Orbit of `base` in discovery order.
    orbit: Vec<usize>,
    /// `trans[p] = (u, u⁻¹)` with `base^u = p`, for orbit points only.
    trans: Vec<Option<(Perm, Perm)>>,
    /// Per orbit position, how many of `gens` have had their Schreier
    /// generator verified.
    checked: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Level {
        let mut trans = vec![None; degree];
        trans[base] = Some((Perm::identity(degree), Perm::identity(degree)));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            trans,
            checked: vec![0],
        }
    }
}

/// Base and strong generating set of a permutation group.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    strong: Vec<Perm>,
    levels: Vec<Level>,
    cap: Option<BigUint>,
}

impl StabChain {
    pub fn new(degree: usize, cap: Option<BigUint>) -> StabChain {
        StabChain {
            degree,
            strong: Vec::new(),
            levels: Vec::new(),
            cap,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Strips `g` through the chain from `start`; returns the residue and
    /// the level where stripping stopped (`levels.len()` if it went through).
    fn sift(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for (i, lvl) in self.levels.iter().enumerate().skip(start) {
            let p = g.image(lvl.base);
            match &lvl.trans[p] {
                Some((_, uinv)) => g = g.then(uinv),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && {
            let (h, _) = self.sift(g.clone(), 0);
            h.is_identity()
        }
    }

    fn extend_orbit(&mut self, li: usize) {
        let lvl = &mut self.levels[li];
        let mut k = 0;
        while k < lvl.orbit.len() {
            let p = lvl.orbit[k];
            for &gi in &lvl.gens {
                let s = &self.strong[gi];
                let q = s.image(p);
                if lvl.trans[q].is_none() {
                    let u = lvl.trans[p].as_ref().unwrap().0.then(s);
                    let uinv = u.inverse();
                    lvl.trans[q] = Some((u, uinv));
                    lvl.orbit.push(q);
                    lvl.checked.push(0);
                }
            }
            k += 1;
        }
    }

    /// Registers `h`, which fixes the bases of levels `< to`, as a strong
    /// generator on levels `from..=to`.
    fn add_strong(&mut self, h: Perm, from: usize, to: usize) -> Result<()> {
        if to == self.levels.len() {
            let b = h.first_moved().expect("residue is not the identity");
            self.levels.push(Level::new(b, self.degree));
        }
        let idx = self.strong.len();
        self.strong.push(h);
        for li in from..=to {
            self.levels[li].gens.push(idx);
            self.extend_orbit(li);
        }
        self.check_cap()
    }

    fn check_cap(&self) -> Result<()> {
        if let Some(cap) = &self.cap {
            let reached = self.order();
            if &reached > cap {
                return Err(Error::CapacityExceeded {
                    reached,
                    cap: cap.clone(),
                });
            }
        }
        Ok(())
    }

    /// Adds generators and restores the strong generating property.
    pub fn add_generators(&mut self, gens: &[Perm]) -> Result<()> {
        for g in gens {
            if g.degree() != self.degree {
                return Err(Error::DomainMismatch(self.degree, g.degree()));
            }
        }
        let mut changed = false;
        for g in gens {
            let (h, j) = self.sift(g.clone(), 0);
            if !h.is_identity() {
                self.add_strong(h, 0, j)?;
                changed = true;
            }
        }
        if changed {
            self.complete()?;
        }
        Ok(())
    }

    fn complete(&mut self) -> Result<()> {
        let mut i = self.levels.len() as isize - 1;
        'levels: while i >= 0 {
            let li = i as usize;
            let mut pos = 0;
            while pos < self.levels[li].orbit.len() {
                while self.levels[li].checked[pos] < self.levels[li].gens.len() {
                    let lvl = &self.levels[li];
                    let b = lvl.orbit[pos];
                    let s = &self.strong[lvl.gens[lvl.checked[pos]]];
                    let (ub, _) = lvl.trans[b].as_ref().unwrap();
                    let (_, ubs_inv) = lvl.trans[s.image(b)].as_ref().unwrap();
                    let schreier = ub.then(s).then(ubs_inv);
                    self.levels[li].checked[pos] += 1;
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, j) = self.sift(schreier, li + 1);
                    if !h.is_identity() {
                        self.add_strong(h, li + 1, j)?;
                        i = j as isize;
                        continue 'levels;
                    }
                }
                pos += 1;
            }
            i -= 1;
        }
        Ok(())
    }
}
