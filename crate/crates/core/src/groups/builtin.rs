//! Built-in families and the group spec mini-language.
//!
//! Grammar: `spec := factor ('x' factor)*`, `factor := letter number` with
//! `C n` cyclic of order n, `D n` dihedral of order n (n even), `S m`
//! symmetric, `A m` alternating, `H p` Heisenberg group over the field with
//! p elements (p prime, p ≤ 7).

use std::fmt;
use std::str::FromStr;

use super::{FiniteGroup, Perm, PermGroup};
use crate::error::{Error, Result};
use crate::zlinalg::is_prime;

const MAX_DEGREE: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    /// Dihedral group of the given order `2n`.
    Dihedral(u64),
    Symmetric(u64),
    Alternating(u64),
    Heisenberg(u64),
    Product(Vec<GroupSpec>),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Heisenberg(p) => write!(f, "H{p}"),
            GroupSpec::Product(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", s.join("x"))
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupSpec> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::parse("", "empty group spec"));
        }
        let mut parts = Vec::new();
        for tok in s.split(['x', '×']) {
            parts.push(parse_factor(tok.trim())?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            GroupSpec::Product(parts)
        })
    }
}

fn parse_factor(tok: &str) -> Result<GroupSpec> {
    let mut chars = tok.chars();
    let Some(letter) = chars.next() else {
        return Err(Error::parse(tok, "empty factor"));
    };
    let num: u64 = chars
        .as_str()
        .parse()
        .map_err(|_| Error::parse(tok, "expected a letter followed by a positive integer"))?;
    let spec = match letter.to_ascii_uppercase() {
        'C' => GroupSpec::Cyclic(num),
        'D' => GroupSpec::Dihedral(num),
        'S' => GroupSpec::Symmetric(num),
        'A' => GroupSpec::Alternating(num),
        'H' => GroupSpec::Heisenberg(num),
        _ => return Err(Error::parse(tok, "unknown family letter (expected C, D, S, A or H)")),
    };
    spec.validate().map_err(|e| Error::parse(tok, e.to_string()))?;
    Ok(spec)
}

fn cycle(degree: usize, points: impl Iterator<Item = usize>) -> Perm {
    let pts: Vec<usize> = points.collect();
    Perm::from_cycles(degree, &[&pts]).expect("points inside the domain")
}

impl GroupSpec {
    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::UnsupportedParameter(m));
        match *self {
            GroupSpec::Cyclic(n) | GroupSpec::Symmetric(n) | GroupSpec::Alternating(n)
                if n == 0 || n > MAX_DEGREE =>
            {
                bad(format!("{self}: size must be in 1..={MAX_DEGREE}"))
            }
            GroupSpec::Dihedral(n) if n == 0 || n % 2 == 1 || n / 2 > MAX_DEGREE => {
                bad(format!("{self}: dihedral order must be a positive even number"))
            }
            GroupSpec::Heisenberg(p) if !is_prime(p) || p > 7 => {
                bad(format!("{self}: Heisenberg groups need a prime p <= 7"))
            }
            GroupSpec::Product(ref parts) if parts.is_empty() => bad("empty product".into()),
            GroupSpec::Product(ref parts) => parts.iter().try_for_each(|p| p.validate()),
            _ => Ok(()),
        }
    }

    /// The closed-form order.
    pub fn expected_order(&self) -> num_bigint::BigUint {
        use num_bigint::BigUint;
        match *self {
            GroupSpec::Cyclic(n) | GroupSpec::Dihedral(n) => BigUint::from(n),
            GroupSpec::Symmetric(m) => (1..=m).map(BigUint::from).product(),
            GroupSpec::Alternating(m) => {
                let f: BigUint = (1..=m).map(BigUint::from).product();
                if m >= 2 {
                    f / 2u32
                } else {
                    f
                }
            }
            GroupSpec::Heisenberg(p) => BigUint::from(p).pow(3),
            GroupSpec::Product(ref parts) => parts.iter().map(|p| p.expected_order()).product(),
        }
    }

    fn generators(&self) -> (usize, Vec<Perm>) {
        match *self {
            GroupSpec::Cyclic(n) => {
                let n = n as usize;
                (n, if n > 1 { vec![cycle(n, 0..n)] } else { vec![] })
            }
            GroupSpec::Dihedral(order) => match order / 2 {
                1 => (2, vec![cycle(2, 0..2)]),
                2 => (4, vec![cycle(4, 0..2), cycle(4, 2..4)]),
                n => {
                    let n = n as usize;
                    let r = cycle(n, 0..n);
                    let s = Perm::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
                    (n, vec![r, s])
                }
            },
            GroupSpec::Symmetric(m) => {
                let m = m as usize;
                match m {
                    1 => (1, vec![]),
                    2 => (2, vec![cycle(2, 0..2)]),
                    _ => (m, vec![cycle(m, 0..2), cycle(m, 0..m)]),
                }
            }
            GroupSpec::Alternating(m) => {
                let m = m as usize;
                (m, (2..m).map(|k| cycle(m, [0, 1, k].into_iter())).collect())
            }
            GroupSpec::Heisenberg(p) => heisenberg(p as usize),
            GroupSpec::Product(ref parts) => {
                let built: Vec<(usize, Vec<Perm>)> = parts.iter().map(|p| p.generators()).collect();
                let total: usize = built.iter().map(|(d, _)| d).sum();
                let mut gens = Vec::new();
                let mut offset = 0;
                for (d, gs) in &built {
                    for g in gs {
                        let mut img: Vec<usize> = (0..total).collect();
                        for i in 0..*d {
                            img[offset + i] = offset + g.image(i);
                        }
                        gens.push(Perm::from_images(img).unwrap());
                    }
                    offset += d;
                }
                (total, gens)
            }
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        self.validate()?;
        let (degree, gens) = self.generators();
        Ok(FiniteGroup::new(self.to_string(), PermGroup::new(degree, &gens)?))
    }
}

/// Right regular representation of the unitriangular group: the triple
/// `(a, b, c)` stands for the matrix with superdiagonal `a, b` and corner
/// `c`, so `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`.
fn heisenberg(p: usize) -> (usize, Vec<Perm>) {
    let idx = |a: usize, b: usize, c: usize| (a * p + b) * p + c;
    let right_mul = |x: (usize, usize, usize)| {
        let mut img = vec![0; p * p * p];
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    let prod = ((a + x.0) % p, (b + x.1) % p, (c + x.2 + a * x.1) % p);
                    img[idx(a, b, c)] = idx(prod.0, prod.1, prod.2);
                }
            }
        }
        Perm::from_images(img).unwrap()
    };
    (p * p * p, vec![right_mul((1, 0, 0)), right_mul((0, 1, 0))])
}
