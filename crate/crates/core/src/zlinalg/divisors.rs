use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{bigint_from_json, bigint_to_json};

/// Elementary divisors in the order `(1^s, a_1, …, a_t, 0^u)`.
///
/// Displays with exponent compression, e.g. `(1^4, 2, 0^3)`; serializes as
/// a plain list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorTuple(Vec<BigInt>);

impl DivisorTuple {
    pub fn new(values: Vec<BigInt>) -> Self {
        DivisorTuple(values)
    }

    pub fn from_u64(values: &[u64]) -> Self {
        DivisorTuple(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn values(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|d| d.is_one()).count()
    }

    pub fn zeros(&self) -> usize {
        self.0.iter().filter(|d| d.is_zero()).count()
    }

    /// Divisors other than 1 (zeros included).
    pub fn nontrivial(&self) -> Vec<BigInt> {
        self.0.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|d| d.is_one())
    }

    /// The last (largest in the divisibility order) divisor.
    pub fn largest(&self) -> Option<&BigInt> {
        self.0.last()
    }
}

impl fmt::Display for DivisorTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            let run = j - i;
            if run > 1 {
                parts.push(format!("{}^{}", self.0[i], run));
            } else {
                parts.push(self.0[i].to_string());
            }
            i = j;
        }
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for DivisorTuple {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<serde_json::Value> = self.0.iter().map(bigint_to_json).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DivisorTuple {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<serde_json::Value> = Vec::deserialize(d)?;
        v.iter()
            .map(|x| bigint_from_json(x).ok_or_else(|| serde::de::Error::custom("not an integer")))
            .collect::<Result<Vec<_>, _>>()
            .map(DivisorTuple)
    }
}
