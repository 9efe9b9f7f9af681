//! Group-valued Lights Out on finite simple graphs.
//!
//! Clicking a vertex `v` of a graph with a group element `g` multiplies the
//! state of every vertex in the closed neighborhood of `v` by `g` on the
//! right. The reachable states from the all-identity configuration form the
//! graph power `G^Γ ≤ G^n`. This crate computes that subgroup and the layers
//! of commutators inside it, decides whether a graph is *reducible to
//! abelian* (RA), and solves abelian instances explicitly.
//!
//! Module map:
//!
//! - [`graph`]: graphs, standard families, classification, isomorph-free
//!   enumeration and graph6 I/O.
//! - [`zlinalg`]: exact integer matrices, Smith and Hermite normal forms,
//!   ranks modulo primes and lattice membership.
//! - [`groups`]: permutation groups, Schreier–Sims, built-in families,
//!   derived subgroups and abelianization.
//! - [`power`]: `G^M`, `G^Γ`, the commutator chain and RA indices.
//! - [`ra`]: activation and RA matrices, the RA verdict, Heisenberg criteria,
//!   structural hints and the small-graph census.
//! - [`solver`]: explicit click vectors for abelian targets.

pub mod error;
pub mod graph;
pub mod groups;
pub mod power;
pub mod ra;
pub mod solver;
pub mod zlinalg;

pub use error::{Error, ErrorFamily, Result};
pub use graph::Graph;
pub use groups::{FiniteGroup, GroupSpec, Perm, PermGroup};
pub use zlinalg::IntMat;
