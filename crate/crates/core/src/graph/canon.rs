//! Canonical labeling and isomorph-free enumeration of small graphs.
//!
//! Canonical forms come from individualization–refinement: the vertex
//! partition is refined to an equitable one (cells ordered by isomorphism
//! invariant keys), non-singleton cells are split by individualizing each of
//! their vertices in turn, and the lexicographically smallest upper-triangle
//! adjacency string over all discrete leaves is the certificate.

use std::collections::BTreeMap;

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`enumerate_connected_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Upper-triangle adjacency bits of a canonically relabeled graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate {
    n: usize,
    words: Vec<u64>,
}

fn certificate_for(g: &Graph, order: &[usize]) -> Certificate {
    // order[i] = old vertex placed at position i
    let n = g.order();
    let bits = n * (n.saturating_sub(1)) / 2;
    let mut words = vec![0u64; bits.div_ceil(64).max(1)];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            // Most significant first so that Vec<u64> ordering is lexicographic.
            if g.is_adjacent(order[i], order[j]) {
                words[k / 64] |= 1u64 << (63 - (k % 64));
            }
            k += 1;
        }
    }
    Certificate { n, words }
}

fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.order();
    loop {
        let mut cell_of = vec![0usize; n];
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0usize; cells.len()];
                    for w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(Certificate, Vec<usize>)>) {
    let cells = refine(g, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let cert = certificate_for(g, &order);
            if best.as_ref().is_none_or(|(b, _)| cert < *b) {
                *best = Some((cert, order));
            }
        }
        Some(target) => {
            for &v in &cells[target] {
                let mut split = cells[..target].to_vec();
                split.push(vec![v]);
                split.push(cells[target].iter().copied().filter(|&w| w != v).collect());
                split.extend_from_slice(&cells[target + 1..]);
                search(g, split, best);
            }
        }
    }
}

fn canonical(g: &Graph) -> (Certificate, Vec<usize>) {
    let mut best = None;
    search(g, vec![(0..g.order()).collect()], &mut best);
    best.expect("a graph has at least one vertex")
}

/// Isomorphism-invariant certificate: equal iff the graphs are isomorphic.
pub fn canonical_certificate(g: &Graph) -> Certificate {
    canonical(g).0
}

impl Graph {
    /// The canonically relabeled copy of this graph.
    pub fn canonical_form(&self) -> Graph {
        let (_, order) = canonical(self);
        let mut perm = vec![0; self.order()];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        self.permuted(&perm)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.order() == other.order()
            && self.edge_count() == other.edge_count()
            && canonical_certificate(self) == canonical_certificate(other)
    }
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, each in canonical form, sorted by certificate.
///
/// Every connected graph on `n >= 2` vertices has a non-cut vertex, so the
/// classes are reached by attaching a new vertex to a nonempty subset of a
/// connected parent on `n - 1` vertices.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::LimitExceeded(format!(
            "enumeration supports n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    let mut level = vec![Graph::new(1, &[]).unwrap()];
    for k in 2..=n {
        let mut seen: BTreeMap<Certificate, Graph> = BTreeMap::new();
        for parent in &level {
            let m = k - 1;
            for mask in 1u32..(1 << m) {
                let mut adj = vec![false; k * k];
                for u in 0..m {
                    for v in 0..m {
                        adj[u * k + v] = parent.is_adjacent(u, v);
                    }
                    if mask & (1 << u) != 0 {
                        adj[u * k + m] = true;
                        adj[m * k + u] = true;
                    }
                }
                let child = Graph::from_adjacency(k, adj);
                let (cert, _) = canonical(&child);
                seen.entry(cert).or_insert_with(|| child.canonical_form());
            }
        }
        level = seen.into_values().collect();
    }
    Ok(level)
}
