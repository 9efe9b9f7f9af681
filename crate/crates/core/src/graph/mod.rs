//! Finite simple undirected graphs.
//!
//! A [`Graph`] is immutable once built. Vertices are always `0..n`; optional
//! labels are carried for display only.

mod canon;
mod classify;
mod export;
mod families;
mod graph6;

pub use canon::{
    canonical_certificate, enumerate_connected_graphs, Certificate, MAX_ENUMERATION_ORDER,
};
pub use classify::{Classification, Girth};
pub use export::JsonGraph;
pub use families::{parse_graph_term, Family};

use std::collections::BTreeSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Repeating an edge, in either orientation, is rejected with
    /// [`Error::DuplicateEdge`]; use [`Graph::from_edges_dedup`] to accept
    /// repeats idempotently.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(n, edges, false)
    }

    /// Like [`Graph::new`] but silently ignores repeated edges.
    pub fn from_edges_dedup(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(n, edges, true)
    }

    fn build(n: usize, edges: &[(usize, usize)], dedup: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut g = Graph {
            n,
            adj: vec![false; n * n],
            labels: None,
        };
        for &(a, b) in edges {
            for idx in [a, b] {
                if idx >= n {
                    return Err(Error::IndexOutOfRange { index: idx, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoopRejected(a));
            }
            if g.adj[a * n + b] {
                if dedup {
                    continue;
                }
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
            g.adj[a * n + b] = true;
            g.adj[b * n + a] = true;
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(n: usize, adj: Vec<bool>) -> Self {
        debug_assert_eq!(adj.len(), n * n);
        Graph {
            n,
            adj,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| self.adj[v * self.n + w])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    /// Edges as pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.is_adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `B(v)`: the vertex together with its neighbors.
    pub fn closed_neighborhood(&self, v: usize) -> Result<BTreeSet<usize>> {
        if v >= self.n {
            return Err(Error::IndexOutOfRange { index: v, n: self.n });
        }
        Ok(self.closed_row(v).collect())
    }

    pub(crate) fn closed_row(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| w == v || self.adj[v * self.n + w])
    }

    /// 0/1 indicator of `B(v)`.
    pub fn closed_indicator(&self, v: usize) -> Vec<bool> {
        (0..self.n)
            .map(|w| w == v || self.is_adjacent(v, w))
            .collect()
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        (0..self.n)
            .filter(|&w| self.is_adjacent(u, w) && self.is_adjacent(v, w))
            .count()
    }

    /// Induced subgraph on `keep` (in the given order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let m = keep.len();
        let mut adj = vec![false; m * m];
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate() {
                adj[a * m + b] = self.is_adjacent(u, v);
            }
        }
        Graph {
            n: m,
            adj,
            labels: self
                .labels
                .as_ref()
                .map(|l| keep.iter().map(|&v| l[v].clone()).collect()),
        }
    }

    /// `Γ − j`.
    pub fn remove_vertex(&self, j: usize) -> Result<Graph> {
        if j >= self.n {
            return Err(Error::IndexOutOfRange { index: j, n: self.n });
        }
        if self.n == 1 {
            return Err(Error::InvalidParameter(
                "cannot delete the only vertex".into(),
            ));
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| v != j).collect();
        Ok(self.induced(&keep))
    }

    /// Disjoint union, with `other`'s vertices shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(a, b)| (a + self.n, b + self.n)));
        Graph::new(n, &edges).expect("union of valid graphs is valid")
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                adj[perm[u] * n + perm[v]] = self.adj[u * n + v];
            }
        }
        Graph {
            n,
            adj,
            labels: None,
        }
    }

    /// Pairs `i < j` with `B(i) = B(j)`.
    pub fn indistinguishable_pairs(&self) -> Vec<(usize, usize)> {
        let rows: Vec<Vec<bool>> = (0..self.n).map(|v| self.closed_indicator(v)).collect();
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if rows[i] == rows[j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_neighborhood_distinguishable(&self) -> bool {
        self.indistinguishable_pairs().is_empty()
    }

    /// Deletes one vertex of an indistinguishable pair until none remain.
    ///
    /// The surviving vertex of each pair is the lower index; the result is
    /// well defined up to isomorphism whichever pair is handled first.
    pub fn reduce_indistinguishable(&self) -> Graph {
        let mut g = self.clone();
        while let Some(&(_, j)) = g.indistinguishable_pairs().first() {
            g = g.remove_vertex(j).expect("n >= 2 when a pair exists");
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// BFS distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::IndexOutOfRange { index: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoopRejected(1)));
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(Graph::from_edges_dedup(3, &[(0, 1), (1, 0)]).is_ok());
        assert!(Graph::new(0, &[]).is_err());
    }

    #[test]
    fn small_constructions() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);
    }

    #[test]
    fn closed_neighborhoods() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            c4.closed_neighborhood(0).unwrap(),
            BTreeSet::from([0, 1, 3])
        );
        let k4 = Family::Complete(4).build().unwrap();
        for v in 0..4 {
            assert_eq!(k4.closed_neighborhood(v).unwrap().len(), 4);
        }
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(k1.closed_neighborhood(0).unwrap(), BTreeSet::from([0]));
        assert!(matches!(
            k1.closed_neighborhood(1),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn reduce_examples() {
        let k4 = Family::Complete(4).build().unwrap();
        assert_eq!(k4.reduce_indistinguishable().order(), 1);
        let c5 = Family::Cycle(5).build().unwrap();
        assert_eq!(c5.reduce_indistinguishable(), c5);
        let c4 = Family::CompleteBipartite(2, 2).build().unwrap();
        let r = c4.reduce_indistinguishable();
        assert_eq!(r.order(), 4);
        assert!(r.is_neighborhood_distinguishable());
    }

    #[test]
    fn components_of_union() {
        let g = Family::Path(3)
            .build()
            .unwrap()
            .disjoint_union(&Family::Cycle(4).build().unwrap());
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4, 5, 6]]);
        assert!(!g.is_connected());
    }
}
