use std::fmt;

use serde::{Serialize, Serializer};

use super::Graph;

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub components: Vec<Vec<usize>>,
    pub girth: Girth,
    pub nbhd_distinguishable: bool,
    pub square_completion: bool,
    /// Nonincreasing.
    pub degree_sequence: Vec<usize>,
}

impl Graph {
    pub fn girth(&self) -> Girth {
        let mut best: Option<usize> = None;
        for s in 0..self.order() {
            // BFS with parent tracking; any non-tree edge closes a cycle
            // through the BFS tree of length dist[u] + dist[w] + 1.
            let mut dist = vec![usize::MAX; self.order()];
            let mut parent = vec![usize::MAX; self.order()];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best.map_or(Girth::Infinite, Girth::Finite)
    }

    /// Every path `u – v – w` (`u != w`) completes to a 4-cycle through a
    /// fourth vertex adjacent to both `u` and `w`. Triangles are treated as
    /// paths too, so a triangle with no such fourth vertex fails.
    pub fn has_square_completion(&self) -> bool {
        let n = self.order();
        for v in 0..n {
            let nb: Vec<usize> = self.neighbors(v).collect();
            for (a, &u) in nb.iter().enumerate() {
                for &w in &nb[a + 1..] {
                    let ok = (0..n).any(|z| {
                        z != u && z != v && z != w && self.is_adjacent(z, u) && self.is_adjacent(z, w)
                    });
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn classify(&self) -> Classification {
        let components = self.components();
        Classification {
            n: self.order(),
            edges: self.edge_count(),
            connected: components.len() == 1,
            components,
            girth: self.girth(),
            nbhd_distinguishable: self.is_neighborhood_distinguishable(),
            square_completion: self.has_square_completion(),
            degree_sequence: self.degree_sequence(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn girths() {
        assert_eq!(Family::Hypercube(3).build().unwrap().girth(), Girth::Finite(4));
        assert_eq!(Family::Path(5).build().unwrap().girth(), Girth::Infinite);
        assert_eq!(Family::Petersen.build().unwrap().girth(), Girth::Finite(5));
        assert_eq!(Family::Complete(4).build().unwrap().girth(), Girth::Finite(3));
        assert_eq!(Family::Cycle(7).build().unwrap().girth(), Girth::Finite(7));
        assert_eq!(Family::Tadpole(5, 2).build().unwrap().girth(), Girth::Finite(5));
        assert!(Girth::Infinite.at_least(5));
    }

    #[test]
    fn square_completion_examples() {
        for d in 2..=4 {
            assert!(Family::Hypercube(d).build().unwrap().has_square_completion());
        }
        assert!(Family::CompleteBipartite(2, 3).build().unwrap().has_square_completion());
        assert!(Family::CompleteBipartite(3, 3).build().unwrap().has_square_completion());
        assert!(!Family::Grid(2, 3).build().unwrap().has_square_completion());
        assert!(!Family::Grid(3, 4).build().unwrap().has_square_completion());
        assert!(!Family::Cycle(5).build().unwrap().has_square_completion());
    }

    #[test]
    fn classify_path() {
        let c = Family::Path(5).build().unwrap().classify();
        assert!(c.connected);
        assert_eq!(c.girth, Girth::Infinite);
        assert_eq!(c.degree_sequence, vec![2, 2, 2, 1, 1]);
        assert!(c.nbhd_distinguishable);
        assert!(!c.square_completion);
    }
}
