use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::Result;

/// JSON adjacency exchange form: `{"n": 4, "edges": [[0, 1], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonGraph {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Graph> for JsonGraph {
    fn from(g: &Graph) -> Self {
        JsonGraph {
            n: g.order(),
            edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
            labels: g.labels().map(|l| l.to_vec()),
        }
    }
}

impl TryFrom<JsonGraph> for Graph {
    type Error = crate::Error;

    fn try_from(j: JsonGraph) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        let g = Graph::new(j.n, &edges)?;
        match j.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&JsonGraph::from(self)).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let j: JsonGraph = serde_json::from_str(text)
            .map_err(|e| crate::Error::parse(text.chars().take(40).collect::<String>(), e.to_string()))?;
        Graph::try_from(j)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.order() {
            let _ = writeln!(s, "  {v} [label=\"{}\"];", self.label(v));
        }
        for (a, b) in self.edges() {
            let _ = writeln!(s, "  {a} -- {b};");
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn json_round_trip() {
        let q3 = Family::Hypercube(3).build().unwrap();
        let text = q3.to_json();
        assert!(text.starts_with("{\"n\":8,\"edges\":[[0,1]"));
        assert_eq!(Graph::from_json(&text).unwrap(), q3);
        assert!(Graph::from_json("{\"n\":2,\"edges\":[[0,0]]}").is_err());
        assert!(Graph::from_json("{\"n\":2").is_err());
    }

    #[test]
    fn dot_lists_edges() {
        let dot = Family::Path(3).build().unwrap().to_dot();
        assert!(dot.contains("0 -- 1;") && dot.contains("1 -- 2;"));
    }
}
