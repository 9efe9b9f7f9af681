use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Standard graph families and their vertex conventions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family", content = "params")]
pub enum Family {
    /// `P_n`, vertices `0..n` in order.
    Path(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// `K_n`.
    Complete(usize),
    /// `K_{m,n}`: parts `0..m` and `m..m+n`.
    CompleteBipartite(usize, usize),
    /// `St_n = K_{1,n}` with `n + 1` vertices, center 0.
    Star(usize),
    /// `Q_d`: `d`-bit strings in binary order, adjacent when they differ in one bit.
    Hypercube(usize),
    /// `Q_{d-1}` plus the antipodal edges, `2^{d-1}` vertices.
    FoldedCube(usize),
    /// `W_n` on `n` vertices: rim `0..n-1` and hub `n-1`.
    Wheel(usize),
    /// `m x k` grid, vertex `(r, c)` is `r * k + c`.
    Grid(usize, usize),
    /// `T_{m,k}`: `C_m` on `0..m` with a pendant path of `k` vertices at vertex 0.
    Tadpole(usize, usize),
    Petersen,
    /// Triangles `{i, i+1, i+2}` for consecutive vertices, `n >= 3`.
    TriangleStrip(usize),
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// Cube dimension bound: keeps `2^d` vertices addressable and dense storage sane.
const MAX_CUBE_DIM: usize = 12;

impl Family {
    pub fn build(self) -> Result<Graph> {
        use Family::*;
        let mut edges = Vec::new();
        let n = match self {
            Path(n) => {
                need(n >= 1, || "path needs n >= 1".into())?;
                edges.extend((1..n).map(|i| (i - 1, i)));
                n
            }
            Cycle(n) => {
                need(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
                edges.extend((0..n).map(|i| (i, (i + 1) % n)));
                n
            }
            Complete(n) => {
                need(n >= 1, || "complete graph needs n >= 1".into())?;
                for i in 0..n {
                    edges.extend((i + 1..n).map(|j| (i, j)));
                }
                n
            }
            CompleteBipartite(m, k) => {
                need(m >= 1 && k >= 1, || "complete bipartite needs m, n >= 1".into())?;
                for i in 0..m {
                    edges.extend((m..m + k).map(|j| (i, j)));
                }
                m + k
            }
            Star(k) => {
                need(k >= 1, || "star needs n >= 1".into())?;
                edges.extend((1..=k).map(|j| (0, j)));
                k + 1
            }
            Hypercube(d) => {
                need(d <= MAX_CUBE_DIM, || format!("hypercube dimension {d} > {MAX_CUBE_DIM}"))?;
                let n = 1usize << d;
                for v in 0..n {
                    for b in 0..d {
                        let w = v ^ (1 << b);
                        if v < w {
                            edges.push((v, w));
                        }
                    }
                }
                n
            }
            FoldedCube(d) => {
                need(d >= 2, || format!("folded cube needs d >= 2, got {d}"))?;
                need(d - 1 <= MAX_CUBE_DIM, || format!("folded cube dimension {d} too large"))?;
                let n = 1usize << (d - 1);
                let mask = n - 1;
                for v in 0..n {
                    for b in 0..d - 1 {
                        let w = v ^ (1 << b);
                        if v < w {
                            edges.push((v, w));
                        }
                    }
                    let w = v ^ mask;
                    if v < w {
                        edges.push((v, w));
                    }
                }
                // d = 2: the antipodal edge repeats the single cube edge.
                return Graph::from_edges_dedup(n, &edges);
            }
            Wheel(n) => {
                need(n >= 4, || format!("wheel needs n >= 4, got {n}"))?;
                let rim = n - 1;
                edges.extend((0..rim).map(|i| (i, (i + 1) % rim)));
                edges.extend((0..rim).map(|i| (i, rim)));
                n
            }
            Grid(m, k) => {
                need(m >= 1 && k >= 1, || "grid needs m, k >= 1".into())?;
                for r in 0..m {
                    for c in 0..k {
                        let v = r * k + c;
                        if c + 1 < k {
                            edges.push((v, v + 1));
                        }
                        if r + 1 < m {
                            edges.push((v, v + k));
                        }
                    }
                }
                m * k
            }
            Tadpole(m, k) => {
                need(m >= 3, || format!("tadpole cycle needs m >= 3, got {m}"))?;
                edges.extend((0..m).map(|i| (i, (i + 1) % m)));
                let mut prev = 0;
                for t in 0..k {
                    edges.push((prev, m + t));
                    prev = m + t;
                }
                m + k
            }
            Petersen => {
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                    edges.push((i + 5, (i + 2) % 5 + 5));
                }
                10
            }
            TriangleStrip(n) => {
                need(n >= 3, || format!("triangle strip needs n >= 3, got {n}"))?;
                edges.extend((1..n).map(|i| (i - 1, i)));
                edges.extend((2..n).map(|i| (i - 2, i)));
                n
            }
        };
        Graph::new(n, &edges)
    }

    /// Builds a family from a name and integer parameters, as used on the
    /// command line (`cycle 5`, `grid 2 3`, `petersen`).
    pub fn from_name(name: &str, params: &[usize]) -> Result<Family> {
        let arity = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::parse(
                    name,
                    format!("expects {k} parameter(s), got {}", params.len()),
                ))
            }
        };
        let lower = name.to_ascii_lowercase();
        let fam = match lower.as_str() {
            "path" => {
                arity(1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(params[0])
            }
            "complete" => {
                arity(1)?;
                Family::Complete(params[0])
            }
            "complete_bipartite" | "bipartite" => {
                arity(2)?;
                Family::CompleteBipartite(params[0], params[1])
            }
            "star" => {
                arity(1)?;
                Family::Star(params[0])
            }
            "hypercube" | "cube" => {
                arity(1)?;
                Family::Hypercube(params[0])
            }
            "folded_cube" => {
                arity(1)?;
                Family::FoldedCube(params[0])
            }
            "wheel" => {
                arity(1)?;
                Family::Wheel(params[0])
            }
            "grid" => {
                arity(2)?;
                Family::Grid(params[0], params[1])
            }
            "tadpole" => {
                arity(2)?;
                Family::Tadpole(params[0], params[1])
            }
            "petersen" => {
                arity(0)?;
                Family::Petersen
            }
            "triangle_strip" => {
                arity(1)?;
                Family::TriangleStrip(params[0])
            }
            _ => return Err(Error::parse(name, "unknown graph family")),
        };
        Ok(fam)
    }
}

fn parse_num(token: &str, s: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| Error::parse(token, format!("`{s}` is not a nonnegative integer")))
}

fn parse_pair(token: &str, s: &str, sep: char) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once(sep)
        .ok_or_else(|| Error::parse(token, format!("expected two numbers separated by `{sep}`")))?;
    Ok((parse_num(token, a)?, parse_num(token, b)?))
}

/// Parses a compact graph term.
///
/// Accepted forms: `P5`, `C5`, `K4`, `K2,3`, `St3`, `Q3`, `FQ5` (folded
/// cube), `W6`, `Grid2x3`, `T4,1` (tadpole), `Tri6` (triangle strip),
/// `Petersen`, and `g6:<graph6>` for explicit graphs.
pub fn parse_graph_term(term: &str) -> Result<Graph> {
    let t = term.trim();
    if let Some(rest) = t.strip_prefix("g6:") {
        return Graph::from_graph6(rest);
    }
    if t.eq_ignore_ascii_case("petersen") {
        return Family::Petersen.build();
    }
    let prefixes: [(&str, fn(&str, &str) -> Result<Family>); 10] = [
        ("Grid", |tok, r| {
            let (m, k) = parse_pair(tok, r, 'x')?;
            Ok(Family::Grid(m, k))
        }),
        ("Tri", |tok, r| Ok(Family::TriangleStrip(parse_num(tok, r)?))),
        ("St", |tok, r| Ok(Family::Star(parse_num(tok, r)?))),
        ("FQ", |tok, r| Ok(Family::FoldedCube(parse_num(tok, r)?))),
        ("P", |tok, r| Ok(Family::Path(parse_num(tok, r)?))),
        ("C", |tok, r| Ok(Family::Cycle(parse_num(tok, r)?))),
        ("K", |tok, r| {
            if r.contains(',') {
                let (m, k) = parse_pair(tok, r, ',')?;
                Ok(Family::CompleteBipartite(m, k))
            } else {
                Ok(Family::Complete(parse_num(tok, r)?))
            }
        }),
        ("Q", |tok, r| Ok(Family::Hypercube(parse_num(tok, r)?))),
        ("W", |tok, r| Ok(Family::Wheel(parse_num(tok, r)?))),
        ("T", |tok, r| {
            let (m, k) = parse_pair(tok, r, ',')?;
            Ok(Family::Tadpole(m, k))
        }),
    ];
    for (prefix, ctor) in prefixes {
        if let Some(rest) = t.strip_prefix(prefix) {
            if rest.starts_with(|c: char| c.is_ascii_digit()) {
                return ctor(t, rest)?.build();
            }
        }
    }
    Err(Error::parse(t, "unrecognized graph term"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_certificate;

    #[test]
    fn star_and_small_sizes() {
        let st3 = Family::Star(3).build().unwrap();
        assert_eq!(st3.order(), 4);
        assert_eq!(st3.degree(0), 3);
        assert_eq!(Family::Tadpole(4, 1).build().unwrap().order(), 5);
        assert_eq!(Family::Wheel(5).build().unwrap().edge_count(), 8);
        assert_eq!(Family::Petersen.build().unwrap().edge_count(), 15);
        assert_eq!(Family::TriangleStrip(5).build().unwrap().edge_count(), 7);
    }

    #[test]
    fn hypercube_matches_reference_listing() {
        // 1-indexed adjacency list of the 3-cube from the GAP reference code.
        let listing: [[usize; 3]; 8] = [
            [2, 4, 5],
            [1, 3, 6],
            [2, 4, 7],
            [1, 3, 8],
            [1, 6, 8],
            [2, 5, 7],
            [3, 6, 8],
            [4, 5, 7],
        ];
        let mut edges = Vec::new();
        for (i, nbrs) in listing.iter().enumerate() {
            for &j in nbrs {
                if i < j - 1 {
                    edges.push((i, j - 1));
                }
            }
        }
        let reference = Graph::new(8, &edges).unwrap();
        let q3 = Family::Hypercube(3).build().unwrap();
        assert_eq!(q3.edge_count(), 12);
        assert_eq!(canonical_certificate(&q3), canonical_certificate(&reference));
        // binary order: 000 ~ 001, 010, 100
        assert_eq!(q3.neighbors(0).collect::<Vec<_>>(), vec![1, 2, 4]);
    }

    #[test]
    fn folded_cubes() {
        let k2 = Family::FoldedCube(2).build().unwrap();
        assert_eq!(k2, Family::Complete(2).build().unwrap());
        let k4 = Family::FoldedCube(3).build().unwrap();
        assert_eq!(k4, Family::Complete(4).build().unwrap());
        let f5 = Family::FoldedCube(5).build().unwrap();
        assert_eq!(f5.order(), 16);
        assert!((0..16).all(|v| f5.degree(v) == 5));
    }

    #[test]
    fn invalid_parameters() {
        assert!(matches!(
            Family::Cycle(2).build(),
            Err(Error::InvalidParameter(_))
        ));
        assert!(Family::Wheel(3).build().is_err());
        assert!(Family::FoldedCube(1).build().is_err());
        assert!(Family::Path(0).build().is_err());
    }

    #[test]
    fn graph_terms() {
        assert_eq!(parse_graph_term("C4").unwrap(), Family::Cycle(4).build().unwrap());
        assert_eq!(
            parse_graph_term("K2,3").unwrap(),
            Family::CompleteBipartite(2, 3).build().unwrap()
        );
        assert_eq!(
            parse_graph_term("Grid2x3").unwrap(),
            Family::Grid(2, 3).build().unwrap()
        );
        assert_eq!(
            parse_graph_term("T4,1").unwrap(),
            Family::Tadpole(4, 1).build().unwrap()
        );
        assert_eq!(parse_graph_term("St3").unwrap().order(), 4);
        assert_eq!(parse_graph_term("FQ5").unwrap().order(), 16);
        assert_eq!(parse_graph_term("g6:Cr").unwrap().order(), 4);
        match parse_graph_term("Z9") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "Z9"),
            other => panic!("{other:?}"),
        }
        match parse_graph_term("Cx") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "Cx"),
            other => panic!("{other:?}"),
        }
    }
}
