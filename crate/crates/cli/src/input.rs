//! Parsing of command-line graph, moduli and state arguments.

use std::collections::BTreeMap;
use std::fs;

use num_bigint::BigUint;

use glo_core::graph::parse_graph_term;
use glo_core::solver::{AbelianState, Moduli};
use glo_core::{Error, Graph, Result};

fn parse_err(token: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        token: token.to_string(),
        reason: reason.into(),
    }
}

/// A graph argument: a compact term (`C5`, `K2,3`, `g6:D~{`), inline JSON
/// (`{"n":3,"edges":[[0,1]]}`) or `@path` to a file holding either form.
pub fn read_graph(arg: &str) -> Result<Graph> {
    let arg = arg.trim();
    if let Some(path) = arg.strip_prefix('@') {
        let text = fs::read_to_string(path).map_err(|e| parse_err(arg, e.to_string()))?;
        let text = text.trim();
        if text.starts_with('{') {
            return Graph::from_json(text);
        }
        return Graph::from_graph6(text.lines().next().unwrap_or(""));
    }
    if arg.starts_with('{') {
        return Graph::from_json(arg);
    }
    parse_graph_term(arg)
}

/// `Z` or a comma list of moduli, each at least 2.
pub fn read_moduli(arg: &str) -> Result<Moduli> {
    let arg = arg.trim();
    if arg.eq_ignore_ascii_case("z") {
        return Ok(Moduli::Integers);
    }
    let mut out = Vec::new();
    for tok in arg.split(',') {
        let r: u64 = tok
            .trim()
            .parse()
            .map_err(|_| parse_err(tok, "modulus must be an integer or `Z`"))?;
        if r < 2 {
            return Err(parse_err(tok, "modulus must be at least 2"));
        }
        out.push(r);
    }
    Ok(Moduli::Cyclic(out))
}

/// A target state on `n` vertices with `k` factors.
///
/// Either a JSON object `{"vertex": [e_1, ..., e_k], ...}` (missing
/// vertices are the identity; a bare number is accepted when `k = 1`), or a
/// comma string `e_0,e_1,...` for single-factor moduli.
pub fn read_state(arg: &str, n: usize, k: usize) -> Result<AbelianState> {
    let arg = arg.trim();
    if arg.starts_with('{') {
        let raw: BTreeMap<String, serde_json::Value> =
            serde_json::from_str(arg).map_err(|e| parse_err(arg, e.to_string()))?;
        let mut ex = vec![vec![0i64; k]; n];
        for (key, val) in raw {
            let v: usize = key
                .parse()
                .map_err(|_| parse_err(&key, "vertex key must be an index"))?;
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, n });
            }
            let entries: Vec<i64> = match &val {
                serde_json::Value::Number(x) if k == 1 => vec![x
                    .as_i64()
                    .ok_or_else(|| parse_err(&key, "exponent must be an integer"))?],
                serde_json::Value::Array(a) => a
                    .iter()
                    .map(|x| x.as_i64().ok_or_else(|| parse_err(&key, "exponent must be an integer")))
                    .collect::<Result<_>>()?,
                _ => return Err(parse_err(&key, "expected an exponent list")),
            };
            if entries.len() != k {
                return Err(Error::DimensionMismatch(format!(
                    "vertex {v} has {} exponents, moduli have {k} factors",
                    entries.len()
                )));
            }
            ex[v] = entries;
        }
        return Ok(AbelianState::new(ex));
    }
    if k != 1 {
        return Err(parse_err(arg, "comma targets need a single modulus; use JSON"));
    }
    let values: Vec<i64> = arg
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| parse_err(t, "exponent must be an integer")))
        .collect::<Result<_>>()?;
    if values.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "target has {} entries, graph has {n} vertices",
            values.len()
        )));
    }
    Ok(AbelianState::single(&values))
}

/// `none` or a decimal order.
pub fn read_cap(arg: &str) -> Result<Option<BigUint>> {
    if arg.eq_ignore_ascii_case("none") {
        return Ok(None);
    }
    arg.parse::<BigUint>()
        .map(Some)
        .map_err(|_| parse_err(arg, "capacity must be a positive integer or `none`"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_forms() {
        assert_eq!(read_graph("C4").unwrap().order(), 4);
        let j = read_graph(r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(j.edge_count(), 2);
        let g6 = read_graph("g6:Bw").unwrap();
        assert_eq!(g6.order(), 3);
        match read_graph("Z9") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "Z9"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn moduli_and_states() {
        assert_eq!(read_moduli("Z").unwrap(), Moduli::Integers);
        assert_eq!(read_moduli("2,3").unwrap(), Moduli::Cyclic(vec![2, 3]));
        assert!(read_moduli("1").is_err());
        let s = read_state(r#"{"1":[1,2]}"#, 3, 2).unwrap();
        assert_eq!(s.exponents, vec![vec![0, 0], vec![1, 2], vec![0, 0]]);
        assert_eq!(read_state("1,0,1", 3, 1).unwrap(), AbelianState::single(&[1, 0, 1]));
        assert!(read_state("1,0", 3, 1).is_err());
        assert!(read_state(r#"{"5":1}"#, 3, 1).is_err());
    }
}
