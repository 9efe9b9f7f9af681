//! `glo`: graph powers, elementary divisors, RA verdicts and abelian solving
//! from the command line.
//!
//! Exit codes: 0 success, 2 input error, 3 capacity exceeded, 4 internal
//! consistency failure.

mod input;

use std::fs;
use std::io::Write;
use std::process::{Command, ExitCode};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use glo_core::graph::{Classification, Family};
use glo_core::power::{power_report, PowerOptions};
use glo_core::ra::{activation_matrix, census, is_ra, parse_bfile, ra_matrix, Census, RaVerdict};
use glo_core::solver::{apply_clicks, solve, AbelianState, Moduli, SolveOutcome};
use glo_core::zlinalg::elementary_divisors;
use glo_core::{Error, ErrorFamily, FiniteGroup, Graph, Result};

#[derive(Parser)]
#[command(name = "glo", version, about = "Group-valued Lights Out: graph powers and RA verdicts")]
struct Cli {
    /// Largest subgroup order built before giving up, or `none`.
    #[arg(long, global = true, env = "GLO_CAPACITY_CAP", default_value = "1073741824")]
    cap: String,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build or inspect graphs.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Elementary divisors of the activation matrix or the RA matrix.
    Eldivs {
        graph: String,
        #[arg(long, value_enum, default_value = "activation")]
        matrix: MatrixKind,
        /// Emit JSON instead of exponent notation.
        #[arg(long)]
        json: bool,
    },
    /// RA verdicts, graph powers and the census.
    #[command(subcommand)]
    Ra(RaCmd),
    /// Solve an abelian instance: find clicks reaching a target state.
    Solve {
        graph: String,
        /// Comma list of cyclic moduli, or `Z`.
        #[arg(long)]
        moduli: String,
        /// JSON `{"vertex": [exponents]}` or `e0,e1,...` for one modulus.
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value = "json")]
        format: SolveFormat,
    },
    /// Download an OEIS b-file with curl (network; not used by tests).
    OeisFetch {
        #[arg(long, default_value = "A004108")]
        id: String,
        #[arg(long)]
        out: String,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Build a named family, e.g. `cycle 5`, `grid 5 5`, `petersen`.
    Gen {
        family: String,
        params: Vec<usize>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
    },
    /// Girth, distinguishability, square completion and degrees.
    Classify { graph: String },
}

#[derive(Subcommand)]
enum RaCmd {
    /// Decide RA for a connected, neighborhood-distinguishable graph.
    Check {
        graph: String,
        /// Split into components and merge indistinguishable vertices first.
        #[arg(long)]
        reduce: bool,
    },
    /// RA index of the graph power for one group.
    Gra {
        graph: String,
        #[arg(long)]
        group: String,
    },
    /// All five orders of the commutator chain.
    Chain {
        graph: String,
        #[arg(long)]
        group: String,
    },
    /// Every connected distinguishable graph up to `--max-n` vertices.
    Census {
        #[arg(long)]
        max_n: usize,
        /// Permit `--max-n 8` (slow).
        #[arg(long)]
        allow_eight: bool,
        /// Local OEIS b-file to compare distinguishable counts against.
        #[arg(long)]
        oeis: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: CensusFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    Activation,
    Ra,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusFormat {
    Csv,
    Json,
    Counts,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveFormat {
    Json,
    Text,
}

fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("plain data serializes")
}

fn options(cap: &str) -> Result<PowerOptions> {
    Ok(PowerOptions {
        capacity: input::read_cap(cap)?,
        ..PowerOptions::default()
    })
}

fn graph_cmd(cmd: GraphCmd) -> Result<String> {
    match cmd {
        GraphCmd::Gen { family, params, format } => {
            let g = Family::from_name(&family, &params)?.build()?;
            Ok(match format {
                GraphFormat::Graph6 => g.to_graph6(),
                GraphFormat::Dot => g.to_dot(),
                GraphFormat::Json => g.to_json(),
            })
        }
        GraphCmd::Classify { graph } => {
            #[derive(Serialize)]
            struct Record {
                graph6: String,
                #[serde(flatten)]
                class: Classification,
            }
            let g = input::read_graph(&graph)?;
            Ok(to_json(&Record {
                graph6: g.to_graph6(),
                class: g.classify(),
            }))
        }
    }
}

fn eldivs_cmd(graph: &str, matrix: MatrixKind, as_json: bool) -> Result<String> {
    let g = input::read_graph(graph)?;
    let (name, m) = match matrix {
        MatrixKind::Activation => ("activation", activation_matrix(&g)),
        MatrixKind::Ra => ("ra", ra_matrix(&g)),
    };
    let d = elementary_divisors(&m);
    if !as_json {
        return Ok(d.to_string());
    }
    Ok(to_json(&json!({
        "graph6": g.to_graph6(),
        "matrix": name,
        "divisors": d,
        "notation": d.to_string(),
    })))
}

#[derive(Serialize)]
struct ReducedPart {
    vertices: Vec<usize>,
    reduced_graph6: String,
    verdict: RaVerdict,
}

fn check_cmd(graph: &str, reduce: bool) -> Result<String> {
    let g = input::read_graph(graph)?;
    if !reduce {
        return Ok(to_json(&is_ra(&g)?));
    }
    // The power of a disjoint union is the product of the powers, and
    // merging a vertex into its twin leaves the verdict unchanged.
    let parts = g
        .components()
        .into_iter()
        .map(|vs| {
            let r = g.induced(&vs).reduce_indistinguishable();
            Ok(ReducedPart {
                reduced_graph6: r.to_graph6(),
                verdict: is_ra(&r)?,
                vertices: vs,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let ra = parts.iter().all(|p| p.verdict.ra);
    Ok(to_json(&json!({
        "graph6": g.to_graph6(),
        "reduced": true,
        "ra": ra,
        "components": parts,
    })))
}

fn power_cmd(graph: &str, group: &str, chain: bool, cap: &str) -> Result<String> {
    let g = input::read_graph(graph)?;
    let grp = FiniteGroup::parse(group)?;
    let opts = options(cap)?;
    match power_report(&grp, &g, chain, &opts) {
        Ok(r) => Ok(to_json(&r)),
        Err(e @ Error::CapacityExceeded { .. }) => {
            let ambient = grp.order().pow(g.order() as u32);
            eprintln!("predicted order bound |G|^n = {ambient}");
            Err(e)
        }
        Err(e) => Err(e),
    }
}

#[derive(Serialize)]
struct OeisLine {
    n: u64,
    computed: usize,
    bfile: String,
    matches: bool,
}

fn oeis_compare(c: &Census, path: &str) -> Result<Vec<OeisLine>> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse {
        token: path.to_string(),
        reason: e.to_string(),
    })?;
    let b = parse_bfile(&text)?;
    Ok(c.counts
        .iter()
        .filter_map(|row| {
            let v = b.get(&(row.n as u64))?;
            Some(OeisLine {
                n: row.n as u64,
                computed: row.distinguishable,
                bfile: v.to_string(),
                matches: *v == BigInt::from(row.distinguishable),
            })
        })
        .collect())
}

fn census_cmd(max_n: usize, allow_eight: bool, oeis: Option<String>, format: CensusFormat) -> Result<String> {
    let c = census(max_n, allow_eight)?;
    let cross = oeis.map(|p| oeis_compare(&c, &p)).transpose()?;
    if let Some(lines) = &cross {
        for l in lines {
            let verdict = if l.matches { "match" } else { "MISMATCH" };
            eprintln!("oeis n={}: computed {} b-file {} {verdict}", l.n, l.computed, l.bfile);
        }
        if lines.is_empty() {
            eprintln!("oeis: no overlapping indices");
        }
    }
    let line = |f: &dyn Fn(&glo_core::ra::CensusCounts) -> usize| {
        c.counts.iter().map(|r| f(r).to_string()).collect::<Vec<_>>().join(",")
    };
    Ok(match format {
        CensusFormat::Csv => c.to_csv().trim_end().to_string(),
        CensusFormat::Json => to_json(&json!({ "census": c, "oeis": cross })),
        CensusFormat::Counts => [
            format!("n: {}", line(&|r| r.n)),
            format!("connected: {}", line(&|r| r.connected)),
            format!("distinguishable: {}", line(&|r| r.distinguishable)),
            format!("full_lattice: {}", line(&|r| r.full_lattice)),
            format!("ra: {}", line(&|r| r.ra)),
        ]
        .join("\n"),
    })
}

fn schedule(g: &Graph, clicks: &[Vec<i64>]) -> Vec<String> {
    (0..g.order())
        .filter(|&v| clicks.iter().any(|c| c[v] != 0))
        .map(|v| {
            let parts: Vec<String> = clicks
                .iter()
                .enumerate()
                .filter(|(_, c)| c[v] != 0)
                .map(|(a, c)| format!("g{a}^{}", c[v]))
                .collect();
            format!("{}: {}", g.label(v), parts.join(" "))
        })
        .collect()
}

fn reduced(s: &AbelianState, moduli: &Moduli) -> Vec<Vec<i64>> {
    s.exponents
        .iter()
        .map(|e| {
            e.iter()
                .enumerate()
                .map(|(a, &x)| match moduli {
                    Moduli::Integers => x,
                    Moduli::Cyclic(r) => x.rem_euclid(r[a] as i64),
                })
                .collect()
        })
        .collect()
}

fn explain(out: &SolveOutcome, target: &AbelianState) -> Option<String> {
    let SolveOutcome::Unsolvable { factor, vertex, obstruction } = out else {
        return None;
    };
    let mut s = format!("no click vector reaches the target in factor {factor}; first obstructed vertex {vertex}");
    if let Some(o) = obstruction {
        let value: i64 = o
            .functional
            .iter()
            .zip(&target.exponents)
            .map(|(w, e)| w * e[*factor])
            .sum();
        let w: Vec<String> = o.functional.iter().map(|x| x.to_string()).collect();
        s.push_str(&format!(
            "; w = ({}) annihilates every click row mod {} but w·t = {value}",
            w.join(", "),
            o.modulus
        ));
        if o.modulus > 0 && o.functional.windows(2).all(|p| p[0] == p[1]) {
            s.push_str(&format!(
                " (reachable states have coordinate sum divisible by {})",
                o.modulus
            ));
        }
    }
    Some(s)
}

fn solve_cmd(graph: &str, moduli: &str, target: &str, format: SolveFormat) -> Result<String> {
    let g = input::read_graph(graph)?;
    let m = input::read_moduli(moduli)?;
    let t = input::read_state(target, g.order(), m.factor_count())?;
    let out = solve(&g, &m, &t)?;
    if let SolveOutcome::Solved { clicks } = &out {
        if reduced(&apply_clicks(&g, &m, clicks), &m) != reduced(&t, &m) {
            return Err(Error::Internal("solver clicks do not reproduce the target".into()));
        }
    }
    let why = explain(&out, &t);
    let sched = match &out {
        SolveOutcome::Solved { clicks } => schedule(&g, clicks),
        SolveOutcome::Unsolvable { .. } => Vec::new(),
    };
    match format {
        SolveFormat::Json => {
            let mut v = serde_json::to_value(&out).expect("plain data serializes");
            let obj = v.as_object_mut().expect("tagged enum is an object");
            obj.insert("graph6".into(), Value::String(g.to_graph6()));
            obj.insert("moduli".into(), serde_json::to_value(&m).unwrap());
            if out.is_solved() {
                obj.insert("schedule".into(), json!(sched));
            }
            if let Some(w) = why {
                obj.insert("explanation".into(), Value::String(w));
            }
            Ok(to_json(&v))
        }
        SolveFormat::Text => Ok(match why {
            None if sched.is_empty() => "SOLVED (no clicks needed)".into(),
            None => format!("SOLVED\n{}", sched.join("\n")),
            Some(w) => format!("UNSOLVABLE: {w}"),
        }),
    }
}

fn fetch_cmd(id: &str, out: &str) -> Result<String> {
    let digits = id.trim_start_matches(['A', 'a']);
    let url = format!("https://oeis.org/{id}/b{digits}.txt");
    let status = Command::new("curl")
        .args(["-fsSL", "-o", out, &url])
        .status()
        .map_err(|e| Error::Parse {
            token: "curl".into(),
            reason: e.to_string(),
        })?;
    if !status.success() {
        return Err(Error::Parse {
            token: url,
            reason: format!("download failed ({status})"),
        });
    }
    Ok(format!("saved {url} to {out}"))
}

fn run(cli: Cli) -> Result<String> {
    match cli.cmd {
        Cmd::Graph(c) => graph_cmd(c),
        Cmd::Eldivs { graph, matrix, json } => eldivs_cmd(&graph, matrix, json),
        Cmd::Ra(RaCmd::Check { graph, reduce }) => check_cmd(&graph, reduce),
        Cmd::Ra(RaCmd::Gra { graph, group }) => power_cmd(&graph, &group, false, &cli.cap),
        Cmd::Ra(RaCmd::Chain { graph, group }) => power_cmd(&graph, &group, true, &cli.cap),
        Cmd::Ra(RaCmd::Census {
            max_n,
            allow_eight,
            oeis,
            format,
        }) => census_cmd(max_n, allow_eight, oeis, format),
        Cmd::Solve {
            graph,
            moduli,
            target,
            format,
        } => solve_cmd(&graph, &moduli, &target, format),
        Cmd::OeisFetch { id, out } => fetch_cmd(&id, &out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(s) => {
            let _ = writeln!(std::io::stdout(), "{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.family() {
                ErrorFamily::Input => 2,
                ErrorFamily::Capacity => 3,
                ErrorFamily::Internal => 4,
            })
        }
    }
}
