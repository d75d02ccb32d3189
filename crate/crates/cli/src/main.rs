//! `subcomp` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failed, 2 unreadable or malformed
//! input, 3 a resource ceiling was exceeded.

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use subcomp::bounds::{bounds_summary, BoundsSummary, VERTEX_COVER_MAX_ORDER};
use subcomp::forbidden::{find_minimal_forbidden, Invariant};
use subcomp::forest::{forest_path_cover, forest_system, path_cover_number, PathCover};
use subcomp::graph::{emit_graph6, enumerate_nonisomorphic, parse_edge_list, parse_graph6};
use subcomp::subcomp::{c2_value_with, c2_with, verify_system};
use subcomp::tricliques::{build_triclique_system, verify_triclique_system, Triclique, TricliqueSystem};
use subcomp::{rank_gf2, symmetric_difference, t2, ComplementationSystem, Error, Graph, MinRankSolver};

#[derive(Parser)]
#[command(name = "subcomp", version, about = "Subgraph complementation, GF(2) minimum rank and triclique tools")]
struct Cli {
    /// Largest component the minimum-rank search will enumerate.
    #[arg(long, global = true, default_value_t = subcomp::minrank::DEFAULT_CEILING)]
    ceiling: usize,
    /// Worker threads (0 = all cores). Affects running time only.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Input format; `auto` tells graph6 from edge lists by the first line.
    #[arg(long, global = true, value_enum, default_value_t = Format::Auto)]
    format: Format,
    /// Emit JSON (the default, except for `enumerate`).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Emit a plain-text table.
    #[arg(long, global = true)]
    table: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Auto,
    Graph6,
    Edges,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: ranks, c2, t2, bounds, forest data and certificates.
    Analyze { input: PathBuf },
    /// A minimum complementation system.
    Construct { input: PathBuf },
    /// Check a certificate (complementation or triclique system) against a graph.
    Verify { input: PathBuf, certificate: PathBuf },
    /// Complementation distance between two graphs on the same vertex set.
    Distance { first: PathBuf, second: PathBuf },
    /// A minimum triclique system.
    Tricliques { input: PathBuf },
    /// Vertex-cover and edge-count upper bounds with their systems.
    Bounds { input: PathBuf },
    /// Stream graph6 lines; analyse each, or search for minimal forbidden subgraphs.
    Scan {
        /// graph6 file, one graph per line; `-` or absent for stdin.
        input: Option<PathBuf>,
        #[arg(long, value_parser = parse_invariant)]
        forbidden: Option<Invariant>,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// All isomorphism classes on `n` vertices, as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

fn parse_invariant(s: &str) -> Result<Invariant, String> {
    s.parse()
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ComponentTooLarge { .. } | Error::TooLarge { .. } | Error::TooLargeForBuiltin { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

type CliResult<T> = Result<T, Failure>;

fn read_source(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
    }
}

fn first_content_line(text: &str) -> Option<&str> {
    text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'))
}

fn looks_like_graph6(line: &str) -> bool {
    line.starts_with(">>graph6<<") || (!line.contains(char::is_whitespace) && line.bytes().all(|b| (63..=126).contains(&b)))
}

fn parse_graph(text: &str, format: Format) -> CliResult<Graph> {
    let line = first_content_line(text).ok_or_else(|| Failure::input("empty input"))?;
    let graph6 = match format {
        Format::Graph6 => true,
        Format::Edges => false,
        Format::Auto => looks_like_graph6(line),
    };
    let g = if graph6 { parse_graph6(line.as_bytes())? } else { parse_edge_list(text)? };
    Ok(g)
}

fn load_graph(path: &Path, format: Format) -> CliResult<Graph> {
    parse_graph(&read_source(path)?, format)
}

#[derive(Serialize)]
struct InputDescriptor {
    source: String,
    graph6: String,
}

#[derive(Serialize)]
struct ForestData {
    path_cover_number: usize,
    path_cover: PathCover,
}

#[derive(Serialize)]
struct Certificates {
    system: ComplementationSystem,
    tricliques: TricliqueSystem,
}

#[derive(Serialize)]
struct AnalysisReport {
    input: InputDescriptor,
    n: usize,
    m: usize,
    rank_adjacency: usize,
    mr: usize,
    c2: usize,
    exceptional: bool,
    t2: usize,
    bounds: Option<BoundsSummary>,
    forest: Option<ForestData>,
    certificates: Certificates,
}

fn analyze(g: &Graph, source: String, solver: &MinRankSolver) -> CliResult<AnalysisReport> {
    let n = g.order();
    let rank_adjacency = rank_gf2(&g.adjacency_matrix());
    let t2 = t2(g);
    // Forests are solved exactly through path covers, whatever their size.
    let (mr, c2, exceptional, system, forest) = if g.is_forest() {
        let p = path_cover_number(g)?;
        let forest = ForestData { path_cover_number: p, path_cover: forest_path_cover(g)? };
        (n - p, n - p, false, forest_system(g)?, Some(forest))
    } else {
        let r = c2_with(solver, g)?;
        (r.mr, r.c2, r.exceptional, r.system, None)
    };
    assert_eq!(mr, c2.min(2 * t2), "inconsistent analysis");
    let bounds = if n <= VERTEX_COVER_MAX_ORDER { Some(bounds_summary(g)?) } else { None };
    Ok(AnalysisReport {
        input: InputDescriptor { source, graph6: emit_graph6(g)? },
        n,
        m: g.size(),
        rank_adjacency,
        mr,
        c2,
        exceptional,
        t2,
        bounds,
        forest,
        certificates: Certificates { system, tricliques: build_triclique_system(g) },
    })
}

fn sets_from_json(v: &Value, what: &str) -> CliResult<Vec<Vec<usize>>> {
    serde_json::from_value(v.clone()).map_err(|e| Failure::input(format!("{what}: {e}")))
}

fn verify(g: &Graph, cert: &Value) -> CliResult<Value> {
    let n = g.order();
    if let Some(ts) = cert.get("tricliques") {
        let items = ts.as_array().ok_or_else(|| Failure::input("tricliques must be an array"))?;
        let mut tricliques = Vec::new();
        for t in items {
            let part = |key: &str| -> CliResult<u64> {
                let vs: Vec<usize> = serde_json::from_value(t.get(key).cloned().unwrap_or(json!([])))
                    .map_err(|e| Failure::input(format!("triclique part {key}: {e}")))?;
                match vs.iter().find(|&&v| v >= n) {
                    Some(&v) => Err(Error::VertexOutOfRange { vertex: v, n }.into()),
                    None => Ok(vs.iter().fold(0, |s, &v| s | 1 << v)),
                }
            };
            tricliques.push(Triclique { x: part("X")?, y: part("Y")?, z: part("Z")? });
        }
        let claimed = cert.get("t2").and_then(Value::as_u64);
        let sys = TricliqueSystem { n, tricliques };
        let valid = match verify_triclique_system(g, &sys) {
            Ok(ok) => ok,
            Err(e @ Error::OverlappingParts { .. }) => return Ok(json!({"kind": "tricliques", "valid": false, "reason": e.to_string()})),
            Err(e) => return Err(e.into()),
        };
        let valid = valid && claimed.is_none_or(|c| c as usize == sys.len());
        return Ok(json!({"kind": "tricliques", "valid": valid, "size": sys.len()}));
    }
    let lists = match cert {
        Value::Array(_) => sets_from_json(cert, "system")?,
        _ => sets_from_json(cert.get("system").ok_or_else(|| Failure::input("certificate has no system"))?, "system")?,
    };
    let sys = ComplementationSystem::from_vertex_lists(n, &lists)?;
    let check = verify_system(g, &sys)?;
    let claimed = cert.get("c2").and_then(Value::as_u64);
    let size_ok = claimed.is_none_or(|c| c as usize == sys.len());
    Ok(json!({
        "kind": "system",
        "valid": check.valid && size_ok,
        "size": sys.len(),
        "mismatches": check.mismatches,
    }))
}

fn scan_graphs(text: &str) -> CliResult<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, l)| parse_graph6(l.as_bytes()).map_err(|e| Failure::input(format!("line {}: {e}", i + 1))))
        .collect()
}

fn scan_line(g: &Graph, solver: &MinRankSolver) -> Value {
    let g6 = emit_graph6(g).unwrap_or_default();
    match c2_with(solver, g) {
        Ok(r) => json!({"graph6": g6, "n": g.order(), "m": g.size(), "mr": r.mr, "c2": r.c2, "t2": t2(g), "exceptional": r.exceptional}),
        Err(e) => json!({"graph6": g6, "error": e.to_string()}),
    }
}

fn render_table(v: &Value) -> String {
    let scalar = |x: &Value| match x {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    match v {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            map.iter().map(|(k, x)| format!("{k:<width$}  {}\n", scalar(x))).collect()
        }
        Value::Array(items) => items.iter().map(|x| scalar(x) + "\n").collect(),
        other => scalar(other) + "\n",
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

enum Output {
    Json(Value),
    Lines(Vec<String>),
}

fn run(cli: &Cli) -> CliResult<(Output, u8)> {
    let solver = MinRankSolver::with_ceiling(cli.ceiling);
    let out = match &cli.command {
        Command::Analyze { input } => {
            let g = load_graph(input, cli.format)?;
            let report = analyze(&g, input.display().to_string(), &solver)?;
            (Output::Json(to_value(&report)), 0)
        }
        Command::Construct { input } => {
            let g = load_graph(input, cli.format)?;
            (Output::Json(to_value(&c2_with(&solver, &g)?)), 0)
        }
        Command::Verify { input, certificate } => {
            let g = load_graph(input, cli.format)?;
            let text = read_source(certificate)?;
            let cert: Value = serde_json::from_str(&text).map_err(|e| Failure::input(format!("certificate: {e}")))?;
            let report = verify(&g, &cert)?;
            let code = if report["valid"] == json!(true) { 0 } else { 1 };
            (Output::Json(report), code)
        }
        Command::Distance { first, second } => {
            let g = load_graph(first, cli.format)?;
            let h = load_graph(second, cli.format)?;
            let d = c2_value_with(&solver, &symmetric_difference(&g, &h)?)?;
            (Output::Json(json!({"distance": d})), 0)
        }
        Command::Tricliques { input } => {
            let g = load_graph(input, cli.format)?;
            (Output::Json(to_value(&build_triclique_system(&g))), 0)
        }
        Command::Bounds { input } => {
            let g = load_graph(input, cli.format)?;
            (Output::Json(to_value(&bounds_summary(&g)?)), 0)
        }
        Command::Scan { input, forbidden, k } => {
            let path = input.clone().unwrap_or_else(|| PathBuf::from("-"));
            let graphs = scan_graphs(&read_source(&path)?)?;
            match forbidden {
                Some(inv) => {
                    let report = find_minimal_forbidden(graphs, *inv, *k, &solver);
                    if !report.skipped.is_empty() {
                        eprintln!("skipped {} graphs above the ceiling", report.skipped.len());
                    }
                    (Output::Json(to_value(&report)), 0)
                }
                None => {
                    let lines: Vec<String> = graphs.par_iter().map(|g| scan_line(g, &solver).to_string()).collect();
                    (Output::Lines(lines), 0)
                }
            }
        }
        Command::Enumerate { n } => {
            let graphs = enumerate_nonisomorphic(*n)?;
            let g6 = graphs.iter().map(emit_graph6).collect::<Result<Vec<_>, _>>()?;
            if cli.json {
                (Output::Json(json!(g6)), 0)
            } else {
                (Output::Lines(g6), 0)
            }
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global().expect("thread pool");
    }
    match run(&cli) {
        Ok((output, code)) => {
            let text = match output {
                Output::Json(v) if cli.table => render_table(&v),
                Output::Json(v) => serde_json::to_string_pretty(&v).expect("json") + "\n",
                Output::Lines(lines) => lines.iter().map(|l| format!("{l}\n")).collect(),
            };
            let mut stdout = io::stdout().lock();
            // A closed pipe is not an error worth reporting.
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
