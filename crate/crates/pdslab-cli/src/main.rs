//! Command-line front end: graph I/O, solve/verify/reduce/params commands,
//! JSON reports, and the self-test harness.
//!
//! Exit codes: 0 success, 1 solver-precondition rejection or malformed
//! input (with a line/column diagnostic), 2 usage error.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pdslab::io::{parse_dimacs, parse_graph, write_graph};
use pdslab::oracle::max_pds_bruteforce;
use pdslab::pds::{is_connected_pds, is_pds, satisfaction_report, VertexSet};
use pdslab::reductions::{
    reduce_dense_degen2, reduce_dense_delta6, reduce_sparse, verify_structure, GadgetParams,
    ReductionOutput, Role,
};
use pdslab::selfcheck;
use pdslab::solver_co_h2::solve_co_h2;
use pdslab::solver_h2::solve_h2;
use pdslab::{compute_params, solve_auto, Graph, DEFAULT_CAP};

#[derive(Parser)]
#[command(
    name = "pdslab",
    version,
    about = "Maximum proportionally dense subgraph toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Exhaustive-search cap on the vertex count (default 24; the
    /// PDSLAB_ORACLE_CAP environment variable is an alternative).
    #[arg(long, global = true)]
    oracle_cap: Option<usize>,
}

#[derive(clap::Args)]
struct InputArgs {
    /// Input graph file; stdin when omitted.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,

    /// Parse the input as DIMACS (`p edge N M` / `e u v`) instead of the
    /// native `n m` edge list.
    #[arg(long)]
    dimacs: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Brute,
    H2,
    CoH2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GadgetKind {
    Sparse,
    SparseBipartite,
    DenseDelta6,
    DenseDegen2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Level {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Report max degree, h-index and degeneracy of a graph.
    Params {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Find a maximum (connected) proportionally dense subgraph.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        /// Require the solution to induce a connected subgraph.
        #[arg(long)]
        connected: bool,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Check whether a vertex set is proportionally dense.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated vertex ids, e.g. `0,1,2`.
        #[arg(long)]
        set: String,
        /// Also require connectivity.
        #[arg(long)]
        connected: bool,
    },
    /// Generate a hardness gadget from a cubic graph.
    Reduce {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        gadget: GadgetKind,
        #[arg(short)]
        k: usize,
        /// Write the gadget graph to this file; printed inline otherwise.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Accept non-cubic sources for dense-delta6 (drops the
        /// complement-degree audit).
        #[arg(long)]
        permissive: bool,
    },
    /// Run the bundled cross-validation suites.
    Selftest {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
    },
}

#[derive(Serialize)]
struct InputSummary {
    n: usize,
    m: usize,
    digest: String,
}

#[derive(Serialize)]
struct Report<T: Serialize> {
    command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<InputSummary>,
    result: T,
    timing_ms: u128,
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf29ce484222325u64;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

fn summarize(g: &Graph) -> InputSummary {
    InputSummary {
        n: g.n(),
        m: g.m(),
        digest: format!("fnv1a64:{:016x}", fnv1a64(write_graph(g).as_bytes())),
    }
}

enum CliError {
    /// Exit 1: bad input or a solver precondition rejection.
    Rejected(String),
}

impl From<pdslab::Error> for CliError {
    fn from(e: pdslab::Error) -> CliError {
        CliError::Rejected(e.to_string())
    }
}

fn read_input(args: &InputArgs) -> Result<Graph, CliError> {
    let text = match &args.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Rejected(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Rejected(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let parsed = if args.dimacs {
        parse_dimacs(&text)
    } else {
        parse_graph(&text)
    };
    parsed.map_err(|e| CliError::Rejected(format!("malformed graph: {e}")))
}

fn emit<T: Serialize>(json: bool, report: &Report<T>, text: impl FnOnce() -> String) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        );
    } else {
        println!("{}", text());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = cli
        .oracle_cap
        .or_else(|| {
            std::env::var("PDSLAB_ORACLE_CAP")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(DEFAULT_CAP);
    match run(cli, cap) {
        Ok(code) => code,
        Err(CliError::Rejected(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli, cap: usize) -> Result<ExitCode, CliError> {
    let started = Instant::now();
    match cli.command {
        Command::Params { input } => {
            let g = read_input(&input)?;
            let p = compute_params(&g);
            #[derive(Serialize)]
            struct ParamsResult {
                max_degree: usize,
                h_index: usize,
                degeneracy: usize,
                elimination_order: Vec<usize>,
            }
            let report = Report {
                command: "params".into(),
                input: Some(summarize(&g)),
                result: ParamsResult {
                    max_degree: p.max_degree,
                    h_index: p.h_index,
                    degeneracy: p.degeneracy,
                    elimination_order: p.elimination_order.clone(),
                },
                timing_ms: started.elapsed().as_millis(),
            };
            emit(cli.json, &report, || {
                format!(
                    "n={} m={}\nmax degree = {}\nh-index    = {}\ndegeneracy = {}",
                    g.n(),
                    g.m(),
                    p.max_degree,
                    p.h_index,
                    p.degeneracy
                )
            });
            Ok(ExitCode::SUCCESS)
        }

        Command::Solve {
            input,
            connected,
            method,
        } => {
            let g = read_input(&input)?;
            let solved = match method {
                Method::Auto => solve_auto(&g, connected, cap)?,
                Method::Brute => max_pds_bruteforce(&g, connected, cap)?,
                Method::H2 => solve_h2(&g, connected, cap)?,
                Method::CoH2 => solve_co_h2(&g, connected, cap)?,
            };
            // The verified flag is re-derived at emit time.
            let verified = solved
                .witness
                .as_ref()
                .is_some_and(|w| is_pds(&g, w) && (!connected || is_connected_pds(&g, w)));
            #[derive(Serialize)]
            struct SolveResultOut {
                size: usize,
                witness: Option<Vec<usize>>,
                method: &'static str,
                connected: bool,
                verified: bool,
            }
            let report = Report {
                command: "solve".into(),
                input: Some(summarize(&g)),
                result: SolveResultOut {
                    size: solved.size,
                    witness: solved.witness.as_ref().map(|w| w.members().to_vec()),
                    method: solved.method.as_str(),
                    connected,
                    verified,
                },
                timing_ms: started.elapsed().as_millis(),
            };
            emit(cli.json, &report, || match &solved.witness {
                Some(w) => format!(
                    "size {} (method {}, verified {})\nwitness: {:?}",
                    solved.size,
                    solved.method.as_str(),
                    verified,
                    w.members()
                ),
                None => format!("no solution exists (method {})", solved.method.as_str()),
            });
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify {
            input,
            set,
            connected,
        } => {
            let g = read_input(&input)?;
            let mut ids = Vec::new();
            for tok in set.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    continue;
                }
                let v: usize = tok
                    .parse()
                    .map_err(|_| CliError::Rejected(format!("bad vertex id {tok:?} in --set")))?;
                if v >= g.n() {
                    return Err(CliError::Rejected(format!(
                        "vertex {v} out of range for a graph on {} vertices",
                        g.n()
                    )));
                }
                ids.push(v);
            }
            let s = VertexSet::new(ids);
            let dense = is_pds(&g, &s);
            let verified = if connected {
                dense && is_connected_pds(&g, &s)
            } else {
                dense
            };
            let violation = satisfaction_report(&g, &s)
                .ok()
                .and_then(|r| r.first_violation);
            #[derive(Serialize)]
            struct VerifyResult {
                set: Vec<usize>,
                size: usize,
                verified: bool,
                proportionally_dense: bool,
                connected_required: bool,
                first_violation: Option<usize>,
            }
            let report = Report {
                command: "verify".into(),
                input: Some(summarize(&g)),
                result: VerifyResult {
                    set: s.members().to_vec(),
                    size: s.size(),
                    verified,
                    proportionally_dense: dense,
                    connected_required: connected,
                    first_violation: violation,
                },
                timing_ms: started.elapsed().as_millis(),
            };
            emit(cli.json, &report, || {
                let mut line = format!("verified {verified} (size {})", s.size());
                if let Some(v) = violation {
                    line.push_str(&format!("; first violating vertex: {v}"));
                }
                line
            });
            Ok(ExitCode::SUCCESS)
        }

        Command::Reduce {
            input,
            gadget,
            k,
            out,
            permissive,
        } => {
            let g = read_input(&input)?;
            let r: ReductionOutput = match gadget {
                GadgetKind::Sparse => reduce_sparse(&g, k, false)?,
                GadgetKind::SparseBipartite => reduce_sparse(&g, k, true)?,
                GadgetKind::DenseDelta6 => reduce_dense_delta6(&g, k, permissive)?,
                GadgetKind::DenseDegen2 => reduce_dense_degen2(&g, k)?,
            };
            verify_structure(&r)?;
            let rendered = write_graph(&r.gadget);
            if let Some(path) = &out {
                std::fs::write(path, &rendered).map_err(|e| {
                    CliError::Rejected(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            #[derive(Serialize)]
            struct RoleCounts {
                source_copies: usize,
                edge_vertices: usize,
                path_a: usize,
                path_b: usize,
                apexes: usize,
            }
            #[derive(Serialize)]
            struct ReduceResult {
                family: &'static str,
                vertices: usize,
                edges: usize,
                k_prime: usize,
                params: serde_json::Value,
                roles: RoleCounts,
                #[serde(skip_serializing_if = "Option::is_none")]
                out_file: Option<String>,
                #[serde(skip_serializing_if = "Option::is_none")]
                gadget_file: Option<String>,
            }
            let mut counts = RoleCounts {
                source_copies: 0,
                edge_vertices: 0,
                path_a: 0,
                path_b: 0,
                apexes: 0,
            };
            for role in &r.roles {
                match role {
                    Role::SourceCopy(_) => counts.source_copies += 1,
                    Role::EdgeVertex { .. } => counts.edge_vertices += 1,
                    Role::PathA(_) => counts.path_a += 1,
                    Role::PathB(_) => counts.path_b += 1,
                    Role::AStar | Role::BStar => counts.apexes += 1,
                }
            }
            let params = match r.params {
                GadgetParams::Sparse(p) => serde_json::json!({
                    "C": p.c, "N": p.n_total, "k_prime": p.k_prime, "A": p.a, "B": p.b,
                }),
                GadgetParams::DenseDelta6 { k_prime } => serde_json::json!({ "k_prime": k_prime }),
                GadgetParams::DenseDegen2 { x, k_prime } => {
                    serde_json::json!({ "x": x, "k_prime": k_prime })
                }
            };
            let report = Report {
                command: "reduce".into(),
                input: Some(summarize(&g)),
                result: ReduceResult {
                    family: r.family.as_str(),
                    vertices: r.gadget.n(),
                    edges: r.gadget.m(),
                    k_prime: r.k_prime,
                    params,
                    roles: counts,
                    out_file: out.as_ref().map(|p| p.display().to_string()),
                    gadget_file: if out.is_none() && cli.json {
                        Some(rendered.clone())
                    } else {
                        None
                    },
                },
                timing_ms: started.elapsed().as_millis(),
            };
            emit(cli.json, &report, || {
                let mut text = format!(
                    "{}: {} vertices, {} edges, k' = {}",
                    r.family.as_str(),
                    r.gadget.n(),
                    r.gadget.m(),
                    r.k_prime
                );
                match out {
                    Some(ref p) => text.push_str(&format!("\nwritten to {}", p.display())),
                    None => {
                        text.push('\n');
                        text.push_str(&rendered);
                    }
                }
                text
            });
            Ok(ExitCode::SUCCESS)
        }

        Command::Selftest { level } => {
            let reports = match level {
                Level::Quick => selfcheck::quick_suites(cap),
                Level::Full => selfcheck::full_suites(cap),
            };
            let passed = reports.iter().filter(|r| r.passed()).count();
            let failed = reports.len() - passed;
            let first_counterexample = reports
                .iter()
                .find(|r| !r.passed())
                .map(|r| r.failures[0].clone());
            #[derive(Serialize)]
            struct SuiteOut {
                name: &'static str,
                checked: usize,
                failures: Vec<String>,
                elapsed_ms: u128,
            }
            #[derive(Serialize)]
            struct SelftestResult {
                level: &'static str,
                suites: Vec<SuiteOut>,
                passed: usize,
                failed: usize,
                first_counterexample: Option<String>,
            }
            let report = Report {
                command: "selftest".into(),
                input: None,
                result: SelftestResult {
                    level: if level == Level::Quick {
                        "quick"
                    } else {
                        "full"
                    },
                    suites: reports
                        .iter()
                        .map(|r| SuiteOut {
                            name: r.name,
                            checked: r.checked,
                            failures: r.failures.clone(),
                            elapsed_ms: r.elapsed_ms,
                        })
                        .collect(),
                    passed,
                    failed,
                    first_counterexample,
                },
                timing_ms: started.elapsed().as_millis(),
            };
            emit(cli.json, &report, || {
                let mut lines: Vec<String> = reports.iter().map(|r| r.summary_line()).collect();
                lines.push(format!("{passed} passed, {failed} failed"));
                lines.join("\n")
            });
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
