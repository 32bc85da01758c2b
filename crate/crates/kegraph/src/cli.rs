//! Command-line front end: `analyze` (per-graph invariant reports),
//! `verify` (structural-fact suite over a graph source), `gen` (graph6
//! emission of the built-in families) and `gallery` (fixture table).
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 budget exhaustion under `--strict`.

use crate::analysis::ke_report;
use crate::census::Census;
use crate::format::{parse_edge_list, parse_graph6, sniff_input, InputKind};
use crate::gallery;
use crate::generators;
use crate::graph::Graph;
use crate::independence::{Budget, EngineError};
use crate::theorems::{theorem_suite, SuiteConfig, TheoremId, TheoremStatus};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use std::collections::HashMap;
use std::io::Read;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "kegraph",
    about = "Exact matching/independence invariants and deletion-stability analysis for small graphs",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a full invariant report for every input graph.
    ///
    /// Input is a file of graph6 lines, a single edge-list or DIMACS file,
    /// or "-" for standard input (format auto-detected).
    Analyze {
        input: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Work budget per exact-solver call (default: KEGRAPH_BUDGET or built-in).
        #[arg(long)]
        budget: Option<u64>,
        /// Worker threads (0 = automatic).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Exit with code 3 if any graph exhausts the budget.
        #[arg(long)]
        strict: bool,
    },
    /// Run the structural-fact suite over a graph source and aggregate
    /// per-fact outcomes; any failure exits nonzero with a graph6 witness.
    Verify {
        /// Check the bundled fixture gallery (annotations plus suite).
        #[arg(long, group = "source")]
        gallery: bool,
        /// A graph6 census file, or "n<=K" to enumerate all graphs up to K
        /// vertices internally.
        #[arg(long, group = "source")]
        census: Option<String>,
        /// Random family spec: `ke <s> <a> <p>`.
        #[arg(long, group = "source", num_args = 4, value_names = ["FAMILY", "S", "A", "P"])]
        random: Option<Vec<String>>,
        /// Number of random graphs.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Emit graphs of a named family as graph6 lines.
    ///
    /// Families: cycle K | path K | complete K | ke S A P | gpq P Q | hk K |
    /// gallery:<fixture>.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Recompute every gallery annotation and print an expected-vs-computed
    /// table; mismatches exit nonzero, flagged discrepancies do not.
    Gallery,
}

fn budget_from(flag: Option<u64>) -> Budget {
    let env = std::env::var("KEGRAPH_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok());
    Budget::new(flag.or(env).unwrap_or(Budget::DEFAULT_NODE_LIMIT))
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Analyze {
            input,
            format,
            budget,
            jobs,
            strict,
        } => with_pool(jobs, || run_analyze(&input, format, budget_from(budget), strict)),
        Command::Verify {
            gallery,
            census,
            random,
            count,
            seed,
            budget,
            jobs,
        } => with_pool(jobs, || {
            run_verify(gallery, census, random, count, seed, budget_from(budget))
        }),
        Command::Gen {
            family,
            params,
            count,
            seed,
        } => run_gen(&family, &params, count, seed),
        Command::Gallery => run_gallery(),
    }
}

fn read_input(input: &str) -> Result<String, String> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("reading standard input: {e}"))?;
        Ok(text)
    } else {
        std::fs::read_to_string(input).map_err(|e| format!("reading {input}: {e}"))
    }
}

fn run_analyze(input: &str, format: OutputFormat, budget: Budget, strict: bool) -> i32 {
    let text = match read_input(input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    // (line number, graph) pairs, or a parse failure.
    let graphs: Result<Vec<(usize, Graph)>, String> = match sniff_input(&text) {
        InputKind::SingleGraph => parse_edge_list(&text)
            .map(|p| {
                if p.duplicate_edges > 0 {
                    eprintln!("warning: collapsed {} duplicate edge(s)", p.duplicate_edges);
                }
                vec![(1, p.graph)]
            })
            .map_err(|e| e.to_string()),
        InputKind::Graph6Lines => text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .map(|(i, l)| {
                parse_graph6(l)
                    .map(|g| (i, g))
                    .map_err(|e| format!("line {i}: {e}"))
            })
            .collect(),
    };
    let graphs = match graphs {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };

    if format == OutputFormat::Csv {
        println!("{}", crate::analysis::KeReport::csv_header());
    }
    let mut budget_errors = 0usize;
    for chunk in graphs.chunks(1024) {
        let reports: Vec<(usize, Result<crate::analysis::KeReport, EngineError>)> = chunk
            .par_iter()
            .map(|(line, g)| (*line, ke_report(g, &budget)))
            .collect();
        for (line, report) in reports {
            match report {
                Ok(r) => match format {
                    OutputFormat::Json => {
                        println!("{}", serde_json::to_string(&r).expect("report serializes"))
                    }
                    OutputFormat::Csv => println!("{}", r.csv_row()),
                    OutputFormat::Text => print_text_report(&r),
                },
                Err(e) => {
                    budget_errors += 1;
                    eprintln!("graph at line {line}: {e}");
                }
            }
        }
    }
    if strict && budget_errors > 0 {
        EXIT_BUDGET
    } else {
        EXIT_OK
    }
}

fn print_text_report(r: &crate::analysis::KeReport) {
    let fmt_set = |s: &[usize]| {
        let inner = s.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        format!("{{{inner}}}")
    };
    println!(
        "{} n={} m={} class={:?} alpha={} mu={} d={} core={} ker={} eta={} rho_v={} rho_e={}{}",
        r.graph6,
        r.n,
        r.m,
        r.ke_class,
        r.alpha,
        r.mu,
        r.d,
        fmt_set(&r.core),
        fmt_set(&r.ker),
        r.eta,
        r.rho_v,
        r.rho_e,
        match r.checks {
            Some(c) => format!(
                " identity={} bound={}",
                if c.rho_v_equality { "ok" } else { "VIOLATED" },
                if c.rho_e_lower_bound { "ok" } else { "VIOLATED" }
            ),
            None => String::new(),
        }
    );
}

fn run_verify(
    use_gallery: bool,
    census: Option<String>,
    random: Option<Vec<String>>,
    count: usize,
    seed: u64,
    budget: Budget,
) -> i32 {
    let cfg = SuiteConfig {
        budget,
        seed,
        ..SuiteConfig::default()
    };
    let graphs: Vec<Graph> = if use_gallery {
        // Annotation pass first: expected-vs-computed on the fixtures.
        match gallery::evaluate_all(&budget) {
            Ok(rows) => {
                let bad: Vec<_> = rows
                    .iter()
                    .filter(|r| r.outcome == gallery::RowOutcome::Mismatch)
                    .collect();
                if !bad.is_empty() {
                    for r in &bad {
                        eprintln!(
                            "gallery mismatch: {} {}: expected {}, computed {}",
                            r.fixture, r.check, r.expected, r.computed
                        );
                    }
                    return EXIT_VERIFICATION_FAILED;
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_BUDGET;
            }
        }
        gallery::entries().into_iter().map(|e| e.graph).collect()
    } else if let Some(spec) = census {
        match census_graphs(&spec) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        }
    } else if let Some(spec) = random {
        match random_graphs(&spec, count, seed) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        }
    } else {
        eprintln!("error: pick a source: --gallery, --census or --random");
        return EXIT_USAGE;
    };

    let mut pass: HashMap<TheoremId, usize> = HashMap::new();
    let mut fail: HashMap<TheoremId, usize> = HashMap::new();
    let mut na: HashMap<TheoremId, usize> = HashMap::new();
    let mut first_failure: Option<(String, String)> = None;
    let mut budget_errors = 0usize;
    for chunk in graphs.chunks(256) {
        let reports: Vec<Result<crate::theorems::TheoremReport, EngineError>> =
            chunk.par_iter().map(|g| theorem_suite(g, &cfg)).collect();
        for report in reports {
            let report = match report {
                Ok(r) => r,
                Err(e) => {
                    budget_errors += 1;
                    eprintln!("suite error: {e}");
                    continue;
                }
            };
            for (id, status) in &report.entries {
                match status {
                    TheoremStatus::Pass => *pass.entry(*id).or_default() += 1,
                    TheoremStatus::NotApplicable(_) => *na.entry(*id).or_default() += 1,
                    TheoremStatus::Fail(msg) => {
                        *fail.entry(*id).or_default() += 1;
                        if first_failure.is_none() {
                            first_failure =
                                Some((report.graph6.clone(), format!("{}: {msg}", id.name())));
                        }
                    }
                }
            }
        }
    }

    println!("{:<40} {:>8} {:>8} {:>8}", "fact", "pass", "fail", "n/a");
    for &id in TheoremId::ALL {
        println!(
            "{:<40} {:>8} {:>8} {:>8}",
            id.name(),
            pass.get(&id).copied().unwrap_or(0),
            fail.get(&id).copied().unwrap_or(0),
            na.get(&id).copied().unwrap_or(0)
        );
    }
    println!("graphs checked: {}", graphs.len());
    if let Some((witness, msg)) = first_failure {
        eprintln!("FAIL {msg}");
        eprintln!("witness (graph6): {witness}");
        return EXIT_VERIFICATION_FAILED;
    }
    if budget_errors > 0 {
        return EXIT_BUDGET;
    }
    println!("all facts hold on every applicable graph");
    EXIT_OK
}

fn census_graphs(spec: &str) -> Result<Vec<Graph>, String> {
    let trimmed = spec.trim().replace(' ', "");
    let bound = trimmed
        .strip_prefix("n<=")
        .map(str::to_string)
        .or_else(|| trimmed.parse::<usize>().ok().map(|_| trimmed.clone()));
    if let Some(bound) = bound {
        let max_n: usize = bound
            .parse()
            .map_err(|_| format!("bad census bound {spec:?}"))?;
        if !(1..=9).contains(&max_n) {
            return Err(format!("census bound must be 1..=9, got {max_n}"));
        }
        let census = Census::up_to(max_n);
        return Ok((1..=max_n).flat_map(|n| census.graphs(n).collect::<Vec<_>>()).collect());
    }
    let text = std::fs::read_to_string(spec).map_err(|e| format!("reading {spec}: {e}"))?;
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| parse_graph6(l).map_err(|e| format!("line {i}: {e}")))
        .collect()
}

fn random_graphs(spec: &[String], count: usize, seed: u64) -> Result<Vec<Graph>, String> {
    match spec {
        [family, s, a, p] if family == "ke" => {
            let s: usize = s.parse().map_err(|_| format!("bad s {s:?}"))?;
            let a: usize = a.parse().map_err(|_| format!("bad a {a:?}"))?;
            let p: f64 = p.parse().map_err(|_| format!("bad probability {p:?}"))?;
            (0..count)
                .map(|i| {
                    generators::random_ke(s, a, p, seed.wrapping_add(i as u64))
                        .map_err(|e| e.to_string())
                })
                .collect()
        }
        [family, ..] => Err(format!("unknown random family {family:?} (supported: ke)")),
        [] => Err("empty random spec".to_string()),
    }
}

fn run_gen(family: &str, params: &[String], count: usize, seed: u64) -> i32 {
    let need = |k: usize| -> Result<Vec<usize>, String> {
        if params.len() != k {
            return Err(format!("{family} takes {k} parameter(s)"));
        }
        params
            .iter()
            .map(|p| p.parse().map_err(|_| format!("bad parameter {p:?}")))
            .collect()
    };
    let graphs: Result<Vec<Graph>, String> = if let Some(name) = family.strip_prefix("gallery:") {
        match gallery::entry(name) {
            Some(e) => Ok(vec![e.graph]),
            None => Err(format!("unknown gallery fixture {name:?}")),
        }
    } else {
        match family {
            "cycle" => need(1).and_then(|p| {
                generators::cycle(p[0]).map(|g| vec![g]).map_err(|e| e.to_string())
            }),
            "path" => need(1).and_then(|p| {
                generators::path(p[0]).map(|g| vec![g]).map_err(|e| e.to_string())
            }),
            "complete" => need(1).and_then(|p| {
                generators::complete(p[0]).map(|g| vec![g]).map_err(|e| e.to_string())
            }),
            "gpq" => need(2).and_then(|p| {
                generators::gpq(p[0], p[1]).map(|g| vec![g]).map_err(|e| e.to_string())
            }),
            "hk" => need(1).and_then(|p| {
                generators::hk(p[0]).map(|g| vec![g]).map_err(|e| e.to_string())
            }),
            "ke" => {
                if params.len() != 3 {
                    Err("ke takes `s a p`".to_string())
                } else {
                    let s: Result<usize, _> = params[0].parse();
                    let a: Result<usize, _> = params[1].parse();
                    let p: Result<f64, _> = params[2].parse();
                    match (s, a, p) {
                        (Ok(s), Ok(a), Ok(p)) => (0..count)
                            .map(|i| {
                                generators::random_ke(s, a, p, seed.wrapping_add(i as u64))
                                    .map_err(|e| e.to_string())
                            })
                            .collect(),
                        _ => Err("ke takes integers s, a and a probability p".to_string()),
                    }
                }
            }
            other => Err(format!(
                "unknown family {other:?} (cycle, path, complete, ke, gpq, hk, gallery:<name>)"
            )),
        }
    };
    match graphs {
        Ok(graphs) => {
            // Deterministic families ignore --count beyond repetition.
            let reps = if family == "ke" { 1 } else { count };
            for _ in 0..reps {
                for g in &graphs {
                    println!("{}", crate::format::encode_graph6(g));
                }
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn run_gallery() -> i32 {
    let budget = budget_from(None);
    let rows = match gallery::evaluate_all(&budget) {
        Ok(rows) => rows,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_BUDGET;
        }
    };
    println!(
        "{:<12} {:<34} {:<28} {:<28} {}",
        "fixture", "check", "expected", "computed", "outcome"
    );
    let mut mismatches = 0usize;
    for r in &rows {
        let outcome = match r.outcome {
            gallery::RowOutcome::Match => "match",
            gallery::RowOutcome::Mismatch => {
                mismatches += 1;
                "MISMATCH"
            }
            gallery::RowOutcome::FlaggedDiscrepancy => "flagged discrepancy (non-fatal)",
            gallery::RowOutcome::Info => "note",
        };
        println!(
            "{:<12} {:<34} {:<28} {:<28} {}",
            r.fixture, r.check, r.expected, r.computed, outcome
        );
    }
    if mismatches > 0 {
        eprintln!("{mismatches} gallery mismatch(es)");
        EXIT_VERIFICATION_FAILED
    } else {
        EXIT_OK
    }
}
