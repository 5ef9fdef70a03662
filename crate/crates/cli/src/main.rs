//! Command line front end: parameter tables, arrowing decisions, extremal
//! constructions, witness extraction, population sweeps, and lemma suites.
//!
//! Reproducibility rules: the seed and node budget are echoed in a header
//! line, output goes to stdout (or `-o`) while logs go to stderr, and a
//! fixed seed with fixed inputs produces byte-identical output at any
//! `--threads` setting. Exit codes: 0 ok/arrows, 1 not_arrows or a failed
//! check, 2 search budget exhausted, 64 usage or parse errors, 70 anything
//! else.

use std::fmt::Write as _;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use rgl_core::arrowing::{arrows_with, SearchConfig, Verdict};
use rgl_core::arrowing::{verify_witness, DEFAULT_BUDGET};
use rgl_core::constructions::{build_extremal, validate_extremal};
use rgl_core::graph::Graph;
use rgl_core::lemmas::{run_suite, LemmaId};
use rgl_core::proof::{extract_witness, sweep_verify, SweepMode};
use rgl_core::thresholds::GoodnessParams;
use rgl_core::{arrowing::check_coloring, arrowing::TwoColoring, Error};

#[derive(Parser)]
#[command(
    name = "rgl",
    version,
    about = "Ramsey goodness laboratory: degree thresholds, arrowing, witnesses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output to this file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Body format for threshold and lemma reports.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Node budget for arrowing searches; RGL_BUDGET overrides the default.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Worker threads for arrows and sweep; never changes the output.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the degree threshold and window data for (r, t, n).
    Threshold {
        #[arg(short, long)]
        r: u64,
        #[arg(short, long)]
        t: u64,
        #[arg(short, long)]
        n: u64,
    },
    /// Decide whether a host forces a red clique or blue path.
    Arrows {
        #[arg(short, long)]
        r: usize,
        #[arg(short, long)]
        t: usize,
        /// graph6 string, path to a graph file, or omitted to read stdin.
        input: Option<String>,
    },
    /// Build the extremal host and coloring for the top of a window.
    Construct {
        #[arg(short, long)]
        r: u64,
        #[arg(short, long)]
        t: u64,
        #[arg(short, long)]
        k: u64,
        /// Check the construction and report the assertions.
        #[arg(long)]
        verify: bool,
    },
    /// Extract a red-clique or blue-path witness from a coloring.
    Witness {
        #[arg(short, long)]
        r: usize,
        #[arg(short, long)]
        t: usize,
        /// Blue edges as `u-v,u-v`; everything else is red. Empty for none.
        #[arg(long)]
        blue: String,
        /// graph6 string, path to a graph file, or omitted to read stdin.
        input: Option<String>,
    },
    /// Decide arrowing across a whole family of hosts.
    Sweep {
        #[arg(short, long)]
        r: u64,
        #[arg(short, long)]
        t: u64,
        #[arg(short, long)]
        k: u64,
        /// Order or inclusive order range, e.g. `8` or `4..6`.
        #[arg(short, long)]
        n: String,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Samples to draw (sample mode).
        #[arg(long)]
        count: Option<u64>,
        /// Generator seed (sample mode).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run a structural lemma suite and report counterexamples.
    Lemma {
        /// One of path-length, erdos-gallai, partition, brooks.
        id: String,
        /// Census bound for the exhaustive suites.
        #[arg(long, default_value_t = 8)]
        exhaustive_n: usize,
        /// Degree parameter for path-length.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Forbidden path order for partition.
        #[arg(long, default_value_t = 4)]
        d: usize,
        /// Random graphs to draw for brooks.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Generator seed for brooks.
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exhaustive,
    Sample,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    64
                }
            };
        }
    };
    let budget = match resolve_budget(cli.budget) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return 64;
        }
    };
    let mut body = String::new();
    let code = match execute(&cli, budget, &mut body) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            body.clear();
            exit_code_for(&e)
        }
    };
    if !body.is_empty() {
        if let Err(e) = emit(cli.output.as_deref(), &body) {
            eprintln!("error: {e}");
            return 70;
        }
    }
    code
}

fn resolve_budget(flag: Option<u64>) -> Result<u64, Error> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("RGL_BUDGET") {
        Ok(s) => s
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::Input(format!("RGL_BUDGET must be an integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Input(_) | Error::Parse(_) | Error::BelowWindow { .. } => 64,
        Error::Undecided { .. } => 2,
        _ => 70,
    }
}

fn emit(path: Option<&Path>, body: &str) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn header(out: &mut String, command: &str, seed: Option<u64>, budget: Option<u64>) {
    let line = json!({ "command": command, "seed": seed, "budget": budget });
    let _ = writeln!(out, "{line}");
}

fn execute(cli: &Cli, budget: u64, out: &mut String) -> Result<i32, Error> {
    match &cli.command {
        Command::Threshold { r, t, n } => cmd_threshold(*r, *t, *n, cli.format, out),
        Command::Arrows { r, t, input } => {
            let host = load_graph(input.as_deref())?;
            cmd_arrows(&host, *r, *t, budget, cli.threads, out)
        }
        Command::Construct { r, t, k, verify } => cmd_construct(*r, *t, *k, *verify, out),
        Command::Witness { r, t, blue, input } => {
            let host = load_graph(input.as_deref())?;
            let blue = parse_edge_pairs(blue)?;
            cmd_witness(host, &blue, *r, *t, out)
        }
        Command::Sweep {
            r,
            t,
            k,
            n,
            mode,
            count,
            seed,
        } => {
            let range = parse_order_range(n)?;
            let mode = match mode {
                Mode::Exhaustive => SweepMode::Exhaustive,
                Mode::Sample => SweepMode::Sample {
                    count: count.ok_or_else(|| {
                        Error::Input("sample mode requires --count".into())
                    })?,
                    seed: seed
                        .ok_or_else(|| Error::Input("sample mode requires --seed".into()))?,
                },
            };
            cmd_sweep(*r, *t, *k, range, mode, budget, cli.threads, out)
        }
        Command::Lemma {
            id,
            exhaustive_n,
            k,
            d,
            trials,
            seed,
        } => cmd_lemma(id, *exhaustive_n, *k, *d, *trials, *seed, cli.format, out),
    }
}

fn cmd_threshold(r: u64, t: u64, n: u64, format: Option<Format>, out: &mut String) -> Result<i32, Error> {
    let params = GoodnessParams::new(r, t, n)?;
    header(out, "threshold", None, None);
    let low = (r - 1) * (t - 1) * params.k;
    let high = (r - 1) * (t - 1) * (params.k + 1);
    match format.unwrap_or(Format::Text) {
        Format::Text => {
            let _ = writeln!(out, "r = {r}");
            let _ = writeln!(out, "t = {t}");
            let _ = writeln!(out, "n = {n}");
            let _ = writeln!(out, "k = {}", params.k);
            let _ = writeln!(out, "x = {}", params.x);
            let _ = writeln!(out, "m = {}", params.m);
            let _ = writeln!(out, "threshold = {}", params.degree_threshold());
            let _ = writeln!(out, "window = {low} < n <= {high}");
        }
        Format::Json => {
            let line = json!({
                "r": r, "t": t, "n": n,
                "k": params.k, "x": params.x, "m": params.m,
                "threshold": params.degree_threshold(),
                "window_low": low, "window_high": high,
            });
            let _ = writeln!(out, "{line}");
        }
    }
    Ok(0)
}

fn cmd_arrows(
    host: &Graph,
    r: usize,
    t: usize,
    budget: u64,
    threads: usize,
    out: &mut String,
) -> Result<i32, Error> {
    header(out, "arrows", None, Some(budget));
    let cfg = SearchConfig { budget, threads };
    match arrows_with(host, r, t, &cfg) {
        Ok(cert) => {
            let _ = writeln!(out, "{}", cert.to_json());
            Ok(match cert.verdict {
                Verdict::Arrows => 0,
                Verdict::NotArrows => 1,
            })
        }
        Err(Error::Undecided { nodes }) => {
            eprintln!("search budget of {budget} nodes exhausted");
            let line = json!({ "verdict": "undecided", "nodes": nodes, "budget": budget });
            let _ = writeln!(out, "{line}");
            Ok(2)
        }
        Err(e) => Err(e),
    }
}

fn cmd_construct(r: u64, t: u64, k: u64, verify: bool, out: &mut String) -> Result<i32, Error> {
    let e = build_extremal(r, t, k)?;
    header(out, "construct", None, None);
    let _ = writeln!(out, "{}", e.graph.to_graph6());
    let _ = writeln!(out, "{}", serde_json::to_string(&e.sidecar()).expect("serializable"));
    if verify {
        let report = validate_extremal(&e);
        let good = check_coloring(&e.coloring, e.params.r as usize, e.params.t as usize).is_none();
        let pass = report.all_pass() && good;
        let line = json!({ "report": report, "good_coloring": good, "pass": pass });
        let _ = writeln!(out, "{line}");
        return Ok(if pass { 0 } else { 1 });
    }
    Ok(0)
}

fn cmd_witness(
    host: Graph,
    blue: &[(usize, usize)],
    r: usize,
    t: usize,
    out: &mut String,
) -> Result<i32, Error> {
    let coloring = TwoColoring::new(host, blue)?;
    header(out, "witness", None, None);
    let witness = extract_witness(&coloring, r, t)?;
    verify_witness(&coloring, r, t, &witness)?;
    let mut value = serde_json::to_value(&witness).expect("serializable");
    value
        .as_object_mut()
        .expect("witness serializes to an object")
        .insert("verified".into(), json!(true));
    let _ = writeln!(out, "{value}");
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    r: u64,
    t: u64,
    k: u64,
    range: (u64, u64),
    mode: SweepMode,
    budget: u64,
    threads: usize,
    out: &mut String,
) -> Result<i32, Error> {
    let seed = match mode {
        SweepMode::Sample { seed, .. } => Some(seed),
        SweepMode::Exhaustive => None,
    };
    header(out, "sweep", seed, Some(budget));
    let cfg = SearchConfig { budget, threads };
    let mut all_pass = true;
    for n in range.0..=range.1 {
        let summary = sweep_verify(r, t, k, n, mode, &cfg, &mut |rec| {
            let _ = writeln!(out, "{}", serde_json::to_string(rec).expect("serializable"));
        })?;
        all_pass &= summary.pass();
        let _ = writeln!(out, "{}", serde_json::to_string(&summary).expect("serializable"));
    }
    Ok(if all_pass { 0 } else { 1 })
}

#[allow(clippy::too_many_arguments)]
fn cmd_lemma(
    id: &str,
    exhaustive_n: usize,
    k: usize,
    d: usize,
    trials: u64,
    seed: u64,
    format: Option<Format>,
    out: &mut String,
) -> Result<i32, Error> {
    let id = LemmaId::from_str(id)?;
    let recorded_seed = matches!(id, LemmaId::Brooks).then_some(seed);
    header(out, "lemma", recorded_seed, None);
    let report = run_suite(id, exhaustive_n, k, d, trials, seed)?;
    match format.unwrap_or(Format::Text) {
        Format::Text => {
            let _ = writeln!(out, "suite = {}", report.lemma);
            let _ = writeln!(out, "detail = {}", report.detail);
            let _ = writeln!(out, "checked = {}", report.checked);
            let _ = writeln!(out, "skipped = {}", report.skipped);
            let _ = writeln!(out, "counterexamples = {}", report.counterexamples.len());
            for g6 in &report.counterexamples {
                let _ = writeln!(out, "counterexample = {g6}");
            }
            let _ = writeln!(out, "result = {}", if report.pass() { "pass" } else { "fail" });
        }
        Format::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string(&report).expect("serializable"));
        }
    }
    Ok(if report.pass() { 0 } else { 1 })
}

/// Inline graph6, a path to a file holding graph6 or an edge list, or
/// stdin when nothing is given. Edge lists are recognized by their `n m`
/// numeric header.
fn load_graph(input: Option<&str>) -> Result<Graph, Error> {
    let text = match input {
        Some(s) if Path::new(s).is_file() => fs::read_to_string(s)
            .map_err(|e| Error::Input(format!("cannot read {s}: {e}")))?,
        Some(s) => s.to_string(),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Input(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty graph input".into()));
    }
    if trimmed.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        Graph::from_edge_list(trimmed)
    } else {
        Graph::from_graph6(trimmed.lines().next().unwrap_or_default().trim())
    }
}

/// `u-v,u-v` pairs; the empty string means no edges.
fn parse_edge_pairs(text: &str) -> Result<Vec<(usize, usize)>, Error> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|pair| {
            let pair = pair.trim();
            let (u, v) = pair
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("expected `u-v`, got {pair:?}")))?;
            let u = u
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad vertex in {pair:?}")))?;
            let v = v
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad vertex in {pair:?}")))?;
            Ok((u, v))
        })
        .collect()
}

/// `8` or an inclusive `4..6`.
fn parse_order_range(text: &str) -> Result<(u64, u64), Error> {
    let trimmed = text.trim();
    let parse = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad order {s:?}")))
    };
    match trimmed.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b)?);
            if a > b {
                return Err(Error::Parse(format!("empty order range {trimmed:?}")));
            }
            Ok((a, b))
        }
        None => {
            let n = parse(trimmed)?;
            Ok((n, n))
        }
    }
}
