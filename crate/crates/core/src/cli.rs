//! The `partsat` command line: `construct`, `verify`, `search` and `table`.
//!
//! Exit codes: 0 success, 2 bad parameters or unreadable input, 3 a
//! verification failed, 4 a search ran out of budget.
//!
//! The payload (graph, verdict, search outcome or table) goes to stdout or
//! `--output`; the summary and timing go to stderr, so payloads are
//! byte-identical across runs.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::constructions::{
    alpha_base, alpha_blowup, alpha_from_beta2, best_beta2_witness, beta2_combine, beta2_small_witness,
    beta_step_chain, cycle_power_witness, disjoint_cliques_witness, sat_witness, AlphaWitness, BetaWitness,
};
use crate::error::{Error, Partial, Violation};
use crate::graph::{PartiteGraph, Transversal};
use crate::io::{to_dot, GraphDocument};
use crate::oracles::cache::{CacheRecord, ResultCache};
use crate::oracles::{alpha_bounded_search_with, beta_exact_with, bounds_table, SearchLimits, DEFAULT_NODE_BUDGET};
use crate::saturation::saturation_violation;
use crate::verify::{beta_violation, verify_alpha_witness};

#[derive(Debug, Clone, Parser)]
#[command(name = "partsat", version, about = "Partite K_r-saturation: constructions, verifiers, searches")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
    #[command(flatten)]
    pub io: IoOptions,
}

#[derive(Debug, Clone, Subcommand)]
pub enum CliCommand {
    /// Build a certified witness.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        #[command(flatten)]
        params: Params,
    },
    /// Check a graph file.
    Verify {
        /// Graph JSON file.
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: VerifyMode,
        #[command(flatten)]
        params: Params,
    },
    /// Run an exhaustive or bounded search.
    Search {
        #[arg(value_enum)]
        kind: SearchKind,
        #[command(flatten)]
        params: Params,
    },
    /// Tabulate bounds on alpha(k, r).
    Table {
        /// A value or an inclusive range `a..b`.
        #[arg(long, value_parser = parse_span)]
        k: Span,
        #[arg(long, value_parser = parse_span)]
        r: Span,
        /// Also report the saturated-graph construction at this part size.
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    AlphaBase,
    AlphaBlowup,
    AlphaFromBeta2,
    BetaCycle,
    BetaCliques,
    BetaStep,
    Beta2Small,
    Beta2Combine,
    SatWitness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    Saturated,
    Alpha,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchKind {
    BetaExact,
    AlphaBounded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Params {
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub r1: Option<usize>,
    #[arg(long)]
    pub r2: Option<usize>,
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long)]
    pub max_part_size: Option<usize>,
    /// Node budget for searches.
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct IoOptions {
    /// Write the payload here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Skip the results cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

/// Inclusive range of integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

pub fn parse_span(s: &str) -> Result<Span, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad number {t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(Span { lo, hi })
}

/// A validated unit of work.
#[derive(Debug, Clone)]
pub struct CommandRequest {
    pub action: Action,
    pub params: Params,
    pub input: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub use_cache: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    Construct(ConstructKind),
    Verify(VerifyMode),
    Search(SearchKind),
    Table { k: Span, r: Span },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunStatus {
    Ok,
    ParameterError,
    VerificationFailed,
    ResourceExhausted,
}

impl RunStatus {
    pub fn exit_code(self) -> i32 {
        match self {
            RunStatus::Ok => 0,
            RunStatus::ParameterError => 2,
            RunStatus::VerificationFailed => 3,
            RunStatus::ResourceExhausted => 4,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub status: RunStatus,
    pub summary: String,
    /// What gets written to stdout or `--output`; may be empty.
    pub payload: String,
    pub timing: Duration,
    pub cache_hit: bool,
}

impl RunReport {
    fn ok(summary: String, payload: String) -> Self {
        Self {
            status: RunStatus::Ok,
            summary,
            payload,
            timing: Duration::ZERO,
            cache_hit: false,
        }
    }

    fn failed(status: RunStatus, summary: String, payload: String) -> Self {
        Self {
            status,
            summary,
            payload,
            timing: Duration::ZERO,
            cache_hit: false,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }
}

impl From<Error> for RunReport {
    fn from(e: Error) -> Self {
        match e {
            Error::Witness(v) => RunReport::failed(
                RunStatus::VerificationFailed,
                format!("verification failed: {v}"),
                format!("{}\n", violation_json(&v)),
            ),
            Error::Resource(p) => RunReport::failed(
                RunStatus::ResourceExhausted,
                format!("resource limit reached: {p}"),
                format!("{}\n", partial_json(&p)),
            ),
            other => RunReport::failed(RunStatus::ParameterError, other.to_string(), String::new()),
        }
    }
}

impl CommandRequest {
    pub fn from_cli(cli: Cli) -> Self {
        let (action, params, input) = match cli.command {
            CliCommand::Construct { kind, params } => (Action::Construct(kind), params, None),
            CliCommand::Verify { input, mode, params } => (Action::Verify(mode), params, Some(input)),
            CliCommand::Search { kind, params } => (Action::Search(kind), params, None),
            CliCommand::Table { k, r, n } => (
                Action::Table { k, r },
                Params {
                    n,
                    ..Params::default()
                },
                None,
            ),
        };
        let default_format = if matches!(action, Action::Table { .. }) { Format::Csv } else { Format::Json };
        Self {
            action,
            params,
            input,
            output: cli.io.output,
            format: cli.io.format.unwrap_or(default_format),
            use_cache: !cli.io.no_cache,
        }
    }

    /// Checks required flags and the output format before any work starts.
    pub fn validate(&self) -> Result<(), Error> {
        let p = &self.params;
        let need = |names: &[(&str, bool)]| -> Result<(), Error> {
            let missing: Vec<&str> = names.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
            if missing.is_empty() {
                Ok(())
            } else {
                Err(Error::Input(format!("missing required flags: {}", missing.join(", "))))
            }
        };
        let (k, r, i, n) = (p.k.is_some(), p.r.is_some(), p.i.is_some(), p.n.is_some());
        match self.action {
            Action::Construct(kind) => {
                match kind {
                    ConstructKind::AlphaBase => need(&[("--r", r), ("--p", p.p.is_some())])?,
                    ConstructKind::AlphaBlowup => need(&[("--r", r), ("--p", p.p.is_some()), ("--k", k)])?,
                    ConstructKind::AlphaFromBeta2 | ConstructKind::Beta2Small => need(&[("--k", k), ("--r", r)])?,
                    ConstructKind::BetaCycle | ConstructKind::BetaCliques | ConstructKind::BetaStep => {
                        need(&[("--i", i), ("--k", k), ("--r", r)])?
                    }
                    ConstructKind::Beta2Combine => need(&[("--r1", p.r1.is_some()), ("--r2", p.r2.is_some())])?,
                    ConstructKind::SatWitness => need(&[("--k", k), ("--r", r), ("--n", n)])?,
                }
                self.graph_format()
            }
            Action::Verify(mode) => {
                match mode {
                    VerifyMode::Saturated | VerifyMode::Alpha => need(&[("--r", r)])?,
                    VerifyMode::Beta => need(&[("--i", i), ("--r", r)])?,
                }
                self.json_only()
            }
            Action::Search(kind) => {
                match kind {
                    SearchKind::BetaExact => need(&[("--i", i), ("--k", k), ("--r", r), ("--max-n", p.max_n.is_some())])?,
                    SearchKind::AlphaBounded => {
                        need(&[("--k", k), ("--r", r), ("--max-part-size", p.max_part_size.is_some())])?
                    }
                }
                self.json_only()
            }
            Action::Table { k, r } => {
                if r.lo < 3 || k.hi < r.lo {
                    return Err(Error::Input(format!(
                        "need r >= 3 and some k >= r, got k = {}..{}, r = {}..{}",
                        k.lo, k.hi, r.lo, r.hi
                    )));
                }
                if self.format == Format::Dot {
                    return Err(Error::Input("table output is csv or json".into()));
                }
                Ok(())
            }
        }
    }

    fn graph_format(&self) -> Result<(), Error> {
        if self.format == Format::Csv {
            return Err(Error::Input("graphs are written as json or dot".into()));
        }
        Ok(())
    }

    fn json_only(&self) -> Result<(), Error> {
        if self.format != Format::Json {
            return Err(Error::Input("this subcommand writes json only".into()));
        }
        Ok(())
    }
}

/// Validates and dispatches one request.
pub fn run(req: &CommandRequest) -> RunReport {
    let start = Instant::now();
    let mut report = match req.validate() {
        Err(e) => RunReport::from(e),
        Ok(()) => match req.action {
            Action::Construct(_) => cmd_construct(req),
            Action::Verify(_) => cmd_verify(req),
            Action::Search(_) => cmd_search(req),
            Action::Table { .. } => cmd_table(req),
        },
    };
    report.timing = start.elapsed();
    report
}

enum Built {
    Alpha(AlphaWitness),
    Beta(BetaWitness),
    Sat(PartiteGraph, usize, GraphDocument),
}

fn build(req: &CommandRequest, kind: ConstructKind) -> Result<Built, Error> {
    let p = &req.params;
    let g = |o: Option<usize>| o.expect("validated");
    Ok(match kind {
        ConstructKind::AlphaBase => Built::Alpha(alpha_base(g(p.r), g(p.p))?),
        ConstructKind::AlphaBlowup => Built::Alpha(alpha_blowup(&alpha_base(g(p.r), g(p.p))?, g(p.k))?),
        ConstructKind::AlphaFromBeta2 => {
            let r = g(p.r);
            if r < 3 {
                return Err(Error::Input(format!("r = {r} must be at least 3")));
            }
            Built::Alpha(alpha_from_beta2(&best_beta2_witness(g(p.k), r - 1)?, r)?)
        }
        ConstructKind::BetaCycle => Built::Beta(cycle_power_witness(g(p.i), g(p.r), g(p.k))?),
        ConstructKind::BetaCliques => Built::Beta(disjoint_cliques_witness(g(p.i), g(p.r), g(p.k))?),
        ConstructKind::BetaStep => Built::Beta(beta_step_chain(g(p.i), g(p.k), g(p.r))?),
        ConstructKind::Beta2Small => Built::Beta(beta2_small_witness(g(p.k), g(p.r))?),
        ConstructKind::Beta2Combine => {
            let (r1, r2) = (g(p.r1), g(p.r2));
            if r1 < 3 || r2 < 3 {
                return Err(Error::Input(format!("need r1, r2 >= 3, got {r1}, {r2}")));
            }
            Built::Beta(beta2_combine(&best_beta2_witness(r1, r1 - 1)?, &best_beta2_witness(r2, r2 - 1)?)?)
        }
        ConstructKind::SatWitness => {
            let w = sat_witness(g(p.k), g(p.r), g(p.n))?;
            let doc = GraphDocument::from_graph(&w.graph).with_provenance(w.provenance.clone());
            Built::Sat(w.graph, g(p.r), doc)
        }
    })
}

pub fn cmd_construct(req: &CommandRequest) -> RunReport {
    let Action::Construct(kind) = req.action else {
        return RunReport::from(Error::Input("not a construct request".into()));
    };
    let built = match build(req, kind) {
        Ok(b) => b,
        Err(e) => return e.into(),
    };
    let (doc, summary) = match &built {
        Built::Alpha(w) => (
            w.to_document(),
            format!("alpha witness: k = {}, r = {}, {} vertices, value {}", w.k(), w.r(), w.graph().vertex_count(), w.value()),
        ),
        Built::Beta(w) => (
            w.to_document(),
            format!("beta witness: i = {}, k = {}, r = {}, {} vertices", w.i(), w.k(), w.r(), w.size()),
        ),
        Built::Sat(g, r, doc) => (
            doc.clone(),
            format!(
                "saturated graph: k = {}, r = {r}, {} vertices, {} edges",
                g.part_count(),
                g.vertex_count(),
                g.edge_count()
            ),
        ),
    };
    // re-check what will actually be written
    let text = doc.to_json();
    let recheck = GraphDocument::from_json(&text).and_then(|d| d.to_graph()).and_then(|(g, x)| match &built {
        Built::Alpha(w) => {
            let x = x.ok_or_else(|| Error::Parse("transversal lost in serialization".into()))?;
            verify_alpha_witness(&g, &x, w.r()).map(|_| ())
        }
        Built::Beta(w) => match beta_violation(&g, w.i(), w.r())? {
            Some(v) => Err(Error::Witness(v)),
            None => Ok(()),
        },
        Built::Sat(_, r, _) => match saturation_violation(&g, *r) {
            Some(v) => Err(Error::Witness(v)),
            None => Ok(()),
        },
    });
    if let Err(e) = recheck {
        return e.into();
    }
    let payload = match req.format {
        Format::Dot => {
            let (g, x) = doc.to_graph().expect("just parsed");
            to_dot(&g, x.as_ref())
        }
        _ => text,
    };
    RunReport::ok(summary, payload)
}

pub fn cmd_verify(req: &CommandRequest) -> RunReport {
    let Action::Verify(mode) = req.action else {
        return RunReport::from(Error::Input("not a verify request".into()));
    };
    let path = req.input.as_ref().expect("verify requests carry an input path");
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Error::Input(format!("cannot read {}: {e}", path.display())).into(),
    };
    let (g, x) = match GraphDocument::from_json(&text).and_then(|d| d.to_graph()) {
        Ok(gx) => gx,
        Err(e) => return e.into(),
    };
    let r = req.params.r.expect("validated");
    match verify_graph(&g, x.as_ref(), mode, r, req.params.i) {
        Err(e) => e.into(),
        Ok(Ok(value)) => {
            let mut out = json!({ "mode": mode_name(mode), "pass": true });
            if let Some(v) = value {
                out["value"] = json!(v);
            }
            let summary = match value {
                Some(v) => format!("pass ({} mode), value {v}", mode_name(mode)),
                None => format!("pass ({} mode)", mode_name(mode)),
            };
            RunReport::ok(summary, format!("{out}\n"))
        }
        Ok(Err(v)) => {
            let mut out = json!({ "mode": mode_name(mode), "pass": false });
            out["violation"] = violation_json(&v);
            RunReport::failed(
                RunStatus::VerificationFailed,
                format!("fail ({} mode): {v}", mode_name(mode)),
                format!("{out}\n"),
            )
        }
    }
}

/// Outer error: the request itself is invalid. Inner error: the graph fails.
fn verify_graph(
    g: &PartiteGraph,
    x: Option<&Transversal>,
    mode: VerifyMode,
    r: usize,
    i: Option<usize>,
) -> Result<Result<Option<usize>, Violation>, Error> {
    match mode {
        VerifyMode::Saturated => {
            if r < 2 {
                return Err(Error::Input(format!("r = {r} must be at least 2")));
            }
            Ok(saturation_violation(g, r).map_or(Ok(None), Err))
        }
        VerifyMode::Alpha => {
            let x = x.ok_or_else(|| Error::Input("alpha mode needs an \"X\" field in the graph file".into()))?;
            match verify_alpha_witness(g, x, r) {
                Ok(v) => Ok(Ok(Some(v))),
                Err(Error::Witness(v)) => Ok(Err(v)),
                Err(e) => Err(e),
            }
        }
        VerifyMode::Beta => {
            let i = i.expect("validated");
            Ok(beta_violation(g, i, r)?.map_or(Ok(None), Err))
        }
    }
}

fn mode_name(mode: VerifyMode) -> &'static str {
    match mode {
        VerifyMode::Saturated => "saturated",
        VerifyMode::Alpha => "alpha",
        VerifyMode::Beta => "beta",
    }
}

fn violation_json(v: &Violation) -> serde_json::Value {
    let detail = match v {
        Violation::NotTransversal(_) | Violation::Mismatch(_) => json!({}),
        Violation::TransversalEdge(a, b) => json!({ "edge": [a, b] }),
        Violation::Clique(vs) => json!({ "clique": vs }),
        Violation::UnsaturatedNonEdge(a, b) => json!({ "nonedge": [a, b] }),
        Violation::PartsDestroyCliques(ps) => json!({ "parts": ps }),
    };
    let mut out = json!({ "message": v.to_string() });
    if let (Some(o), Some(d)) = (out.as_object_mut(), detail.as_object()) {
        o.extend(d.clone());
    }
    out
}

fn partial_json(p: &Partial) -> serde_json::Value {
    json!({
        "status": "RESOURCE_EXHAUSTED",
        "nodes_explored": p.nodes_explored,
        "exhausted_through": p.exhausted_through,
        "best_value": p.best_value,
        "detail": p.detail,
    })
}

pub fn cmd_search(req: &CommandRequest) -> RunReport {
    let Action::Search(kind) = req.action else {
        return RunReport::from(Error::Input("not a search request".into()));
    };
    let p = &req.params;
    let budget = p.budget.unwrap_or(DEFAULT_NODE_BUDGET);
    let limits = SearchLimits::with_budget(budget);
    let seed = p.seed.unwrap_or(0);
    let query = match kind {
        SearchKind::BetaExact => format!(
            "beta-exact i={} k={} r={} max_n={} budget={budget}",
            p.i.unwrap(),
            p.k.unwrap(),
            p.r.unwrap(),
            p.max_n.unwrap()
        ),
        SearchKind::AlphaBounded => format!(
            "alpha-bounded k={} r={} max_part_size={} budget={budget} seed={seed}",
            p.k.unwrap(),
            p.r.unwrap(),
            p.max_part_size.unwrap()
        ),
    };
    let cache = req.use_cache.then(ResultCache::from_env);
    if let Some(c) = &cache {
        if let Ok(Some(hit)) = c.lookup(&query) {
            let mut report = RunReport::ok(format!("{query}: cached"), format!("{}\n", hit.outcome));
            report.cache_hit = true;
            return report;
        }
    }
    let outcome = match kind {
        SearchKind::BetaExact => beta_exact_with(p.i.unwrap(), p.k.unwrap(), p.r.unwrap(), p.max_n.unwrap(), &limits),
        SearchKind::AlphaBounded => {
            alpha_bounded_search_with(p.k.unwrap(), p.r.unwrap(), p.max_part_size.unwrap(), seed, &limits)
        }
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => return e.into(),
    };
    let value = outcome.to_json_value();
    let summary = match outcome.value {
        Some(v) if outcome.heuristic => format!("{query}: upper bound {v} (heuristic, seed {seed})"),
        Some(v) => format!("{query}: found {v} after {} nodes", outcome.nodes_explored),
        None => format!("{query}: exhausted after {} nodes", outcome.nodes_explored),
    };
    if let Some(c) = &cache {
        let witness = outcome.witness_document().map(|d| d.to_json());
        let rec = CacheRecord::new(query, value.clone(), witness.as_deref(), outcome.seed);
        if let Err(e) = c.append(&rec) {
            eprintln!("warning: could not write cache {}: {e}", c.path().display());
        }
    }
    RunReport::ok(summary, format!("{value}\n"))
}

pub fn cmd_table(req: &CommandRequest) -> RunReport {
    let Action::Table { k: ks, r: rs } = req.action else {
        return RunReport::from(Error::Input("not a table request".into()));
    };
    let n = req.params.n;
    let mut rows = Vec::new();
    for r in rs.iter().filter(|&r| r >= 3) {
        for k in ks.iter().filter(|&k| k >= r) {
            let rec = match bounds_table(k, r) {
                Ok(rec) => rec,
                Err(e) => return e.into(),
            };
            let sat = n.and_then(|n| {
                sat_witness(k, r, n)
                    .ok()
                    .map(|w| (w.graph.edge_count(), w.edge_bound(n)))
            });
            rows.push((rec, sat));
        }
    }
    let payload = match req.format {
        Format::Json => {
            let arr: Vec<serde_json::Value> = rows
                .iter()
                .map(|(rec, sat)| {
                    let mut v = serde_json::to_value(rec).expect("records serialize");
                    if n.is_some() {
                        v["sat_edges"] = json!(sat.map(|s| s.0));
                        v["sat_bound"] = json!(sat.map(|s| s.1));
                    }
                    v
                })
                .collect();
            format!("{}\n", serde_json::Value::Array(arr))
        }
        _ => {
            let mut out = String::from("k,r,lower,upper,exact,source");
            if n.is_some() {
                out.push_str(",sat_edges,sat_bound");
            }
            out.push('\n');
            for (rec, sat) in &rows {
                let exact = rec.exact.map(|e| e.to_string()).unwrap_or_default();
                let _ = write!(out, "{},{},{},{},{exact},{}", rec.k, rec.r, rec.lower, rec.upper, rec.source_label());
                if n.is_some() {
                    let (e, b) = sat.map_or((String::new(), String::new()), |(e, b)| (e.to_string(), b.to_string()));
                    let _ = write!(out, ",{e},{b}");
                }
                out.push('\n');
            }
            out
        }
    };
    RunReport::ok(format!("{} rows", rows.len()), payload)
}

/// Parses arguments, runs the request, writes the payload and returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let req = CommandRequest::from_cli(cli);
    let report = run(&req);
    if !report.payload.is_empty() {
        let written = match &req.output {
            Some(path) => std::fs::write(path, &report.payload),
            None => {
                use std::io::Write;
                std::io::stdout().write_all(report.payload.as_bytes())
            }
        };
        if let Err(e) = written {
            eprintln!("error: cannot write output: {e}");
            return 2;
        }
    }
    eprintln!("{}", report.summary);
    eprintln!(
        "elapsed {:.3}s{}",
        report.timing.as_secs_f64(),
        if report.cache_hit { " (cache hit)" } else { "" }
    );
    report.exit_code()
}
