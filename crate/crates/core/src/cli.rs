//! Command-line front end.
//!
//! Every JSON document written by a command carries a `manifest` object
//! (arguments, graph, options, version, seed). Re-running the recorded
//! arguments reproduces the same bytes apart from `elapsed_s`.
//!
//! Exit codes: 0 success / valid / optimal, 1 invalid certificate, interrupted
//! search or value mismatch, 2 invalid input.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::bound_report;
use crate::constructions::{verify_construction, ConstructionSpec};
use crate::equalizer::{is_distance_equalizer, CertificateJson, EqualizerInstance};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphJson};
use crate::solver::{random_connected_graph, solve_exact, SolveOptions, SolveReport, SolveStatus};
use crate::subsets::{johnson, kneser, GraphSpec};
use crate::vertex_set::VertexSet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "eqdim", version, about = "Equidistant dimension of graphs")]
pub struct Cli {
    /// Pretty-print JSON output.
    #[arg(long, global = true, conflicts_with = "json")]
    pub pretty: bool,

    /// Compact JSON output (the default; table1 switches from text to JSON).
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    Json,
    Edgelist,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a graph: johnson:n,k | kneser:n,k | path:n | cycle:n | star:n |
    /// complete:n | random:n,p (with --seed).
    Gen {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check whether a vertex set is a distance-equalizer set.
    Verify {
        /// Graph file (JSON or edge list) or family specifier.
        #[arg(long)]
        graph: String,
        /// Labels like "{1,2},{1,3}" or indices like "0,4,7".
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compute the equidistant dimension exactly.
    Solve {
        #[arg(long)]
        graph: String,
        #[command(flatten)]
        limits: LimitArgs,
        /// Disable orbit branching on k-subset graphs.
        #[arg(long)]
        no_symmetry: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Report lower and upper bounds with the rule that produced each.
    Bounds {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Verify an explicit construction: johnson2:n | johnson3:n | halved:k | kneser2:n.
    Construct { spec: String },
    /// Recompute the tabulated values for Johnson and Kneser graphs.
    Table1 {
        /// Only rows with these parameters, e.g. "8,3".
        #[arg(long)]
        only: Option<String>,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(clap::Args, Debug, Clone, Serialize)]
pub struct LimitArgs {
    /// Wall-clock limit in seconds.
    #[arg(long)]
    pub time_limit: Option<f64>,
    /// Search node limit.
    #[arg(long)]
    pub node_limit: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

impl LimitArgs {
    fn options(&self, symmetry: bool) -> SolveOptions {
        SolveOptions {
            time_limit: self.time_limit.map(Duration::from_secs_f64),
            node_limit: self.node_limit,
            initial_witness: None,
            threads: self.threads.max(1),
            symmetry,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: Vec<String>,
    pub graph: Option<String>,
    pub options: serde_json::Value,
    pub version: &'static str,
    pub seed: Option<u64>,
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    pretty: bool,
}

impl Io<'_> {
    fn json<T: Serialize>(&mut self, value: &T) -> Result<()> {
        let s = if self.pretty {
            serde_json::to_string_pretty(value)?
        } else {
            serde_json::to_string(value)?
        };
        writeln!(self.out, "{s}")?;
        Ok(())
    }
}

/// Runs the CLI on `args` (without the program name), writing to `out` and
/// `err`. Returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let argv = std::iter::once("eqdim".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let mut io = Io {
        out,
        err,
        pretty: cli.pretty,
    };
    let result = dispatch(&cli, args, &mut io);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn manifest(
    args: &[String],
    graph: Option<&str>,
    options: serde_json::Value,
    seed: Option<u64>,
) -> RunManifest {
    RunManifest {
        command: args.to_vec(),
        graph: graph.map(str::to_string),
        options,
        version: env!("CARGO_PKG_VERSION"),
        seed,
    }
}

/// Loads `--graph`: a family specifier, `random:n,p`, or a file path (JSON
/// when the content starts with `{`, otherwise edge-list text).
pub fn load_graph(arg: &str, seed: u64) -> Result<Graph> {
    if let Some(rest) = arg.trim().strip_prefix("random:") {
        let (n, p) = rest
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("bad random specifier `{arg}`")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count in `{arg}`")))?;
        let p: f64 = p
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad edge probability in `{arg}`")))?;
        return random_connected_graph(n, p, seed);
    }
    let path = std::path::Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        return if text.trim_start().starts_with('{') {
            Graph::from_json_str(&text)
        } else {
            Graph::parse_edge_list_text(&text)
        };
    }
    arg.parse::<GraphSpec>()?.build()
}

fn normalize_label(s: &str) -> String {
    let t = s.trim();
    if t.starts_with('{') && t.ends_with('}') {
        let inner = &t[1..t.len() - 1];
        let mut nums: Vec<std::result::Result<usize, String>> = inner
            .split(',')
            .filter(|x| !x.trim().is_empty())
            .map(|x| x.trim().parse::<usize>().map_err(|_| x.trim().to_string()))
            .collect();
        if nums.iter().all(|x| x.is_ok()) {
            nums.sort_by_key(|x| *x.as_ref().unwrap());
            let parts: Vec<String> = nums.into_iter().map(|x| x.unwrap().to_string()).collect();
            return format!("{{{}}}", parts.join(","));
        }
    }
    t.split_whitespace().collect()
}

/// Parses `--set`: brace labels (`{1,2},{3,4}`) matched against the graph
/// labels, or plain indices (`0,5 7`).
pub fn parse_vertex_set(g: &Graph, spec: &str) -> Result<VertexSet> {
    let mut set = VertexSet::new(g.n());
    let spec = spec.trim();
    if spec.contains('{') {
        let labels: Vec<String> = (0..g.n()).map(|v| normalize_label(&g.label(v))).collect();
        let mut rest = spec;
        while let Some(open) = rest.find('{') {
            let close = rest[open..]
                .find('}')
                .ok_or_else(|| Error::Parse(format!("unbalanced braces in `{spec}`")))?
                + open;
            let want = normalize_label(&rest[open..=close]);
            let v = labels
                .iter()
                .position(|l| *l == want)
                .ok_or_else(|| Error::UnknownLabel(rest[open..=close].to_string()))?;
            set.insert(v);
            rest = &rest[close + 1..];
        }
    } else {
        for tok in spec.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let v: usize = tok
                .parse()
                .map_err(|_| Error::UnknownLabel(tok.to_string()))?;
            if v >= g.n() {
                return Err(Error::UnknownLabel(tok.to_string()));
            }
            set.insert(v);
        }
    }
    Ok(set)
}

#[derive(Serialize)]
struct GenJson {
    #[serde(flatten)]
    graph: GraphJson,
    manifest: RunManifest,
}

#[derive(Serialize)]
struct VerifyJson {
    #[serde(flatten)]
    certificate: CertificateJson,
    violation_labels: Option<[String; 2]>,
    manifest: RunManifest,
}

#[derive(Serialize)]
pub struct SolveReportJson {
    pub value: usize,
    pub witness: Vec<usize>,
    pub witness_labels: Vec<String>,
    pub status: SolveStatus,
    pub nodes: u64,
    pub elapsed_s: f64,
    pub lower_trace: String,
    pub upper_trace: String,
}

impl SolveReportJson {
    pub fn new(g: &Graph, r: &SolveReport) -> SolveReportJson {
        let witness = r
            .witness
            .as_ref()
            .map(VertexSet::to_vec)
            .unwrap_or_default();
        SolveReportJson {
            value: r.value,
            witness_labels: witness.iter().map(|&v| g.label(v)).collect(),
            witness,
            status: r.status,
            nodes: r.nodes,
            elapsed_s: r.elapsed.as_secs_f64(),
            lower_trace: r.lower_trace.clone(),
            upper_trace: r.upper_trace.clone(),
        }
    }
}

#[derive(Serialize)]
struct WithManifest<T: Serialize> {
    #[serde(flatten)]
    body: T,
    manifest: RunManifest,
}

fn dispatch(cli: &Cli, args: &[String], io: &mut Io) -> Result<i32> {
    match &cli.command {
        Command::Gen {
            graph,
            out,
            format,
            seed,
        } => {
            let g = load_graph(graph, *seed)?;
            let m = manifest(
                args,
                Some(graph),
                serde_json::json!({ "format": format }),
                Some(*seed),
            );
            let text = match format {
                GraphFormat::Json => {
                    let body = GenJson {
                        graph: g.to_json_value(),
                        manifest: m,
                    };
                    let mut s = if io.pretty {
                        serde_json::to_string_pretty(&body)?
                    } else {
                        serde_json::to_string(&body)?
                    };
                    s.push('\n');
                    s
                }
                GraphFormat::Edgelist => g.to_edge_list_text(),
            };
            match out {
                Some(path) => {
                    std::fs::write(path, text)?;
                    writeln!(
                        io.err,
                        "wrote {} ({} vertices, {} edges)",
                        path.display(),
                        g.n(),
                        g.edge_count()
                    )?;
                }
                None => write!(io.out, "{text}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { graph, set, seed } => {
            let g = load_graph(graph, *seed)?;
            let s = parse_vertex_set(&g, set)?;
            let d = g.all_pairs_distances();
            if !d.is_connected() {
                return Err(Error::Disconnected {
                    components: d.component_count(),
                });
            }
            let cert = is_distance_equalizer(&d, &s);
            let body = VerifyJson {
                certificate: cert.to_json(Some(&g)),
                violation_labels: cert.violation.map(|p| [g.label(p.u), g.label(p.v)]),
                manifest: manifest(
                    args,
                    Some(graph),
                    serde_json::json!({ "set": set }),
                    Some(*seed),
                ),
            };
            io.json(&body)?;
            Ok(if cert.valid { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Solve {
            graph,
            limits,
            no_symmetry,
            seed,
        } => {
            let g = load_graph(graph, *seed)?;
            let r = solve_exact(&g, &limits.options(!no_symmetry));
            if r.status == SolveStatus::InfeasibleInput {
                writeln!(io.err, "error: {}", r.lower_trace)?;
                return Ok(EXIT_INPUT);
            }
            let body = WithManifest {
                body: SolveReportJson::new(&g, &r),
                manifest: manifest(
                    args,
                    Some(graph),
                    serde_json::json!({ "limits": limits, "symmetry": !no_symmetry }),
                    Some(*seed),
                ),
            };
            io.json(&body)?;
            Ok(if r.status == SolveStatus::Optimal {
                EXIT_OK
            } else {
                EXIT_FAIL
            })
        }
        Command::Bounds { graph, seed } => {
            let g = load_graph(graph, *seed)?;
            let inst = EqualizerInstance::build(&g.all_pairs_distances())?;
            let body = WithManifest {
                body: bound_report(&g, &inst),
                manifest: manifest(args, Some(graph), serde_json::json!({}), Some(*seed)),
            };
            io.json(&body)?;
            Ok(EXIT_OK)
        }
        Command::Construct { spec } => {
            let cspec: ConstructionSpec = spec.parse()?;
            let c = cspec.build()?;
            if let Some(w) = &c.warning {
                writeln!(io.err, "warning: {w}")?;
            }
            let check = verify_construction(&c)?;
            let body = WithManifest {
                body: check.to_json(&cspec.to_string(), &c),
                manifest: manifest(
                    args,
                    None,
                    serde_json::json!({ "construction": spec }),
                    None,
                ),
            };
            io.json(&body)?;
            Ok(if check.certificate.valid {
                EXIT_OK
            } else {
                EXIT_FAIL
            })
        }
        Command::Table1 { only, limits } => {
            let filter = match only {
                Some(s) => Some(parse_only(s)?),
                None => None,
            };
            let rows = table1_rows(filter, &limits.options(true))?;
            let ok = rows.iter().all(|r| r.pass);
            if cli.json || cli.pretty {
                let body = WithManifest {
                    body: serde_json::json!({ "rows": rows, "pass": ok }),
                    manifest: manifest(
                        args,
                        None,
                        serde_json::json!({ "only": only, "limits": limits }),
                        None,
                    ),
                };
                io.json(&body)?;
            } else {
                write!(io.out, "{}", render_table(&rows))?;
            }
            Ok(if ok { EXIT_OK } else { EXIT_FAIL })
        }
    }
}

fn parse_only(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("bad --only value `{s}` (expected n,k)"));
    let (n, k) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        n.trim().parse().map_err(|_| bad())?,
        k.trim().parse().map_err(|_| bad())?,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Johnson,
    Kneser,
}

/// Expected value: `Some(v)` or `None` for a disconnected graph.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub section: &'static str,
    pub n: usize,
    pub k: usize,
    pub graph: Kind,
    pub expected: Option<usize>,
    pub computed: Option<usize>,
    pub status: String,
    pub nodes: u64,
    pub elapsed_s: f64,
    pub pass: bool,
}

/// Tabulated targets: the four `(n, k)` table rows for both families, then
/// the small Johnson graphs settled separately.
pub const TABLE1: &[(&str, usize, usize, Kind, Option<usize>)] = &[
    ("table", 7, 3, Kind::Johnson, Some(5)),
    ("table", 7, 3, Kind::Kneser, Some(5)),
    ("table", 8, 3, Kind::Johnson, Some(8)),
    ("table", 8, 3, Kind::Kneser, Some(3)),
    ("table", 8, 4, Kind::Johnson, Some(7)),
    ("table", 8, 4, Kind::Kneser, None),
    ("table", 9, 3, Kind::Johnson, Some(7)),
    ("table", 9, 3, Kind::Kneser, Some(3)),
    ("small", 4, 2, Kind::Johnson, Some(2)),
    ("small", 5, 2, Kind::Johnson, Some(3)),
    ("small", 6, 3, Kind::Johnson, Some(10)),
];

pub fn table1_rows(filter: Option<(usize, usize)>, opts: &SolveOptions) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for &(section, n, k, kind, expected) in TABLE1 {
        if filter.is_some_and(|f| f != (n, k)) {
            continue;
        }
        let start = Instant::now();
        let g = match kind {
            Kind::Johnson => johnson(n, k)?.0,
            Kind::Kneser => kneser(n, k)?.0,
        };
        let r = solve_exact(&g, opts);
        let (computed, status) = match r.status {
            SolveStatus::InfeasibleInput => (None, "disconnected".to_string()),
            s => (Some(r.value), s.as_str().to_string()),
        };
        let pass = match expected {
            Some(v) => r.status == SolveStatus::Optimal && computed == Some(v),
            None => r.status == SolveStatus::InfeasibleInput,
        };
        rows.push(TableRow {
            section,
            n,
            k,
            graph: kind,
            expected,
            computed,
            status,
            nodes: r.nodes,
            elapsed_s: start.elapsed().as_secs_f64(),
            pass,
        });
    }
    Ok(rows)
}

pub fn render_table(rows: &[TableRow]) -> String {
    let mut s = String::new();
    let mut section = "";
    for r in rows {
        if r.section != section {
            section = r.section;
            let title = match section {
                "table" => "eqdim of J(n,k) and K(n,k), k >= 3",
                _ => "small Johnson graphs",
            };
            if !s.is_empty() {
                s.push('\n');
            }
            writeln!(s, "# {title}").unwrap();
            writeln!(
                s,
                "{:>3} {:>3}  {:<8} {:>8} {:>8}  {:<12} {:>10} {:>9}  result",
                "n", "k", "graph", "expected", "computed", "status", "nodes", "time_s"
            )
            .unwrap();
        }
        let name = match r.graph {
            Kind::Johnson => format!("J({},{})", r.n, r.k),
            Kind::Kneser => format!("K({},{})", r.n, r.k),
        };
        let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        writeln!(
            s,
            "{:>3} {:>3}  {:<8} {:>8} {:>8}  {:<12} {:>10} {:>9.3}  {}",
            r.n,
            r.k,
            name,
            show(r.expected),
            show(r.computed),
            r.status,
            r.nodes,
            r.elapsed_s,
            if r.pass { "PASS" } else { "FAIL" }
        )
        .unwrap();
    }
    s
}
