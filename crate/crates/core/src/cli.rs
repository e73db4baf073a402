//! The `mjdist` command line. [`run`] takes the argument list and returns
//! the exit code and both output streams, so tests can drive it directly.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::aut::{is_asymmetric, is_determining_set_with, search_with, SearchConfig, DEFAULT_NODE_BUDGET};
use crate::certificate::{verify_certificate_with, Certificate, Rejection};
use crate::combinatorics::{KSubset, Permutation};
use crate::dist::{brute_force_dist, classify_dist, determining_set_for, distinguishing_number_with, DistOptions};
use crate::error::Error;
use crate::graph::{Graph, MergedJohnsonSpec};
use crate::group_actions::{count_fixed_equipartitions, lemma_bound};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "mjdist", version, about = "Distinguishing numbers of merged Johnson graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute Dist(J(n,k)_I) with a checked certificate
    Dist {
        #[command(flatten)]
        spec: SpecArgs,
        /// Write the certificate as JSON to this path
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Node budget for each automorphism search
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Draws allowed for the random 3-coloring
        #[arg(long, default_value_t = 100)]
        max_attempts: usize,
    },
    /// Re-check a certificate file
    Verify {
        #[arg(long)]
        certificate: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Test whether a vertex set is determining
    Detset {
        #[command(flatten)]
        graph: GraphArgs,
        /// Use the constructed set for this family
        #[arg(long, value_enum, conflicts_with = "vertices")]
        family: Option<Family>,
        /// One vertex per line: a k-subset such as `1 2 3`, or a 1-based
        /// index for --edges graphs
        #[arg(long)]
        vertices: Option<PathBuf>,
    },
    /// Automorphism group order and search statistics
    Aut {
        #[command(flatten)]
        graph: GraphArgs,
        /// Print only the group order
        #[arg(long)]
        order: bool,
        #[arg(long)]
        stats: bool,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Write the graph as an edge list or in DIMACS format
    Export {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        /// Output file; stdout when absent
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Count equipartitions of [2m] fixed by a permutation
    FixedCount {
        #[arg(long)]
        m: usize,
        /// Cycle notation, e.g. "(1 2)(3 4)"
        #[arg(long)]
        perm: String,
    },
    /// Exact value of the union bound for random 3-colorings of equipartitions
    Bound {
        #[arg(long)]
        m: u64,
    },
    /// Distinguishing number by exhaustive search
    Oracle {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 4)]
        max_r: usize,
    },
}

#[derive(Args, Debug)]
struct SpecArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Index set I as a comma list, e.g. 1,3
    #[arg(long = "set")]
    set: String,
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[arg(long, requires_all = ["k", "set"], conflicts_with = "edges")]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long = "set")]
    set: Option<String>,
    /// Edge-list file (`u v` per line, 1-based) instead of a spec
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Builtin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Dimacs,
}

/// Result of one invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NodeBudget(_)
            | Error::VertexBudget { .. }
            | Error::EnumerationBudget(_)
            | Error::AttemptsExhausted(_) => EXIT_BUDGET,
            Error::Internal(_) => EXIT_VERIFY,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<String, Failure>;

/// Runs the command line; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Dist {
            spec,
            certificate,
            seed,
            budget,
            max_attempts,
        } => run_dist(&spec, certificate, seed, budget, max_attempts),
        Command::Verify { certificate, budget } => run_verify(certificate, budget),
        Command::Detset { graph, family, vertices } => run_detset(&graph, family, vertices),
        Command::Aut {
            graph,
            order,
            stats,
            budget,
        } => run_aut(&graph, order, stats, budget),
        Command::Export { spec, format, output } => run_export(&spec, format, output),
        Command::FixedCount { m, perm } => {
            let sigma = Permutation::parse_cycles(&perm, 2 * m, false)?;
            Ok(format!("{}\n", count_fixed_equipartitions(&sigma)?))
        }
        Command::Bound { m } => {
            let b = lemma_bound(m)?;
            let relation = if b.is_less_than_one() { "<" } else { ">=" };
            Ok(format!("{b} {relation} 1\n"))
        }
        Command::Oracle { graph, max_r } => {
            let (g, name) = load_graph(&graph)?;
            Ok(format!("Dist({name}) = {}\n", brute_force_dist(&g, max_r)?))
        }
    }
}

fn parse_index_set(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::usage(format!("bad index {t:?} in --set"))))
        .collect()
}

fn parse_spec(args: &SpecArgs) -> Result<MergedJohnsonSpec, Failure> {
    Ok(MergedJohnsonSpec::canonicalize(args.n, args.k, &parse_index_set(&args.set)?)?)
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn parse_numbers(line: &str) -> Result<Vec<usize>, Failure> {
    line.split(|c: char| c.is_whitespace() || matches!(c, ',' | '{' | '}' | '[' | ']'))
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::usage(format!("bad number {t:?}"))))
        .collect()
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with('c'))
}

fn load_edge_list(path: &PathBuf) -> Result<Graph, Failure> {
    let text = read(path)?;
    let mut edges = Vec::new();
    let mut declared = 0;
    for line in content_lines(&text) {
        let (line, header) = match line.strip_prefix('p') {
            Some(rest) => (rest.trim_start().trim_start_matches("edge"), true),
            None => (line.strip_prefix('e').unwrap_or(line), false),
        };
        let nums = parse_numbers(line)?;
        match (header, nums.as_slice()) {
            (true, [v, _]) => declared = *v,
            (false, [u, v]) if *u >= 1 && *v >= 1 => edges.push((u - 1, v - 1)),
            _ => return Err(Failure::usage(format!("bad edge line {line:?}"))),
        }
    }
    let nv = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0).max(declared);
    Ok(Graph::from_edges(nv, &edges)?)
}

fn load_graph(args: &GraphArgs) -> Result<(Graph, String), Failure> {
    match (&args.edges, args.n, args.k, &args.set) {
        (Some(path), None, None, None) => Ok((load_edge_list(path)?, path.display().to_string())),
        (None, Some(n), Some(k), Some(set)) => {
            let spec = MergedJohnsonSpec::canonicalize(n, k, &parse_index_set(set)?)?;
            Ok((Graph::build(&spec)?, spec.to_string()))
        }
        _ => Err(Failure::usage("give either --n, --k and --set, or --edges")),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run_dist(args: &SpecArgs, certificate: Option<PathBuf>, seed: u64, budget: u64, max_attempts: usize) -> CmdResult {
    let spec = parse_spec(args)?;
    let opts = DistOptions {
        seed,
        node_budget: budget,
        max_attempts,
        ..DistOptions::default()
    };
    let cert = distinguishing_number_with(&spec, &opts)?;
    let mut out = format!("Dist({spec}) = {}, {}\n", cert.dist, classify_dist(&spec));
    let upper = serde_json::to_value(cert.upper.method).expect("method serializes");
    let lower = serde_json::to_value(cert.lower.method).expect("method serializes");
    writeln!(out, "upper: {}", upper.as_str().unwrap_or_default()).unwrap();
    writeln!(out, "lower: {} ({})", lower.as_str().unwrap_or_default(), cert.lower.detail).unwrap();
    if let Some(path) = certificate {
        fs::write(&path, cert.to_json() + "\n").map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        writeln!(out, "certificate: {}", path.display()).unwrap();
    }
    Ok(out)
}

fn run_verify(path: PathBuf, budget: u64) -> CmdResult {
    let text = read(&path)?;
    let cert = Certificate::from_json(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    match verify_certificate_with(&cert, &SearchConfig { node_budget: budget }) {
        Ok(()) => {
            let spec = cert.spec()?;
            Ok(format!("verified: Dist({spec}) = {}\n", cert.dist))
        }
        Err(Rejection::Engine(e)) => Err(e.into()),
        Err(r) => Err(Failure {
            code: if matches!(r, Rejection::Spec(_)) { EXIT_USAGE } else { EXIT_VERIFY },
            message: format!("verification failed [{}]: {r}", r.code()),
        }),
    }
}

fn run_detset(args: &GraphArgs, family: Option<Family>, vertices: Option<PathBuf>) -> CmdResult {
    let (g, _) = load_graph(args)?;
    let set: Vec<usize> = match (family, vertices) {
        (Some(Family::Builtin), None) => {
            let (Some(n), Some(k), Some(set)) = (args.n, args.k, &args.set) else {
                return Err(Failure::usage("--family builtin needs --n, --k and --set"));
            };
            let spec = MergedJohnsonSpec::canonicalize(n, k, &parse_index_set(set)?)?;
            determining_set_for(&spec)?.0
        }
        (None, Some(path)) => {
            let text = read(&path)?;
            let mut set = Vec::new();
            for line in content_lines(&text) {
                let nums = parse_numbers(line)?;
                let v = match args.n {
                    Some(n) => {
                        let s = KSubset::from_elements(n, &nums)?;
                        g.vertex_of(&s)
                            .ok_or_else(|| Failure::usage(format!("{s} is not a vertex of this graph")))?
                    }
                    None => match nums.as_slice() {
                        [v] if (1..=g.n_vertices()).contains(v) => v - 1,
                        _ => return Err(Failure::usage(format!("bad vertex line {line:?}"))),
                    },
                };
                if set.contains(&v) {
                    return Err(Error::DuplicateVertex(v + 1).into());
                }
                set.push(v);
            }
            set
        }
        _ => return Err(Failure::usage("give exactly one of --family or --vertices")),
    };
    let determining = is_determining_set_with(&g, &set, &SearchConfig::default())?;
    let asymmetric = is_asymmetric(&g.induced_subgraph(&set)?)?;
    Ok(format!(
        "vertices: {}\ndetermining: {}, asymmetric induced: {}\n",
        set.len(),
        yes_no(determining),
        yes_no(asymmetric)
    ))
}

fn run_aut(args: &GraphArgs, order_only: bool, stats: bool, budget: u64) -> CmdResult {
    let (g, _) = load_graph(args)?;
    let result = search_with(&g, None, &[], &SearchConfig { node_budget: budget })?;
    if order_only && !stats {
        return Ok(format!("{}\n", result.group_order));
    }
    let mut out = format!("order: {}\ngenerators: {}\n", result.group_order, result.generators.len());
    if stats {
        let s = &result.stats;
        writeln!(out, "nodes: {}\nleaves: {}\nmax depth: {}", s.nodes, s.leaves, s.max_depth).unwrap();
        writeln!(out, "time: {:.3} ms", s.elapsed.as_secs_f64() * 1e3).unwrap();
    }
    Ok(out)
}

fn run_export(args: &SpecArgs, format: Format, output: Option<PathBuf>) -> CmdResult {
    let g = Graph::build(&parse_spec(args)?)?;
    let mut text = String::new();
    if format == Format::Dimacs {
        writeln!(text, "p edge {} {}", g.n_vertices(), g.edge_count()).unwrap();
    }
    let prefix = if format == Format::Dimacs { "e " } else { "" };
    for (u, v) in g.edges() {
        writeln!(text, "{prefix}{} {}", u + 1, v + 1).unwrap();
    }
    match output {
        Some(path) => {
            fs::write(&path, &text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            Ok(format!("wrote {} edges to {}\n", g.edge_count(), path.display()))
        }
        None => Ok(text),
    }
}
