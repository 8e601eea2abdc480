//! The `eqtree` command line.
//!
//! Exit codes: 0 success or YES, 2 a valid run with a negative answer
//! (NO, or a coloring that fails verification), 3 timeout, 1 input or
//! usage error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::coloring::{
    self, decide_proper_interval, exact_solve_with_deadline, guaranteed_threshold, round_robin_color,
    verify_equitable_tree_coloring, Coloring, SolveOutcome,
};
use crate::error::Error;
use crate::gadgets::{
    build_interval_gadget, build_split_gadget, gen_random_interval, verify_maximal_clique_order, GadgetLayout,
};
use crate::graph::{self, derive_graph, Graph, IntervalRep};
use crate::io::{self, GraphSource, Labels};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "eqtree", version, about = "Equitable tree-colorings of interval graphs")]
pub struct Cli {
    /// Report style on standard output.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Kv)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// One `key=value` per line.
    Kv,
    /// A single JSON document.
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Round-robin coloring along the interval order, then verify it.
    Color {
        intervals: PathBuf,
        #[arg(long)]
        k: usize,
        /// Where to write the coloring (only written if it verifies).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide a proper interval graph; YES iff the clique number is at most 2k.
    Decide {
        intervals: PathBuf,
        #[arg(long)]
        k: usize,
        /// Where to write the certificate coloring on YES.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring against a graph or intervals file.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        /// Expected number of colors; must match the coloring header.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exhaustive search for an equitable tree-k-coloring (small inputs).
    Solve {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// Give up after this many seconds (exit 3).
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a gadget from a bin-packing file, or a random interval model.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// Bin-packing instance (gadget kinds only).
        input: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 100)]
        max_coord: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Graph file to write.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Intervals file to write (interval gadget and random kinds).
        #[arg(long)]
        intervals_out: Option<PathBuf>,
        /// Labels file to write (gadget kinds).
        #[arg(long)]
        labels_out: Option<PathBuf>,
    },
    /// Print size, degree and clique statistics of an intervals file.
    Analyze { intervals: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    SplitGadget,
    IntervalGadget,
    Random,
    RandomProper,
}

/// What a command reports on standard output.
#[derive(Debug, Clone, Default, Serialize)]
pub struct RunReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub answer: Option<bool>,
    /// YES, NO, TIMEOUT, VERIFIED or FAILED where applicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<String>,
    pub statistics: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub class_sizes: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub artifacts: Vec<String>,
}

impl RunReport {
    fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            ..Default::default()
        }
    }

    fn stat(&mut self, key: &str, value: usize) {
        self.statistics.insert(key.to_string(), value as i64);
    }

    fn graph_stats(&mut self, g: &Graph) {
        self.stat("n", g.vertex_count());
        self.stat("m", g.edge_count());
        self.stat("max_degree", g.max_degree());
    }

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                serde_json::to_string_pretty(self).expect("report serializes") + "\n"
            }
            OutputFormat::Kv => {
                let mut out = format!("command={}\n", self.command);
                if let Some(r) = &self.result {
                    out += &format!("result={r}\n");
                }
                if let Some(a) = self.answer {
                    out += &format!("answer={a}\n");
                }
                for (key, value) in &self.statistics {
                    out += &format!("{key}={value}\n");
                }
                if !self.class_sizes.is_empty() {
                    let sizes: Vec<String> = self.class_sizes.iter().map(|s| s.to_string()).collect();
                    out += &format!("class_sizes={}\n", sizes.join(","));
                }
                if let Some(f) = &self.failure {
                    out += &format!("failure={f}\n");
                }
                if let Some(w) = &self.witness {
                    out += &format!("witness={w}\n");
                }
                for a in &self.artifacts {
                    out += &format!("artifact={a}\n");
                }
                out
            }
        }
    }
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => f.write_str(m),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

type CmdResult = Result<(i32, RunReport), CliError>;

/// Parse `args` (including the program name) and run the command. Reports
/// go to `out`, diagnostics to `err`; the return value is the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ERROR,
            };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((code, report)) => {
            let _ = out.write_all(report.render(cli.format).as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn execute(command: &Command) -> CmdResult {
    match command {
        Command::Color { intervals, k, out } => cmd_color(intervals, *k, out.as_deref()),
        Command::Decide { intervals, k, out } => cmd_decide(intervals, *k, out.as_deref()),
        Command::Verify { graph, coloring, k } => cmd_verify(graph, coloring, *k),
        Command::Solve {
            graph,
            k,
            timeout,
            out,
        } => cmd_solve(graph, *k, *timeout, out.as_deref()),
        Command::Gen {
            kind,
            input,
            n,
            max_coord,
            seed,
            out,
            intervals_out,
            labels_out,
        } => cmd_gen(
            *kind,
            input.as_deref(),
            RandomParams {
                n: *n,
                max_coord: *max_coord,
                seed: *seed,
            },
            Outputs {
                graph: out.as_deref(),
                intervals: intervals_out.as_deref(),
                labels: labels_out.as_deref(),
            },
        ),
        Command::Analyze { intervals } => cmd_analyze(intervals),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, contents: &str, report: &mut RunReport) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
    report.artifacts.push(path.display().to_string());
    Ok(())
}

fn with_path<T>(path: &Path, r: crate::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_intervals(path: &Path) -> Result<IntervalRep, CliError> {
    with_path(path, io::parse_intervals(&read(path)?))
}

fn require_k(k: usize) -> Result<(), CliError> {
    if k < 1 {
        return Err(CliError::Input("--k must be at least 1".into()));
    }
    Ok(())
}

fn record_coloring(report: &mut RunReport, c: &Coloring) {
    report.stat("k", c.k());
    report.class_sizes = c.class_sizes();
}

fn cmd_color(path: &Path, k: usize, out: Option<&Path>) -> CmdResult {
    require_k(k)?;
    let rep = read_intervals(path)?;
    let g = derive_graph(&rep);
    let mut report = RunReport::new("color");
    report.graph_stats(&g);
    report.stat("threshold", guaranteed_threshold(g.max_degree()));
    let c = round_robin_color(&rep, k)?;
    record_coloring(&mut report, &c);
    let verdict = verify_equitable_tree_coloring(&g, &c)?;
    report.answer = Some(verdict.is_ok());
    report.failure = Some(verdict.kind().to_string());
    if let Some(f) = verdict.failure() {
        report.result = Some("FAILED".into());
        report.witness = Some(f.to_string());
        return Ok((EXIT_NEGATIVE, report));
    }
    report.result = Some("VERIFIED".into());
    if let Some(p) = out {
        write(p, &io::write_coloring(&c), &mut report)?;
    }
    Ok((EXIT_OK, report))
}

fn cmd_decide(path: &Path, k: usize, out: Option<&Path>) -> CmdResult {
    require_k(k)?;
    let rep = read_intervals(path)?;
    let decision = decide_proper_interval(&rep, k).map_err(|e| match e {
        Error::NotProper { outer, inner } => CliError::Input(format!(
            "{}: not a proper representation: interval of vertex {outer} {} strictly contains interval of vertex {inner} {}",
            path.display(),
            fmt_interval(&rep, outer),
            fmt_interval(&rep, inner)
        )),
        other => CliError::Lib(other),
    })?;
    let g = derive_graph(&rep);
    let mut report = RunReport::new("decide");
    report.graph_stats(&g);
    report.stat("k", k);
    report.stat("omega", decision.clique_number);
    report.answer = Some(decision.answer);
    match &decision.certificate {
        Some(c) => {
            report.result = Some("YES".into());
            report.class_sizes = c.class_sizes();
            if let Some(p) = out {
                write(p, &io::write_coloring(c), &mut report)?;
            }
            Ok((EXIT_OK, report))
        }
        None => {
            report.result = Some("NO".into());
            report.witness = Some(format!("clique number {} exceeds 2k = {}", decision.clique_number, 2 * k));
            Ok((EXIT_NEGATIVE, report))
        }
    }
}

fn fmt_interval(rep: &IntervalRep, v: usize) -> String {
    let t = rep.interval(v);
    format!("[{}, {}]", t.left, t.right)
}

fn read_graph_source(path: &Path) -> Result<GraphSource, CliError> {
    with_path(path, io::parse_graph_source(&read(path)?))
}

fn cmd_verify(graph_path: &Path, coloring_path: &Path, k: Option<usize>) -> CmdResult {
    let g = read_graph_source(graph_path)?.graph();
    let c = with_path(coloring_path, io::parse_coloring(&read(coloring_path)?))?;
    if c.len() != g.vertex_count() {
        return Err(CliError::Input(format!(
            "coloring covers {} vertices but the graph has {}",
            c.len(),
            g.vertex_count()
        )));
    }
    if let Some(k) = k {
        if k != c.k() {
            return Err(CliError::Input(format!("--k {k} does not match the coloring's k = {}", c.k())));
        }
    }
    let mut report = RunReport::new("verify");
    report.graph_stats(&g);
    record_coloring(&mut report, &c);
    let verdict = verify_equitable_tree_coloring(&g, &c)?;
    report.answer = Some(verdict.is_ok());
    report.failure = Some(verdict.kind().to_string());
    match verdict.failure() {
        None => {
            report.result = Some("VERIFIED".into());
            Ok((EXIT_OK, report))
        }
        Some(f) => {
            report.result = Some("FAILED".into());
            report.witness = Some(f.to_string());
            Ok((EXIT_NEGATIVE, report))
        }
    }
}

fn cmd_solve(path: &Path, k: usize, timeout: Option<f64>, out: Option<&Path>) -> CmdResult {
    require_k(k)?;
    let deadline = match timeout {
        None => None,
        Some(s) if s.is_finite() && s >= 0.0 => Some(Instant::now() + Duration::from_secs_f64(s)),
        Some(s) => return Err(CliError::Input(format!("invalid --timeout {s}"))),
    };
    let g = read_graph_source(path)?.graph();
    let mut report = RunReport::new("solve");
    report.graph_stats(&g);
    report.stat("k", k);
    match exact_solve_with_deadline(&g, k, deadline)? {
        SolveOutcome::Found(c) => {
            // the search is exact, but re-check before handing it out
            if !verify_equitable_tree_coloring(&g, &c)?.is_ok() {
                return Err(Error::Consistency("exact search returned an invalid coloring".into()).into());
            }
            report.answer = Some(true);
            report.result = Some("YES".into());
            report.class_sizes = c.class_sizes();
            if let Some(p) = out {
                write(p, &io::write_coloring(&c), &mut report)?;
            }
            Ok((EXIT_OK, report))
        }
        SolveOutcome::Infeasible => {
            report.answer = Some(false);
            report.result = Some("NO".into());
            Ok((EXIT_NEGATIVE, report))
        }
        SolveOutcome::TimedOut => {
            report.result = Some("TIMEOUT".into());
            Ok((EXIT_TIMEOUT, report))
        }
    }
}

struct RandomParams {
    n: Option<usize>,
    max_coord: i64,
    seed: u64,
}

struct Outputs<'a> {
    graph: Option<&'a Path>,
    intervals: Option<&'a Path>,
    labels: Option<&'a Path>,
}

fn cmd_gen(kind: GenKind, input: Option<&Path>, params: RandomParams, outputs: Outputs<'_>) -> CmdResult {
    let mut report = RunReport::new("gen");
    let (g, rep, labels) = match kind {
        GenKind::SplitGadget | GenKind::IntervalGadget => {
            let path = input.ok_or_else(|| CliError::Input("gadget kinds need a bin-packing file".into()))?;
            let inst = with_path(path, io::parse_binpacking(&read(path)?))?;
            let layout = if kind == GenKind::SplitGadget {
                build_split_gadget(&inst)?
            } else {
                build_interval_gadget(&inst)?
            };
            validate_gadget(&layout)?;
            report.stat("items", inst.items().len());
            report.stat("k", inst.bins());
            report.stat("capacity", inst.capacity());
            let labels = Labels {
                kind: layout.kind().name().to_string(),
                parts: layout.labels(),
            };
            (layout.graph().clone(), layout.rep().cloned(), Some(labels))
        }
        GenKind::Random | GenKind::RandomProper => {
            let n = params.n.ok_or_else(|| CliError::Input("random kinds need --n".into()))?;
            let proper = kind == GenKind::RandomProper;
            let rep = gen_random_interval(n, params.max_coord, params.seed, proper)?;
            if proper && !graph::is_proper_representation(&rep) {
                return Err(Error::Construction("generated representation is not proper".into()).into());
            }
            report.stat("seed", params.seed as usize);
            (derive_graph(&rep), Some(rep), None)
        }
    };
    report.graph_stats(&g);
    if let Some(rep) = &rep {
        report.stat("omega", graph::max_clique_sweep(rep));
    }
    if let Some(p) = outputs.graph {
        write(p, &io::write_graph(&g), &mut report)?;
    }
    if let Some(p) = outputs.intervals {
        let rep = rep
            .as_ref()
            .ok_or_else(|| CliError::Input("split gadgets have no interval model; drop --intervals-out".into()))?;
        write(p, &io::write_intervals(rep), &mut report)?;
    }
    if let Some(p) = outputs.labels {
        let labels = labels
            .as_ref()
            .ok_or_else(|| CliError::Input("random kinds have no labels; drop --labels-out".into()))?;
        write(p, &io::write_labels(labels), &mut report)?;
    }
    report.result = Some("VALIDATED".into());
    Ok((EXIT_OK, report))
}

/// Structural checks run before any gadget file is written.
fn validate_gadget(layout: &GadgetLayout) -> Result<(), CliError> {
    layout.check_well_formed()?;
    let inst = layout.instance();
    let (n, k, b) = (inst.items().len(), inst.bins(), inst.capacity());
    let expected = match layout.kind() {
        crate::gadgets::GadgetKind::Split => k * (2 * n + b),
        crate::gadgets::GadgetKind::Interval => k * (4 * k - 1) * b,
    };
    let fail = |m: String| CliError::Lib(Error::Construction(m));
    if layout.graph().vertex_count() != expected {
        return Err(fail(format!(
            "gadget has {} vertices, expected {expected}",
            layout.graph().vertex_count()
        )));
    }
    if layout.kind() == crate::gadgets::GadgetKind::Interval {
        if !verify_maximal_clique_order(layout)? {
            return Err(fail("maximal cliques are not consecutively ordered".into()));
        }
        if !graph::is_star_free(layout.graph(), 4)? {
            return Err(fail("interval gadget contains an induced K_{1,4}".into()));
        }
        let omega = graph::max_clique_sweep(layout.rep().expect("interval gadgets carry a model"));
        if omega != 2 * k {
            return Err(fail(format!("clique number {omega}, expected 2k = {}", 2 * k)));
        }
    }
    Ok(())
}

fn cmd_analyze(path: &Path) -> CmdResult {
    let rep = read_intervals(path)?;
    let g = derive_graph(&rep);
    let mut report = RunReport::new("analyze");
    report.graph_stats(&g);
    let omega = graph::max_clique_sweep(&rep);
    report.stat("omega", omega);
    report.stat("threshold", guaranteed_threshold(g.max_degree()));
    let proper = graph::is_proper_representation(&rep);
    report.stat("proper", proper as usize);
    if proper {
        report.stat("min_k", coloring::min_colors_proper(&rep)?);
    }
    Ok((EXIT_OK, report))
}
