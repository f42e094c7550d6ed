//! The `ttstudio` command line.
//!
//! Exit codes: 0 on success, 1 when the input is well formed but rejected
//! (illegal graph, failed checks), 2 for usage and I/O errors.

use std::ffi::OsString;
use std::fs;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::checks::{has_errors, static_checks, Severity};
use crate::compiler::compile;
use crate::emitter::emit;
use crate::format::{parse_graph, serialize_graph, ParseError};
use crate::generator::{gen_instance, GeneratorSpec};
use crate::graph::{Graph, NodeId};
use crate::grid::Slot;
use crate::service::{self, status_str, stats_json, ServiceConfig};
use crate::solver::{solve, SolverConfig};
use crate::timetable::{grid_to_text, render_grids};

#[derive(Debug, Parser)]
#[command(name = "ttstudio", version, about = "Graph-based university timetabling")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a graph and run the static checks.
    Check { graph: PathBuf },
    /// Print the constraint program for a graph.
    Compile {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve a graph and print the best timetable.
    Solve(SolveArgs),
    /// Print weekly grids for a stored solution.
    Render { graph: PathBuf, solution: PathBuf },
    /// Run the HTTP API.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
    /// Write a synthetic instance.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
struct SolveArgs {
    graph: PathBuf,
    /// Time limit in milliseconds.
    #[arg(long)]
    time_limit: Option<u64>,
    #[arg(long)]
    max_solutions: Option<usize>,
    /// Enumerate solutions instead of maximizing the wish score.
    #[arg(long)]
    no_optimize: bool,
    /// Write the best solution as JSON.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    courses: u32,
    #[arg(long, default_value_t = 2)]
    groups: u32,
    #[arg(long, default_value_t = 2)]
    lecturers: u32,
    #[arg(long, default_value_t = 2)]
    tas: u32,
    #[arg(long, default_value_t = 2)]
    tutorials_per_course: u32,
    #[arg(long, default_value_t = 0)]
    wishes: u32,
    #[arg(short, long)]
    output: PathBuf,
}

/// Contents of a solution file written by `solve --out`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub assignments: IndexMap<NodeId, Slot>,
    pub score: u32,
    #[serde(default)]
    pub stats: Value,
}

struct Failure {
    exit: i32,
    code: &'static str,
    message: String,
}

fn usage(code: &'static str, message: impl Into<String>) -> Failure {
    Failure {
        exit: 2,
        code,
        message: message.into(),
    }
}

fn rejected(code: &'static str, message: impl Into<String>) -> Failure {
    Failure {
        exit: 1,
        code,
        message: message.into(),
    }
}

/// Runs the command line and returns the process exit code.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let exit = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return exit;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error[{}]: {}", f.code, f.message);
            f.exit
        }
    }
}

fn dispatch(command: Command) -> Result<(), Failure> {
    match command {
        Command::Check { graph } => check(&graph),
        Command::Compile { graph, output } => compile_cmd(&graph, output.as_deref()),
        Command::Solve(args) => solve_cmd(&args),
        Command::Render { graph, solution } => render_cmd(&graph, &solution),
        Command::Serve { port } => serve_cmd(port),
        Command::Gen(args) => gen_cmd(&args),
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| usage("IoError", format!("{}: {e}", path.display())))
}

fn write(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| usage("IoError", format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| match e {
        ParseError::Syntax { .. } => usage("SyntaxError", format!("{}: {e}", path.display())),
        ParseError::Semantic(_) => rejected("SemanticError", format!("{}: {e}", path.display())),
    })
}

fn compiled(graph: &Graph) -> Result<crate::model::ConstraintModel, Failure> {
    compile(graph).map_err(|e| {
        for f in &e.findings {
            eprintln!("{:?} {} {}: {}", f.severity, f.code, f.node, f.message);
        }
        rejected("CompileError", e.to_string())
    })
}

fn check(path: &Path) -> Result<(), Failure> {
    let graph = load(path)?;
    let findings = static_checks(&graph);
    for f in &findings {
        let severity = match f.severity {
            Severity::Warning => "warning",
            Severity::Error => "error",
        };
        println!("{severity} {} {}: {}", f.code, f.node, f.message);
    }
    println!(
        "{} nodes, {} links, {} findings",
        graph.node_count(),
        graph.links().len(),
        findings.len()
    );
    if has_errors(&findings) {
        return Err(rejected("CheckFailed", "static checks reported errors"));
    }
    Ok(())
}

fn compile_cmd(path: &Path, output: Option<&Path>) -> Result<(), Failure> {
    let graph = load(path)?;
    let program = emit(&compiled(&graph)?);
    match output {
        Some(out) => write(out, format!("{}\n", program.text).as_bytes()),
        None => {
            println!("{}", program.text);
            Ok(())
        }
    }
}

fn solve_cmd(args: &SolveArgs) -> Result<(), Failure> {
    let graph = load(&args.graph)?;
    let model = compiled(&graph)?;
    let config = SolverConfig {
        time_limit: args.time_limit.map(Duration::from_millis),
        max_solutions: args.max_solutions,
        optimize: !args.no_optimize,
        ..SolverConfig::default()
    };
    let outcome = solve(&model, &config);
    println!(
        "status {}, {} solutions, {} nodes, {} failures, {} ms",
        status_str(outcome.status),
        outcome.solutions.len(),
        outcome.stats.nodes_explored,
        outcome.stats.failures,
        outcome.stats.elapsed.as_millis()
    );
    // Unsat and timeouts are answers, not failures.
    let Some(best) = outcome.best() else {
        return Ok(());
    };
    println!("score {}", best.score);
    print_grids(&graph, &best.assignment)?;
    if let Some(out) = &args.out {
        let file = SolutionFile {
            assignments: best.assignment.clone(),
            score: best.score,
            stats: stats_json(&outcome.stats),
        };
        let mut bytes = serde_json::to_vec_pretty(&file).expect("solution serializes");
        bytes.push(b'\n');
        write(out, &bytes)?;
    }
    Ok(())
}

fn print_grids(graph: &Graph, assignment: &IndexMap<NodeId, Slot>) -> Result<(), Failure> {
    let grids = render_grids(assignment, graph).map_err(|e| rejected("RenderError", e.to_string()))?;
    for grid in grids {
        println!();
        print!("{}", grid_to_text(&grid, graph));
    }
    Ok(())
}

fn render_cmd(graph: &Path, solution: &Path) -> Result<(), Failure> {
    let graph = load(graph)?;
    let file: SolutionFile = serde_json::from_slice(&read(solution)?)
        .map_err(|e| usage("SyntaxError", format!("{}: {e}", solution.display())))?;
    print_grids(&graph, &file.assignments)
}

fn serve_cmd(port: u16) -> Result<(), Failure> {
    let runtime = tokio::runtime::Runtime::new().map_err(|e| usage("IoError", e.to_string()))?;
    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    eprintln!("listening on http://{addr}");
    runtime
        .block_on(service::serve(addr, ServiceConfig::default()))
        .map_err(|e| usage("IoError", e.to_string()))
}

fn gen_cmd(args: &GenArgs) -> Result<(), Failure> {
    let spec = GeneratorSpec {
        seed: args.seed,
        courses: args.courses,
        groups: args.groups,
        lecturers: args.lecturers,
        tas: args.tas,
        tutorials_per_course: args.tutorials_per_course,
        wishes: args.wishes,
        ..GeneratorSpec::default()
    };
    let graph = gen_instance(&spec).map_err(|e| rejected("InfeasibleSpec", e.to_string()))?;
    write(&args.output, &serialize_graph(&graph))
}
