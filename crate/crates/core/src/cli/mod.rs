//! The `wdiv` command line.
//!
//! Exit status everywhere: 0 for YES or pass, 1 for NO or fail, 2 for usage
//! and input errors.

pub mod bench;
mod report;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub use report::{digest, RunReport, StageTiming};

use crate::fo::{self, eval_fo, harness::fo_harness, parse_fo, phi_v, rewrite_fo, Formula};
use crate::instance::Instance;
use crate::reductions::{embed_subdivided, reduce_is_to_diversity, reduce_is_to_r2, Graph, R2Mode};
use crate::solution::{verify_solution, SolutionFile};
use crate::solver::{oracle_solve, solve_with, Answer, Overrides, SolveOutcome};

#[derive(Debug, Parser)]
#[command(name = "wdiv", version, about = "Diversity of partially known binary vectors")]
pub struct Cli {
    /// Write a JSON run report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide an instance; writes a solution file.
    Solve(SolveArgs),
    /// Check a solution file against an instance.
    Verify { instance: PathBuf, solution: PathBuf },
    /// Generate instances from graphs.
    #[command(subcommand)]
    Generate(GenerateCommand),
    /// First-order sentences over graphs.
    #[command(subcommand)]
    Fo(FoCommand),
    /// Run seeded timing suites.
    Bench {
        /// Suites to run; none gives an empty table.
        #[arg(long = "suite", value_enum)]
        suites: Vec<bench::Suite>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct SolveArgs {
    instance: PathBuf,
    /// Solution file to write (default: standard output).
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Use the exhaustive oracle instead of the solver.
    #[arg(long, conflicts_with_all = ["zeta_gate", "sunflower_target"])]
    oracle: bool,
    /// Test override for the neighbourhood gate. Not certified.
    #[arg(long, value_name = "N")]
    zeta_gate: Option<u64>,
    /// Test override for the sunflower size. Not certified.
    #[arg(long, value_name = "N")]
    sunflower_target: Option<u64>,
}

#[derive(Debug, Args)]
struct GraphOutput {
    graph: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum GenerateCommand {
    /// Independent set to diversity at threshold 2n - 4.
    IsW1 {
        #[command(flatten)]
        io: GraphOutput,
        #[arg(long)]
        k: usize,
    },
    /// Independent set to diversity at threshold 2.
    IsR2 {
        #[command(flatten)]
        io: GraphOutput,
        #[arg(long)]
        k: usize,
        /// Give vertex i the coordinates 2i-1, 2i instead of i, i+1.
        #[arg(long)]
        disjoint_pairs: bool,
    },
    /// Hypercube embedding of the graph with subdivided edges and leaves,
    /// written as an instance with r = 1.
    Embed {
        #[command(flatten)]
        io: GraphOutput,
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
}

#[derive(Debug, Subcommand)]
enum FoCommand {
    /// Print the rewritten sentences and their size ratios.
    Rewrite { formulas: PathBuf },
    /// Evaluate the sentences on a graph.
    Check { formulas: PathBuf, graph: PathBuf },
    /// Compare each sentence on each graph with its rewrite on the embedding.
    Harness {
        formulas: PathBuf,
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error("{0}")]
    Failed(String),
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse<T: FromStr>(path: &Path, text: &str) -> Result<T, CliError>
where
    T::Err: std::fmt::Display,
{
    text.parse().map_err(|e: T::Err| CliError::Input {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// One sentence per line; blank lines and `#` comments are skipped.
fn read_formulas(path: &Path) -> Result<(String, Vec<Formula>), CliError> {
    let text = read(path)?;
    let formulas = crate::instance::content_lines(&text)
        .map(|(line, s)| {
            parse_fo(s).map_err(|e| CliError::Input {
                path: path.display().to_string(),
                message: format!("line {line}: {e}"),
            })
        })
        .collect::<Result<_, _>>()?;
    Ok((text, formulas))
}

/// Parses `args` (including the program name) and runs the command; returns
/// the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok((code, report)) => {
            if let Some(path) = &cli.report {
                if let Err(e) = report.write(path) {
                    eprintln!("error: {}: {e}", path.display());
                    return 2;
                }
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(cli: &Cli) -> Result<(i32, RunReport), CliError> {
    match &cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Verify { instance, solution } => cmd_verify(instance, solution),
        Command::Generate(g) => cmd_generate(g),
        Command::Fo(f) => cmd_fo(f),
        Command::Bench { suites, seed } => {
            let rows = bench::run(suites, *seed);
            print!("{}", bench::table(&rows));
            let mut report = RunReport::new("bench", &[]);
            report.outcome = format!("{} rows", rows.len());
            report.details = serde_json::json!({ "seed": seed, "rows": rows });
            Ok((0, report))
        }
    }
}

fn cmd_solve(args: &SolveArgs) -> Result<(i32, RunReport), CliError> {
    let text = read(&args.instance)?;
    let instance: Instance = parse(&args.instance, &text)?;
    let mut report = RunReport::new("solve", &[text.as_bytes()]);
    let overrides = Overrides {
        zeta_gate: args.zeta_gate,
        sunflower_target: args.sunflower_target,
    };
    let outcome: SolveOutcome = if args.oracle {
        report.command = "solve --oracle".into();
        oracle_solve(&instance).map_err(|e| CliError::Failed(e.to_string()))?
    } else {
        solve_with(&instance, overrides)
    };
    if !overrides.is_empty() {
        eprintln!("warning: test overrides in effect, this run is NOT certified");
        report.certified = false;
        report.overrides = overrides;
        match oracle_solve(&instance) {
            Ok(o) => {
                let agree = o.answer == outcome.answer;
                report.details = serde_json::json!({ "oracle_answer": o.answer, "agree": agree });
                if !agree {
                    eprintln!("warning: oracle answers {}, solver {}", o.answer, outcome.answer);
                    report.discrepancies.push(serde_json::json!({
                        "solver": outcome.answer,
                        "oracle": o.answer,
                    }));
                }
            }
            Err(e) => report.details = serde_json::json!({ "oracle_cross_check": e.to_string() }),
        }
    }
    let file = match &outcome.witness {
        Some(w) => SolutionFile::Yes(w.clone()),
        None => SolutionFile::No,
    };
    emit(args.output.as_deref(), &file.to_string())?;
    report.outcome = outcome.answer.to_string();
    report.trace = outcome.trace.clone();
    let report = report.timings(&outcome.timings);
    Ok((if outcome.answer == Answer::Yes { 0 } else { 1 }, report))
}

fn cmd_verify(instance: &Path, solution: &Path) -> Result<(i32, RunReport), CliError> {
    let (itext, stext) = (read(instance)?, read(solution)?);
    let inst: Instance = parse(instance, &itext)?;
    let file: SolutionFile = parse(solution, &stext)?;
    let mut report = RunReport::new("verify", &[itext.as_bytes(), stext.as_bytes()]);
    let passed = match file {
        SolutionFile::No => {
            println!("FAIL");
            println!("  solution file says NO; there is no witness to verify");
            false
        }
        SolutionFile::Yes(sol) => {
            let v = verify_solution(&inst, &sol);
            print!("{v}");
            report.discrepancies = v.violations.iter().map(|x| serde_json::json!(x.to_string())).collect();
            v.passed()
        }
    };
    report.outcome = if passed { "PASS" } else { "FAIL" }.into();
    Ok((if passed { 0 } else { 1 }, report))
}

fn cmd_generate(cmd: &GenerateCommand) -> Result<(i32, RunReport), CliError> {
    let (io, name) = match cmd {
        GenerateCommand::IsW1 { io, .. } => (io, "generate is-w1"),
        GenerateCommand::IsR2 { io, .. } => (io, "generate is-r2"),
        GenerateCommand::Embed { io, .. } => (io, "generate embed"),
    };
    let text = read(&io.graph)?;
    let g: Graph = parse(&io.graph, &text)?;
    let inst = match cmd {
        GenerateCommand::IsW1 { k, .. } => reduce_is_to_diversity(&g, *k).map_err(|e| CliError::Input {
            path: io.graph.display().to_string(),
            message: e.to_string(),
        })?,
        GenerateCommand::IsR2 { k, disjoint_pairs, .. } => {
            let mode = if *disjoint_pairs { R2Mode::DisjointPairs } else { R2Mode::Verbatim };
            reduce_is_to_r2(&g, *k, mode)
        }
        GenerateCommand::Embed { k, .. } => {
            let rows = embed_subdivided(&g);
            Instance::new(g.n() + g.m(), *k, 1, rows).expect("rows of length n + m")
        }
    };
    emit(io.output.as_deref(), &inst.to_string())?;
    let mut report = RunReport::new(name, &[text.as_bytes()]);
    report.outcome = format!("{} rows, d = {}", inst.len(), inst.d());
    Ok((0, report))
}

fn cmd_fo(cmd: &FoCommand) -> Result<(i32, RunReport), CliError> {
    match cmd {
        FoCommand::Rewrite { formulas } => {
            let (text, phis) = read_formulas(formulas)?;
            let classifier = phi_v();
            let mut ratios = Vec::new();
            for phi in &phis {
                let psi = rewrite_fo(phi, &classifier).map_err(|e| CliError::Failed(e.to_string()))?;
                let ratio = psi.size() as f64 / phi.size() as f64;
                println!("{psi}");
                println!("# size {} -> {}, ratio {ratio:.3}", phi.size(), psi.size());
                ratios.push(ratio);
            }
            let mut report = RunReport::new("fo rewrite", &[text.as_bytes()]);
            report.outcome = format!("{} sentences", phis.len());
            report.details = serde_json::json!({ "classifier": classifier.to_string(), "ratios": ratios });
            Ok((0, report))
        }
        FoCommand::Check { formulas, graph } => {
            let (ftext, phis) = read_formulas(formulas)?;
            let gtext = read(graph)?;
            let g: Graph = parse(graph, &gtext)?;
            let mut values = Vec::new();
            for phi in &phis {
                let v = eval_fo(&g, phi).map_err(|e| CliError::Failed(e.to_string()))?;
                println!("{v}");
                values.push(v);
            }
            let all = values.iter().all(|&v| v);
            let mut report = RunReport::new("fo check", &[ftext.as_bytes(), gtext.as_bytes()]);
            report.outcome = if all { "true" } else { "false" }.into();
            report.details = serde_json::json!({ "values": values });
            Ok((if all { 0 } else { 1 }, report))
        }
        FoCommand::Harness { formulas, graphs } => {
            let (ftext, phis) = read_formulas(formulas)?;
            let mut inputs = vec![ftext];
            let mut hs = Vec::new();
            for path in graphs {
                let t = read(path)?;
                hs.push(parse::<Graph>(path, &t)?);
                inputs.push(t);
            }
            let rep = fo_harness(&hs, &phis, &fo::phi_v()).map_err(|e| CliError::Failed(e.to_string()))?;
            println!(
                "{} cells, {} agreements, {} discrepancies",
                rep.total,
                rep.agreements,
                rep.discrepancies.len()
            );
            for &i in &rep.discrepancies {
                let c = &rep.cells[i];
                println!(
                    "  graph {} sentence {}: H |= phi is {}, G |= phi' is {}",
                    graphs[c.graph].display(),
                    c.sentence + 1,
                    c.original,
                    c.rewritten
                );
            }
            let bytes: Vec<&[u8]> = inputs.iter().map(|s| s.as_bytes()).collect();
            let mut report = RunReport::new("fo harness", &bytes);
            report.outcome = format!("{}/{} agree", rep.agreements, rep.total);
            report.discrepancies = rep
                .discrepancies
                .iter()
                .map(|&i| serde_json::to_value(&rep.cells[i]).expect("serialisable"))
                .collect();
            report.details = serde_json::to_value(&rep).expect("serialisable");
            Ok((0, report))
        }
    }
}
