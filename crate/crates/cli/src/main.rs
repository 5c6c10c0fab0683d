mod sweep;
mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{ArgGroup, Args, Parser, Subcommand};
use regideal::graph::build_digraph_for_zn;
use regideal::invariants::analyze_digraph;
use regideal::{
    build_digraph_with_limit, factor_modulus, AnalyzeOptions, DotMode, Error, RingSpec, DEFAULT_VERTEX_LIMIT,
};

#[derive(Parser, Debug)]
#[command(name = "regideal", version, about = "Regular graphs of ideals of finite Artinian rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze one ring and print its invariant report as JSON.
    Analyze(AnalyzeArgs),
    /// Analyze every canonical ring within bounds and write a CSV table.
    Sweep(SweepArgs),
    /// Run the verification checks and print a pass/fail table.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
struct SolverArgs {
    /// Run the exact solvers; `false` evaluates the closed forms only.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set, value_name = "BOOL")]
    exact: bool,
    /// Per-solver time limit in seconds (0 disables the limit).
    #[arg(long, env = "REGIDEAL_TIMEOUT", default_value_t = 60.0, value_name = "SECONDS")]
    timeout: f64,
}

impl SolverArgs {
    fn timeout(&self) -> Result<Option<Duration>, CliError> {
        if !self.timeout.is_finite() || self.timeout < 0.0 {
            return Err(CliError::Input(format!("invalid timeout {}", self.timeout)));
        }
        Ok((self.timeout > 0.0).then(|| Duration::from_secs_f64(self.timeout)))
    }
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("ring").required(true).args(["zn", "profile"])))]
struct AnalyzeArgs {
    /// Analyze Z_N.
    #[arg(long, value_name = "N")]
    zn: Option<u64>,
    /// Ideal counts of the local factors, e.g. `2,2` (a field is 1).
    #[arg(long, value_name = "T1,...,TK")]
    profile: Option<String>,
    #[command(flatten)]
    solver: SolverArgs,
    /// Refuse graphs with more vertices than this.
    #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT)]
    max_vertices: usize,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the digraph in DOT format.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 4)]
    max_factors: usize,
    #[arg(long, default_value_t = 4)]
    max_t: u32,
    #[arg(long, default_value_t = 600)]
    max_vertices: usize,
    #[command(flatten)]
    solver: SolverArgs,
    /// Worker threads (0 uses all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Write the CSV table here instead of stdout.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Also write the full reports as a JSON array.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Check suite to run.
    #[arg(default_value = "paper")]
    suite: String,
    /// Run only these checks (repeatable or comma separated).
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Per-solver time limit in seconds (0 disables the limit).
    #[arg(long, env = "REGIDEAL_TIMEOUT", default_value_t = 60.0, value_name = "SECONDS")]
    timeout: f64,
    /// Worker threads for the sweep-based checks (0 uses all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Oversize(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("{0}")]
    Unresolved(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Oversize(_) | CliError::Unresolved(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::GraphTooLarge { .. } => CliError::Oversize(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Input(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    let options = AnalyzeOptions {
        timeout: args.solver.timeout()?,
        run_solvers: args.solver.exact,
        vertex_limit: args.max_vertices,
    };
    let start = Instant::now();
    let (spec, name, graph) = match (args.zn, &args.profile) {
        (Some(n), _) => {
            let ctx = factor_modulus(n)?;
            let g = build_digraph_for_zn(&ctx, args.max_vertices)?;
            (ctx.spec().clone(), format!("Z_{n}"), g)
        }
        (None, Some(p)) => {
            let spec = RingSpec::parse_profile(p)?;
            let g = build_digraph_with_limit(&spec, args.max_vertices)?;
            let name = spec.to_string();
            (spec, name, g)
        }
        (None, None) => return Err(CliError::Input("one of --zn or --profile is required".into())),
    };
    let report = analyze_digraph(&spec, name, &graph, start.elapsed(), &options);

    let json = serde_json::to_string_pretty(&report).expect("reports serialize");
    write_output(args.out.as_deref(), &format!("{json}\n"))?;
    if let Some(path) = &args.dot {
        write_output(Some(path), &graph.to_dot(DotMode::Digraph))?;
    }
    if report.has_mismatch() {
        let list: Vec<String> = report
            .mismatches
            .iter()
            .map(|m| format!("{} predicted {}, computed {}", m.quantity, m.predicted, m.computed))
            .collect();
        return Err(CliError::Mismatch(format!("theorem mismatch: {}", list.join("; "))));
    }
    Ok(())
}

fn run() -> Result<(), CliError> {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return Ok(());
        }
        Err(e) => return Err(CliError::Input(e.render().to_string().trim_end().to_string())),
    };
    match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Sweep(args) => sweep::cmd_sweep(args),
        Command::Verify(args) => verify::cmd_verify(args),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = e.to_string();
            if msg.starts_with("error:") {
                eprintln!("{msg}");
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(e.code())
        }
    }
}
