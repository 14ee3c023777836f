use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use graphsym_cli::commands::{self, Construction, Method, Modulus};
use graphsym_cli::report::to_json;
use graphsym_cli::verify::{self, Suite};
use graphsym_cli::{CliError, CliResult};

/// Build graph states and check their exchange symmetry.
///
/// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
/// 3 capacity exceeded.
#[derive(Debug, Parser)]
#[command(name = "graphsym", version)]
struct Cli {
    /// Tolerance for state comparisons.
    #[arg(long, global = true, env = "GRAPHSYM_TOL", default_value_t = graphsym::DEFAULT_TOL)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the state of a graph file and print its amplitude report.
    Build {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        construction: Construction,
        /// Levels per qudit (gr only; defaults to the file's `d`, then N).
        #[arg(long)]
        levels: Option<usize>,
        #[arg(long, value_enum, default_value_t = Modulus::Growing)]
        modulus: Modulus,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build antisymmetric states and compare methods.
    Antisym {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        levels: Option<usize>,
        /// Repeat to compare several methods.
        #[arg(long = "method", value_enum, default_value = "recursive")]
        methods: Vec<Method>,
        #[arg(long, value_enum, default_value_t = Modulus::Growing)]
        modulus: Modulus,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify the state in a report or built from a graph file.
    Classify {
        path: PathBuf,
        #[arg(long)]
        levels: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification sweep; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        max_n: usize,
        /// Also write the summary here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> CliResult<bool> {
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return Err(CliError::Usage(format!(
            "tolerance must be positive, got {}",
            cli.tol
        )));
    }
    let tol = cli.tol;
    match cli.command {
        Command::Build {
            graph,
            construction,
            levels,
            modulus,
            out,
        } => {
            let report = commands::build(&graph, construction, levels, modulus, tol)?;
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            commands::emit(&to_json(&report), out.as_deref())?;
        }
        Command::Antisym {
            n,
            levels,
            methods,
            modulus,
            out,
        } => {
            let output = commands::antisym(n, levels, &methods, modulus, tol)?;
            commands::emit(&to_json(&output), out.as_deref())?;
        }
        Command::Classify { path, levels, out } => {
            let output = commands::classify_file(&path, levels, tol)?;
            commands::emit(&to_json(&output), out.as_deref())?;
        }
        Command::Verify {
            suite,
            max_n,
            report,
        } => {
            let summary = verify::run(suite, max_n, tol)?;
            let text = to_json(&summary);
            if let Some(path) = report {
                commands::emit(&text, Some(&path))?;
            }
            commands::emit(&text, None)?;
            return Ok(summary.passed);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
