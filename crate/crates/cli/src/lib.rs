//! Command-line front end for `kappatree`: reads a graph, runs the
//! decomposition and prints JSON reports or DOT trees.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 disconnected input,
//! 3 internal invariant violation or failed verification.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use kappatree::decompose::decompose_recursively;
use kappatree::oracle::OracleBudget;
use kappatree::{analyze, Graph};
use thiserror::Error;

mod dot;
mod parse;
mod report;
mod verify;

pub use dot::emit_dot;
pub use parse::{emit_edgelist, parse_graph, Format};
pub use report::{analysis_document, decomposition_document, tree_document, ReportDocument};
pub use verify::{verify, VerifyReport};

/// Environment variable capping worker threads; `0` or unset means one per
/// core.
pub const THREADS_ENV: &str = "KAPPATREE_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Core(#[from] kappatree::Error),
    #[error("verification failed")]
    VerificationFailed,
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(kappatree::Error::Disconnected { .. }) => 2,
            CliError::Core(kappatree::Error::Invariant(_)) | CliError::VerificationFailed => 3,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "kappatree",
    version,
    about = "Canonical vertex-cut structure trees"
)]
pub struct Cli {
    /// Input format.
    #[arg(long, value_enum, default_value_t = Format::Edgelist, global = true)]
    pub format: Format,
    /// Suppress the summary on stderr.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Graph file, or `-` for stdin.
    pub path: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// κ, the maximal κ-inseparable sets and the cut system with μ.
    Analyze(Input),
    /// The structure tree of the canonical nested system.
    Tree {
        #[command(flatten)]
        input: Input,
        /// Print the tree as DOT.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// Print the report document as JSON (the default).
        #[arg(long)]
        json: bool,
    },
    /// Recursive decomposition into block graphs.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 8)]
        max_depth: usize,
    },
    /// Check the axioms, the tree, and agreement with the oracles.
    Verify(Input),
}

impl Command {
    fn input(&self) -> &Input {
        match self {
            Command::Analyze(i) | Command::Verify(i) => i,
            Command::Tree { input, .. } | Command::Decompose { input, .. } => input,
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

/// Applies `KAPPATREE_THREADS` to the global pool. Unparsable values are an
/// input error.
fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{THREADS_ENV} must be a number, got `{value}`")))?;
    #[cfg(feature = "parallel")]
    {
        // Fails only if the pool already exists, as in repeated in-process runs.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    Ok(())
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}

/// What a command prints, and its exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    /// One line for stderr, dropped under `--quiet`.
    pub summary: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String, summary: String) -> Self {
        Output {
            stdout,
            summary,
            code: 0,
        }
    }
}

/// Runs one command on an already parsed graph.
pub fn execute(command: &Command, g: &Graph) -> Result<Output, CliError> {
    match command {
        Command::Analyze(_) => {
            let a = analyze(g)?;
            let summary = match a.level.as_ref() {
                Some(l) => format!(
                    "κ = {}, {} maximal sets, {} cuts",
                    l.kappa,
                    l.omega.len(),
                    l.system.len()
                ),
                None => "trivial".to_string(),
            };
            Ok(Output::ok(json(&analysis_document(&a)), summary))
        }
        Command::Tree { dot, .. } => {
            let a = analyze(g)?;
            let summary = format!(
                "{} separators, {} blocks",
                a.tree.separators.len(),
                a.tree.blocks.len()
            );
            let out = if *dot {
                emit_dot(&a.tree)
            } else {
                json(&tree_document(&a))
            };
            Ok(Output::ok(out, summary))
        }
        Command::Decompose { max_depth, .. } => {
            let r = decompose_recursively(g, *max_depth)?;
            let summary = format!(
                "deepest level {}{}",
                r.max_depth(),
                if r.hit_depth_limit() {
                    ", depth limit reached"
                } else {
                    ""
                }
            );
            Ok(Output::ok(json(&decomposition_document(&r)), summary))
        }
        Command::Verify(_) => {
            let r = verify(&analyze(g)?, &OracleBudget::default())?;
            let (summary, code) = if r.passed {
                ("verification passed".to_string(), 0)
            } else {
                (
                    format!("error: {}", CliError::VerificationFailed),
                    CliError::VerificationFailed.exit_code(),
                )
            };
            Ok(Output {
                stdout: json(&r),
                summary,
                code,
            })
        }
    }
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let Some(command) = cli.command.as_ref() else {
        use clap::CommandFactory;
        let _ = Cli::command().print_help();
        return 1;
    };
    let result = configure_threads()
        .and_then(|()| read_input(&command.input().path))
        .and_then(|text| parse_graph(&text, cli.format))
        .and_then(|g| execute(command, &g));
    match result {
        Ok(out) => {
            let _ = std::io::stdout().lock().write_all(out.stdout.as_bytes());
            if !cli.quiet || out.code != 0 {
                eprintln!("{}", out.summary);
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
