//! `rmsynth` command-line frontend.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 parse or format error,
//! 3 limit exceeded.

mod commands;
mod input;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "rmsynth", version, about = "Reed-Muller synthesis of Boolean functions into multi-controlled-NOT circuits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Reed-Muller expansion of a function at a polarity.
    Transform {
        #[command(flatten)]
        function: FunctionArgs,
        /// Decimal polarity number or sign string like `++-` (x0 first).
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        polarity: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Synthesize a verified circuit from a fixed- or mixed-polarity expansion.
    Synth {
        #[command(flatten)]
        function: FunctionArgs,
        /// Fixed polarity, as for `transform`. Defaults to 0.
        #[arg(long, conflicts_with = "mixed", allow_hyphen_values = true)]
        polarity: Option<String>,
        /// Mixed-polarity expression, e.g. `~x0*x1 ^ x2 ^ 1`.
        #[arg(long)]
        mixed: Option<String>,
        /// Cancel adjacent NOT pairs after synthesis.
        #[arg(long)]
        peephole: bool,
        #[arg(long, value_enum, default_value_t = CircuitFormat::Gatelist)]
        format: CircuitFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Cost table over every fixed polarity, as CSV.
    Sweep {
        #[command(flatten)]
        function: FunctionArgs,
        /// Largest variable count to sweep.
        #[arg(long, default_value_t = rmsynth::DEFAULT_SWEEP_LIMIT)]
        limit: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a gate-list circuit against a function on every input.
    Verify {
        /// Gate-list file.
        #[arg(long)]
        circuit: PathBuf,
        #[command(flatten)]
        function: FunctionArgs,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a gate-list circuit on one basis state.
    Simulate {
        /// Gate-list file.
        #[arg(long)]
        circuit: PathBuf,
        /// Qubit values, qubit 0 first, e.g. `1 1 0` or `110`.
        #[arg(required = true, num_args = 1..)]
        bits: Vec<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct FunctionArgs {
    /// Read the function from a file.
    #[arg(long, conflicts_with = "function")]
    input: Option<PathBuf>,
    /// Inline function text; `;` separates lines.
    #[arg(long)]
    function: Option<String>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    /// PLA if the text starts with a `.` directive, minterm list otherwise.
    Auto,
    Pla,
    Minterms,
    Hex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CircuitFormat {
    Gatelist,
    Qasm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug)]
enum CliError {
    Core(rmsynth::Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
    /// A circuit did not implement its function.
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use rmsynth::Error as E;
        match self {
            CliError::Core(E::Limit { .. }) => 3,
            CliError::Core(E::Consistency(_)) | CliError::Failed(_) => 1,
            CliError::Core(_) | CliError::Io(..) | CliError::Usage(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Failed(msg) => f.write_str(msg),
        }
    }
}

impl From<rmsynth::Error> for CliError {
    fn from(e: rmsynth::Error) -> Self {
        CliError::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rmsynth: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
