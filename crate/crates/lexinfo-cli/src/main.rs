mod cmd_anneal;
mod cmd_attach;
mod cmd_measure;
mod cmd_simulate;
mod cmd_verify;
mod output;

use clap::{Parser, Subcommand, ValueEnum};

use output::LogBase;

/// Exit codes: 0 success/pass, 1 verification failure, 2 usage or parse
/// error, 3 undefined measure, 4 capacity exhausted.
pub const EXIT_VERIFY_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNDEFINED: i32 = 3;
pub const EXIT_CAPACITY: i32 = 4;

#[derive(Parser)]
#[command(
    name = "lexinfo",
    version,
    about = "Entropy, mutual information and attachment experiments on word-meaning matrices"
)]
struct Cli {
    /// Logarithm base for reported measures.
    #[arg(long, global = true, value_enum, default_value_t = LogBaseArg::Two)]
    log_base: LogBaseArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum LogBaseArg {
    #[value(name = "2")]
    Two,
    #[value(name = "e")]
    E,
}

impl LogBaseArg {
    fn base(self) -> LogBase {
        match self {
            LogBaseArg::Two => LogBase::Bits,
            LogBaseArg::E => LogBase::Nats,
        }
    }

    fn label(self) -> &'static str {
        match self {
            LogBaseArg::Two => "2",
            LogBaseArg::E => "e",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print entropy, conditional entropy, mutual information and mean code
    /// length of a matrix file as JSON.
    Measure {
        /// Matrix file in the edge-list text format.
        matrix_file: String,
        /// When given, also report the combined cost at this lambda.
        #[arg(long)]
        lambda: Option<f64>,
    },
    /// Attach a new word to a set of meanings; print the report and write
    /// the mutated matrix.
    Attach {
        matrix_file: String,
        /// Comma-separated meaning indices to link, e.g. "0,2,3".
        #[arg(long, value_delimiter = ',', required = true)]
        meanings: Vec<usize>,
        /// Word to attach; defaults to the lowest unlinked word.
        #[arg(long)]
        word: Option<usize>,
        /// Where to write the mutated matrix; defaults to
        /// "<matrix_file>.attached".
        #[arg(long)]
        out: Option<String>,
    },
    /// Run an exhaustive verification suite over all matrices of the given
    /// dimensions. Exits 0 when no violation is found, 1 otherwise.
    Verify {
        #[arg(long)]
        vs: usize,
        #[arg(long)]
        vr: usize,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest plan size for the alpha-general suite.
        #[arg(long, default_value_t = 3)]
        max_alpha: usize,
    },
    /// Minimize the combined cost by seeded Metropolis annealing; write
    /// per-chain results and print the cross-chain summary.
    Anneal {
        #[arg(long)]
        vs: usize,
        #[arg(long)]
        vr: usize,
        #[arg(long)]
        lambda: f64,
        #[arg(long, default_value_t = 5000)]
        steps: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        chains: u32,
        /// Initial temperature in bits.
        #[arg(long, default_value_t = 1.0)]
        t_initial: f64,
        /// Geometric cooling factor per step.
        #[arg(long, default_value_t = 0.999)]
        cooling: f64,
        /// Output directory for per-chain JSON and trajectory CSV files.
        #[arg(long)]
        out: String,
    },
    /// Grow a vocabulary one word per step under a linking policy; print
    /// per-step measures as CSV.
    Simulate {
        #[arg(long)]
        vs: usize,
        #[arg(long)]
        vr: usize,
        #[arg(long, value_enum)]
        policy: Policy,
        /// Cost weight used by the greedy-omega policy.
        #[arg(long, default_value_t = 0.5)]
        lambda: f64,
        /// Number of words to add; at most vs.
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Suite {
    Strategy,
    AppendixA,
    AppendixB,
    AlphaGeneral,
    InequalityChain,
}

impl Suite {
    fn label(self) -> &'static str {
        match self {
            Suite::Strategy => "strategy",
            Suite::AppendixA => "appendix-a",
            Suite::AppendixB => "appendix-b",
            Suite::AlphaGeneral => "alpha-general",
            Suite::InequalityChain => "inequality-chain",
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Policy {
    AlwaysA,
    AlwaysBRandom,
    GreedyOmega,
    Random,
}

/// A failure with the exit code it maps to.
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<lexinfo::Error> for CliError {
    fn from(err: lexinfo::Error) -> Self {
        use lexinfo::Error;
        let code = match err {
            Error::UndefinedMeasure => EXIT_UNDEFINED,
            Error::VocabularyFull { .. } => EXIT_CAPACITY,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: err.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::usage(err.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    let log_base = cli.log_base.base();
    let base_label = cli.log_base.label();

    let outcome = match cli.command {
        Command::Measure {
            matrix_file,
            lambda,
        } => cmd_measure::run(&matrix_file, lambda, log_base, base_label),
        Command::Attach {
            matrix_file,
            meanings,
            word,
            out,
        } => cmd_attach::run(
            &matrix_file,
            &meanings,
            word,
            out.as_deref(),
            log_base,
            base_label,
        ),
        Command::Verify {
            vs,
            vr,
            suite,
            max_alpha,
        } => cmd_verify::run(vs, vr, suite, max_alpha, log_base, base_label),
        Command::Anneal {
            vs,
            vr,
            lambda,
            steps,
            seed,
            chains,
            t_initial,
            cooling,
            out,
        } => cmd_anneal::run(cmd_anneal::Args {
            vs,
            vr,
            lambda,
            steps,
            seed,
            chains,
            t_initial,
            cooling,
            out,
        }),
        Command::Simulate {
            vs,
            vr,
            policy,
            lambda,
            steps,
            seed,
        } => cmd_simulate::run(vs, vr, policy, lambda, steps, seed, log_base, base_label),
    };

    match outcome {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            std::process::exit(err.code);
        }
    }
}
