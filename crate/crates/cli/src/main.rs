mod commands;
mod problem;
mod report;
mod scenarios;

use clap::{Parser, Subcommand};
use problem::{InputError, ProblemFile};
use scenarios::Scenario;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Cohomology of Lie 2-algebras and checks on matrix Lie 2-groups.
///
/// Exit codes: 0 when every check passes, 1 on a mathematical failure,
/// 2 on an input error.
#[derive(Debug, Parser)]
#[command(name = "lie2coh", version)]
struct Cli {
    /// Seed for every random choice; overrides `options.seed` in the file.
    #[arg(long, global = true, env = "LIE2COH_SEED")]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the validators of every declared structure and cochain.
    Validate { file: PathBuf },
    /// Dimension of the total cohomology in one degree.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
        /// Use the complex with trivial coefficients of the crossed module alone.
        #[arg(long)]
        trivial: bool,
    },
    /// Check that the total differential squares to zero.
    NablaCheck {
        file: Option<PathBuf>,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Additional random contexts with all dimensions at most 2.
        #[arg(long)]
        trials: Option<usize>,
        /// Negate one sign entry, given as component:q:r (negative control).
        #[arg(long, hide = true)]
        corrupt_sign: Option<String>,
    },
    /// Build the extension of a 2-cocycle.
    Extend {
        file: PathBuf,
        #[arg(long)]
        cocycle: String,
    },
    /// Extract the cocycle of the extension of a 2-cocycle, optionally
    /// through a shifted splitting stored as a cochain.
    Split {
        file: PathBuf,
        #[arg(long)]
        cocycle: String,
        #[arg(long)]
        shift: Option<String>,
    },
    /// Decide whether two 2-cocycles differ by a coboundary.
    Compare { file: PathBuf, first: String, second: String },
    /// Numerical checks on matrix Lie 2-groups.
    GroupChecks {
        #[arg(value_enum)]
        scenario: Scenario,
        /// dim W and dim V.
        #[arg(long, num_args = 2, value_names = ["W", "V"], default_values_t = [2, 1])]
        dims: Vec<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        tolerance: Option<f64>,
        /// Problem file whose options section supplies seed, trials and tolerance.
        #[arg(long)]
        options: Option<PathBuf>,
    },
}

fn load(path: &Path) -> Result<ProblemFile, InputError> {
    ProblemFile::load(path)
}

fn run(cli: Cli) -> Result<report::Report, InputError> {
    let seed_of = |f: Option<&ProblemFile>| cli.seed.or(f.and_then(|f| f.options.seed)).unwrap_or(0);
    match &cli.command {
        Command::Validate { file } => commands::validate(&load(file)?),
        Command::Cohomology { file, degree, trivial } => commands::cohomology(&load(file)?, *degree, *trivial),
        Command::NablaCheck { file, max_degree, trials, corrupt_sign } => {
            let f = file.as_deref().map(load).transpose()?;
            let opts = f.as_ref().map(|f| &f.options);
            let max_degree = max_degree.or(opts.and_then(|o| o.max_degree)).unwrap_or(3);
            let trials = trials.or(opts.and_then(|o| o.trials)).unwrap_or(0);
            let corrupt = corrupt_sign.as_deref().map(commands::parse_corruption).transpose()?;
            commands::nabla_check(f.as_ref(), max_degree, trials, seed_of(f.as_ref()), corrupt)
        }
        Command::Extend { file, cocycle } => commands::extend(&load(file)?, cocycle),
        Command::Split { file, cocycle, shift } => commands::split(&load(file)?, cocycle, shift.as_deref()),
        Command::Compare { file, first, second } => commands::compare(&load(file)?, first, second),
        Command::GroupChecks { scenario, dims, trials, tolerance, options } => {
            let f = options.as_deref().map(load).transpose()?;
            let opts = f.as_ref().map(|f| &f.options);
            let params = scenarios::Params {
                dims: (dims[0], dims[1]),
                trials: trials.or(opts.and_then(|o| o.trials)).unwrap_or(5),
                seed: seed_of(f.as_ref()),
                tolerance: tolerance.or(opts.and_then(|o| o.tolerance)),
            };
            Ok(scenarios::run(*scenario, &params))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(r) => r.finish(),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
