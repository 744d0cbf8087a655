use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qloci::verify::Limits;
use qloci::Error;

mod commands;
mod input;

use commands::{Format, InvariantType, Method, RenderObject, SetKind, SuiteArg};

const EXIT_VALIDATION: u8 = 2;
const EXIT_CAPACITY: u8 = 3;
const EXIT_VERIFICATION: u8 = 4;

/// Quiver loci: Zelevinsky permutations, pipe dreams, lacing diagrams,
/// multidegrees and K-polynomials.
#[derive(Debug, Parser)]
#[command(name = "qloci", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input document, or `-` for standard input.
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Output format; defaults to svg for `render` and text otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Most free cells an exhaustive pipe-dream enumeration may have.
    #[arg(long, global = true, env = "QLOCI_CAPACITY_CELLS")]
    capacity_cells: Option<usize>,

    /// Most sequences of permutations a factorization scan may visit.
    #[arg(long, global = true)]
    capacity_seqperms: Option<usize>,

    /// Largest total dimension for the ratio check.
    #[arg(long, global = true)]
    ratio_max_d: Option<usize>,

    /// Allow capacities above the defaults.
    #[arg(long, global = true)]
    unsafe_capacity: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Zelevinsky permutation, its length, v_* and the codimension.
    Zelevinsky,
    /// Multidegree or K-polynomial of the orbit closure.
    Invariant {
        #[arg(long = "type", value_enum, default_value = "multidegree")]
        kind: InvariantType,
        #[arg(long, value_enum, default_value = "pipe")]
        method: Method,
    },
    /// List pipe dreams, lacing diagrams or sequences of permutations.
    Enumerate {
        #[arg(long, value_enum)]
        set: SetKind,
    },
    /// Run verification suites on the input, or on a sweep of small quivers.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 2)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        max_dim: usize,
    },
    /// Draw a lacing diagram or a pipe dream of the orbit.
    Render {
        #[arg(long, value_enum, default_value = "lacing")]
        object: RenderObject,
    },
}

enum Failure {
    Error(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn limits(cli: &Cli) -> Result<Limits, Error> {
    let defaults = Limits::default();
    let pick = |name: &str, given: Option<usize>, default: usize| -> Result<usize, Error> {
        match given {
            Some(v) if v > default && !cli.unsafe_capacity => Err(Error::Parse(format!(
                "{name} {v} exceeds the default {default}; pass --unsafe-capacity to allow it"
            ))),
            Some(v) => Ok(v),
            None => Ok(default),
        }
    };
    Ok(Limits {
        max_free_cells: pick("--capacity-cells", cli.capacity_cells, defaults.max_free_cells)?,
        max_seqperms: pick("--capacity-seqperms", cli.capacity_seqperms, defaults.max_seqperms)?,
        ratio_max_d: pick("--ratio-max-d", cli.ratio_max_d, defaults.ratio_max_d)?,
    })
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let limits = limits(cli)?;
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| Error::Parse(format!("--jobs: {e}")))?;
    }
    let instance = match &cli.input {
        Some(path) => Some(input::parse(&input::read_source(path)?)?),
        None => None,
    };
    let need = || instance.as_ref().ok_or_else(|| Error::Parse("this command needs --input".into()));
    let format = cli.format.unwrap_or(match cli.command {
        Command::Render { .. } => Format::Svg,
        _ => Format::Text,
    });
    let out = match &cli.command {
        Command::Zelevinsky => commands::zelevinsky_cmd(need()?, format)?,
        Command::Invariant { kind, method } => commands::invariant_cmd(need()?, *kind, *method, &limits, format)?,
        Command::Enumerate { set } => commands::enumerate_cmd(need()?, *set, &limits, format)?,
        Command::Render { object } => commands::render_cmd(need()?, *object, &limits, format)?,
        Command::Verify { suite, max_n, max_dim } => {
            commands::verify_cmd(instance.as_ref(), *suite, *max_n, *max_dim, &limits, format)?
        }
    };
    if out.verified {
        Ok(out.text)
    } else {
        print!("{}", out.text);
        Err(Failure::Verification)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(EXIT_VERIFICATION),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Capacity { .. } => EXIT_CAPACITY,
                _ => EXIT_VALIDATION,
            })
        }
    }
}
