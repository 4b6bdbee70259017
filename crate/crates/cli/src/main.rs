use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use polyomino::ideal::{SearchConfig, DEFAULT_MAX_NODES};
use polyomino::{Polyomino, Sign};
use polyomino_cli::{self as cli, CliError, CliResult, Report, CAP_ENV, INPUT_ERROR};

/// Polyomino ideals: holes, border polygons, labelings and membership witnesses.
///
/// Polyomino files hold either a grid of `#` (cell) and `.` (no cell), top
/// row first, or a JSON list of `[x, y]` cell anchors. Use `-` for stdin.
#[derive(Parser)]
#[command(name = "polyomino", version)]
struct Args {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Phase {
    Plus,
    Minus,
}

#[derive(clap::Args)]
struct Search {
    /// Stop the fiber search after this many states.
    #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
    max_nodes: usize,
}

impl Search {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            max_nodes: self.max_nodes,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse and echo a polyomino.
    Validate { file: PathBuf },
    /// Print whether the polyomino has no holes.
    Simple { file: PathBuf },
    /// List the holes as cell sets.
    Holes { file: PathBuf },
    /// Print the corners of the border polygon.
    Border { file: PathBuf },
    /// Classify the border polygon's corners.
    Corners { file: PathBuf },
    /// Check a labeling file for admissibility.
    LabelingCheck {
        file: PathBuf,
        #[arg(long)]
        labeling: PathBuf,
    },
    /// Print the alternating border labeling as a labeling file.
    BorderLabeling {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "plus")]
        phase: Phase,
    },
    /// List the inner 2-minors.
    Generators { file: PathBuf },
    /// Decide balancedness, with a certificate when it fails.
    Balanced {
        file: PathBuf,
        #[command(flatten)]
        search: Search,
    },
    /// Write a labeling's binomial as a sequence of inner-minor moves.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        labeling: PathBuf,
        #[command(flatten)]
        search: Search,
    },
    /// Search every admissible labeling with bounded entries.
    CrossCheck {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        max_abs: u32,
        #[command(flatten)]
        search: Search,
    },
    /// List every fixed polyomino with `n` cells.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        simple_only: bool,
    },
}

fn read(path: &Path) -> CliResult<String> {
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn load(path: &Path) -> CliResult<Polyomino> {
    cli::parse_polyomino(&read(path)?)
}

fn run(command: Command) -> CliResult<Report> {
    match command {
        Command::Validate { file } => Ok(cli::validate(&load(&file)?)),
        Command::Simple { file } => Ok(cli::simple(&load(&file)?)),
        Command::Holes { file } => Ok(cli::holes_report(&load(&file)?)),
        Command::Border { file } => cli::border(&load(&file)?),
        Command::Corners { file } => cli::corners(&load(&file)?),
        Command::LabelingCheck { file, labeling } => {
            let p = load(&file)?;
            let alpha = cli::parse_labeling(&read(&labeling)?, &p)?;
            cli::labeling_check(&p, &alpha)
        }
        Command::BorderLabeling { file, phase } => {
            let phase = match phase {
                Phase::Plus => Sign::Plus,
                Phase::Minus => Sign::Minus,
            };
            cli::border_labeling_report(&load(&file)?, phase)
        }
        Command::Generators { file } => Ok(cli::generators(&load(&file)?)),
        Command::Balanced { file, search } => Ok(cli::balanced(&load(&file)?, &search.config())),
        Command::Decompose {
            file,
            labeling,
            search,
        } => {
            let p = load(&file)?;
            let alpha = cli::parse_labeling(&read(&labeling)?, &p)?;
            cli::decompose(&p, &alpha, &search.config())
        }
        Command::CrossCheck {
            file,
            max_abs,
            search,
        } => Ok(cli::cross_check(&load(&file)?, max_abs, &search.config())),
        Command::Enumerate { n, simple_only } => {
            let cap = cli::enumeration_cap(std::env::var(CAP_ENV).ok().as_deref())?;
            cli::enumerate(n, simple_only, cap)
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.command) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.render(args.json).as_bytes());
            ExitCode::from(report.status.code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
