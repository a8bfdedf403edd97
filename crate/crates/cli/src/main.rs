use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use compfactors::baseline::BaselineMode;

#[derive(Parser, Debug)]
#[command(name = "compfactors", version, about = "Composition factors of Schur functors on the free Lie algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the full coefficient table up to a degree and save it.
    Compute {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        degree: u32,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        threads: Option<u32>,
    },
    /// Compare the puzzle pipeline against the direct plethysm expansion.
    Verify {
        /// Defaults to the degree of `--in` when that is given.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        degree: Option<u32>,
        /// Check a saved table instead of recomputing it.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Baseline::Full)]
        baseline: Baseline,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        threads: Option<u32>,
    },
    /// Time both pipelines degree by degree.
    Bench {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
        /// Skip the baseline above this degree.
        #[arg(long, default_value_t = 6)]
        baseline_cutoff: u32,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        runs: u32,
        #[arg(long, value_enum, default_value_t = Baseline::Full)]
        baseline: Baseline,
        /// Also write the timings as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        threads: Option<u32>,
    },
    /// Rewrite a saved table as CSV or JSON.
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
    },
    /// Render a saved table as an SVG heatmap.
    Heatmap {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the conjecture scans and push-sequence analysis.
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Baseline {
    Full,
    Truncated,
}

impl From<Baseline> for BaselineMode {
    fn from(b: Baseline) -> Self {
        match b {
            Baseline::Full => BaselineMode::Full,
            Baseline::Truncated => BaselineMode::Truncated,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { commands::EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Compute { degree, out, threads } => commands::compute(degree as usize, &out, threads),
        Command::Verify { degree, input, baseline, threads } => {
            commands::verify(degree.map(|d| d as usize), input.as_deref(), baseline.into(), threads)
        }
        Command::Bench { max_degree, baseline_cutoff, runs, baseline, csv, threads } => commands::bench(
            max_degree as usize,
            baseline_cutoff as usize,
            runs as usize,
            baseline.into(),
            csv.as_deref(),
            threads,
        ),
        Command::Export { input, format, out } => commands::export(&input, matches!(format, Format::Json), &out),
        Command::Heatmap { input, out } => commands::heatmap(&input, &out),
        Command::Analyze { input, out } => commands::analyze(&input, &out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
