use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kmk_cli::{
    run_moments, run_phi, run_sample, run_theta, run_verify, Format, Report, DEFAULT_SEED,
};

/// Exact fine-structure moments of the Poissonized Plancherel transition measure.
#[derive(Parser)]
#[command(name = "kmk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Output {
    /// Report format.
    #[arg(long, value_enum, default_value_t = FormatArg::Json, global = true)]
    format: FormatArg,

    /// Write the report here instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// theta_g(k) table and closed forms of Phi_g.
    Theta {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        g_max: u32,
    },
    /// Phi_g as rational functions of c, with their x-expansions.
    Phi {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        g_max: u32,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        k_max: u32,
    },
    /// Exact moment polynomials in 1/n from rook counts.
    Moments {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        k_max: u32,
    },
    /// Cross-checks the pipeline against every oracle; exits 1 on any mismatch.
    Verify {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        g_max: u32,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        k_max: u32,
    },
    /// Monte Carlo estimate of the 2k-th moment under PP(n); exits 1 if |z| >= 4.
    Sample {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn run(cli: &Cli) -> anyhow::Result<Box<dyn Report>> {
    Ok(match cli.command {
        Command::Theta { g_max } => Box::new(run_theta(g_max)?),
        Command::Phi { g_max, k_max } => Box::new(run_phi(g_max, k_max)?),
        Command::Moments { k_max } => Box::new(run_moments(k_max)?),
        Command::Verify { g_max, k_max } => Box::new(run_verify(g_max, k_max)?),
        Command::Sample { n, k, trials, seed } => Box::new(run_sample(n, k, trials, seed)?),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.output.format {
        FormatArg::Json => Format::Json,
        FormatArg::Tsv => Format::Tsv,
    };
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let text = report.render(format);
    match &cli.output.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
