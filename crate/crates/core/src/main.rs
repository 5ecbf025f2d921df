use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use basel::harness::{
    render_figure, run_selected, solve, Figure, FigureFormat, OutputFormat, RunConfig, SolveInput,
    CHECK_NAMES,
};
use basel::Error;

const SEED_ENV: &str = "BASEL_SEED";

/// Numerical checks of the bipolar-coordinate area argument for Σ 1/n² = π²/6.
#[derive(Debug, Parser)]
#[command(
    name = "basel",
    version,
    after_help = "Environment:\n  BASEL_SEED  default seed for `check` when --seed is not given (default 0)\n\nExit status: 0 success, 1 a check failed, 2 usage or domain error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one named check, or all of them
    Check(CheckArgs),
    /// Solve a triangle over the unit base from angles, sides or log sides
    Solve(SolveArgs),
    /// Render a figure as SVG or CSV
    Plot(PlotArgs),
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Check name, or `all`
    #[arg(default_value = "all")]
    name: String,
    /// Seed for sampled checks
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    seed: u64,
    /// Monte Carlo sample count
    #[arg(long, default_value_t = 1_000_000)]
    mc_samples: u64,
    /// Relative tolerance for quadrature
    #[arg(long = "quad-rtol", default_value_t = 1e-10)]
    quad_rtol: f64,
    /// Number of points in the Jacobian sweeps
    #[arg(long, default_value_t = 10_000)]
    jacobian_sweep_points: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Write the report here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SolveArgs {
    /// Base angles in radians
    #[arg(long, num_args = 2, value_names = ["ALPHA", "BETA"], allow_negative_numbers = true)]
    angles: Option<Vec<f64>>,
    /// Side lengths opposite the base angles
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
    sides: Option<Vec<f64>>,
    /// Negated log side lengths x = -ln A, y = -ln B
    #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_negative_numbers = true)]
    logsides: Option<Vec<f64>>,
}

#[derive(Debug, Args)]
struct PlotArgs {
    /// One of regions-ST, amoeba, subdivision, pile
    figure: String,
    #[arg(long, value_enum)]
    format: FigureFormat,
    #[arg(long)]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Check(args) => check(args),
        Command::Solve(args) => {
            let pair = |v: Vec<f64>| (v[0], v[1]);
            let input = if let Some(v) = args.angles {
                let (a, b) = pair(v);
                SolveInput::Angles(a, b)
            } else if let Some(v) = args.sides {
                let (a, b) = pair(v);
                SolveInput::Sides(a, b)
            } else {
                let (x, y) = pair(args.logsides.expect("clap requires one input form"));
                SolveInput::LogSides(x, y)
            };
            println!("{}", solve(input)?);
            Ok(0)
        }
        Command::Plot(args) => {
            let figure: Figure = args.figure.parse()?;
            render_figure(figure, &args.out, args.format)?;
            Ok(0)
        }
    }
}

fn check(args: CheckArgs) -> Result<u8, Error> {
    let config = RunConfig {
        seed: args.seed,
        mc_samples: args.mc_samples,
        quad_rel_tol: args.quad_rtol,
        jacobian_sweep_points: args.jacobian_sweep_points,
        format: args.format,
    };
    let names: Vec<&str> = if args.name == "all" {
        CHECK_NAMES.to_vec()
    } else {
        vec![args.name.as_str()]
    };
    let outcome = run_selected(&names, &config)?;
    for (name, e) in &outcome.errors {
        eprintln!("check {name} could not run: {e}");
    }
    let text = outcome.report.render();
    match &args.out {
        Some(path) => std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        })?,
        None => print!("{text}"),
    }
    Ok(outcome.exit_code as u8)
}
