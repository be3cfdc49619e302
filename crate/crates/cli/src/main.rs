//! `catgate`: figure data and figures of merit for the Fock-state cat gate.
//!
//! Exit status: 0 on success, 2 for an invalid configuration, 3 when the
//! computation fails (impossible outcome, singular expansion, ...), 1 when
//! the output cannot be written.

mod args;
mod commands;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use catgate::Grid1D;
use output::Table;

#[derive(Parser, Debug)]
#[command(name = "catgate", version, about = "Fock-state cat gate simulations")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Record wall-clock time in the metadata. Output is then no longer
    /// byte-identical between runs.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact vs semiclassical output fidelity F_scl over photon numbers.
    FidelityScan(FidelityScan),
    /// Exact output vs perfect cat fidelity F_cat.
    CatFidelity(CatFidelity),
    /// Output Wigner function on a grid (long format x, p, W).
    Wigner(Wigner),
    /// Homodyne outcome probability density P.
    ProbDensity(ProbDensity),
    /// Acceptance-window fidelity F_mix and probability P_mix.
    MixedFidelity(MixedFidelity),
    /// Semiclassical images of an uncertainty disk.
    SclMap(SclMap),
}

#[derive(Args, Debug)]
pub struct FidelityScan {
    /// Photon numbers: list `1,5,15` or inclusive range `1:25`.
    #[arg(long, value_parser = args::photon_numbers, default_value = "1:25")]
    n: ::std::vec::Vec<u32>,
    /// Measurement outcome.
    #[arg(long, value_parser = args::finite_real, default_value_t = 0.0, allow_hyphen_values = true)]
    ym: f64,
    /// Input positions: list `a,b,c` or range `a:b:count`.
    #[arg(long, value_parser = args::reals, default_value = "0,1,2", allow_hyphen_values = true)]
    x0: ::std::vec::Vec<f64>,
    /// Input momentum.
    #[arg(long, value_parser = args::finite_real, default_value_t = 0.0, allow_hyphen_values = true)]
    p0: f64,
}

#[derive(Args, Debug)]
pub struct CatFidelity {
    /// Photon numbers: list `1,5,15` or inclusive range `1:25`.
    #[arg(long, value_parser = args::photon_numbers)]
    n: ::std::vec::Vec<u32>,
    /// Measurement outcome (ignored with --ym-equals-x0).
    #[arg(long, value_parser = args::finite_real, default_value_t = 0.0, allow_hyphen_values = true)]
    ym: f64,
    /// Use y_m = x0 for every input position.
    #[arg(long)]
    ym_equals_x0: bool,
    /// Input positions: list `a,b,c` or range `a:b:count`.
    #[arg(long, value_parser = args::reals, default_value = "0", allow_hyphen_values = true)]
    x0: ::std::vec::Vec<f64>,
    /// Input momentum.
    #[arg(long, value_parser = args::finite_real, default_value_t = 0.0, allow_hyphen_values = true)]
    p0: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    Mehler,
    Quadrature,
    Both,
}

impl Engine {
    fn name(self) -> &'static str {
        match self {
            Engine::Mehler => "mehler",
            Engine::Quadrature => "quadrature",
            Engine::Both => "both",
        }
    }
}

#[derive(Args, Debug)]
pub struct Wigner {
    /// Photon number.
    #[arg(long)]
    n: u32,
    /// Measurement outcome.
    #[arg(long, value_parser = args::finite_real, default_value_t = 0.0, allow_hyphen_values = true)]
    ym: f64,
    /// Input position.
    #[arg(long, value_parser = args::finite_real, default_value_t = 0.0, allow_hyphen_values = true)]
    x0: f64,
    /// Input momentum.
    #[arg(long, value_parser = args::finite_real, default_value_t = 0.0, allow_hyphen_values = true)]
    p0: f64,
    /// Series engine, quadrature reference, or both.
    #[arg(long, value_enum, default_value_t = Engine::Mehler)]
    engine: Engine,
    /// Also map the perfect reference cat.
    #[arg(long)]
    reference_cat: bool,
    /// `a:b:count`; default: 201 points within 6 of (x0 + y_m)/2.
    #[arg(long, value_parser = args::axis, allow_hyphen_values = true)]
    x_range: Option<Grid1D>,
    /// `a:b:count`; default: 201 points within sqrt(2n+1) + 4 of p0.
    #[arg(long, value_parser = args::axis, allow_hyphen_values = true)]
    p_range: Option<Grid1D>,
}

#[derive(Args, Debug)]
pub struct ProbDensity {
    /// Photon numbers: list `1,5,15` or inclusive range `1:25`.
    #[arg(long, value_parser = args::photon_numbers)]
    n: ::std::vec::Vec<u32>,
    /// Measurement outcomes: list `a,b,c` or range `a:b:count`.
    #[arg(long, value_parser = args::reals, default_value = "0", allow_hyphen_values = true)]
    ym: ::std::vec::Vec<f64>,
    /// Input position.
    #[arg(long, value_parser = args::finite_real, default_value_t = 0.0, allow_hyphen_values = true)]
    x0: f64,
}

#[derive(Args, Debug)]
pub struct MixedFidelity {
    /// Photon numbers: list `1,5,15` or inclusive range `1:25`.
    #[arg(long, value_parser = args::photon_numbers)]
    n: ::std::vec::Vec<u32>,
    /// Window widths: list `a,b,c` or range `a:b:count`, all positive.
    #[arg(long, value_parser = args::positive_reals)]
    d: ::std::vec::Vec<f64>,
    /// Input position; the window is centred here.
    #[arg(long, value_parser = args::finite_real, default_value_t = 0.0, allow_hyphen_values = true)]
    x0: f64,
    /// Input momentum.
    #[arg(long, value_parser = args::finite_real, default_value_t = 0.0, allow_hyphen_values = true)]
    p0: f64,
}

#[derive(Args, Debug)]
pub struct SclMap {
    /// Photon number.
    #[arg(long)]
    n: u32,
    /// Measurement outcome.
    #[arg(long, value_parser = args::finite_real, default_value_t = 0.0, allow_hyphen_values = true)]
    ym: f64,
    /// Disk centre position.
    #[arg(long, value_parser = args::finite_real, default_value_t = 0.0, allow_hyphen_values = true)]
    x0: f64,
    /// Disk centre momentum.
    #[arg(long, value_parser = args::finite_real, default_value_t = 0.0, allow_hyphen_values = true)]
    p0: f64,
    /// Disk radius.
    #[arg(long, value_parser = args::positive_real, default_value_t = 1.0)]
    radius: f64,
    /// Boundary samples (at least 8).
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(8..))]
    samples: u64,
}

fn run(cli: &Cli) -> catgate::Result<Table> {
    match &cli.command {
        Command::FidelityScan(a) => commands::fidelity_scan(a),
        Command::CatFidelity(a) => commands::cat_fidelity(a),
        Command::Wigner(a) => commands::wigner(a),
        Command::ProbDensity(a) => commands::prob_density(a),
        Command::MixedFidelity(a) => commands::mixed(a),
        Command::SclMap(a) => commands::scl_map(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut table = match run(&cli) {
        Ok(t) => t,
        Err(e @ (catgate::Error::InvalidParameter { .. } | catgate::Error::InvalidGrid(_))) => {
            eprintln!("error: invalid configuration: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    if let Some((row, column)) = table.first_non_finite() {
        eprintln!("error: non-finite value in column {column} of row {row}");
        return ExitCode::from(3);
    }
    if cli.timings {
        table.meta("elapsed_seconds", start.elapsed().as_secs_f64());
    }
    let text = match cli.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
