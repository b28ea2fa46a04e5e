//! `advlin`: command-line access to the advlin-core library.
//!
//! Every subcommand prints JSON (or CSV for moment tables) on stdout. On a
//! contract violation or malformed input it prints
//! `{"error": …, "context": …}` on stderr and exits with status 1.

mod graph;
mod io;
mod laws;
mod matrix;
mod poly;
mod rmt;
mod special;
mod wg;

use std::io::Write as _;
use std::process::ExitCode;

use advlin_core::ensembles::SeedSpec;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use io::{CliError, Output};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "advlin", version, about = "Exact and numerical advanced linear algebra")]
struct Cli {
    /// Numerical tolerance (ignored by exact commands).
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    /// Master seed for stochastic commands.
    #[arg(long, global = true, env = "ADVLIN_SEED", default_value_t = 0)]
    seed: u64,
    /// Output format for tabular results.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Polynomials: roots, resultants, discriminants, Cardano.
    #[command(subcommand)]
    Poly(poly::PolyCmd),
    /// Dense matrices: spectra, functional calculus, factorizations, Jordan form.
    #[command(subcommand)]
    Matrix(matrix::MatrixCmd),
    /// Fourier, circulant, Hadamard and bistochastic matrices.
    #[command(subcommand)]
    Special(special::SpecialCmd),
    /// Graphs: spanning trees, Laplacians, loops.
    #[command(subcommand)]
    Graph(graph::GraphCmd),
    /// Partition lattices, Gram and Weingarten matrices.
    #[command(subcommand)]
    Wg(wg::WgCmd),
    /// Random matrices and group characters.
    #[command(subcommand)]
    Rmt(rmt::RmtCmd),
    /// Limit laws: densities, moments, semigroups.
    #[command(subcommand)]
    Laws(laws::LawsCmd),
}

fn context(cmd: &Command) -> String {
    let sub = match cmd {
        Command::Poly(c) => format!("{c:?}"),
        Command::Matrix(c) => format!("{c:?}"),
        Command::Special(c) => format!("{c:?}"),
        Command::Graph(c) => format!("{c:?}"),
        Command::Wg(c) => format!("{c:?}"),
        Command::Rmt(c) => format!("{c:?}"),
        Command::Laws(c) => format!("{c:?}"),
    };
    let top = format!("{cmd:?}");
    let top = top.split('(').next().unwrap_or_default().to_lowercase();
    let sub = sub.split([' ', '{', '(']).next().unwrap_or_default().to_lowercase();
    format!("{top} {sub}")
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    if cli.tol.is_nan() || cli.tol <= 0.0 {
        return Err(io::usage("--tol must be positive"));
    }
    let csv = cli.format == Format::Csv;
    let seed = SeedSpec::new(cli.seed);
    match &cli.command {
        Command::Poly(c) => poly::run(c, cli.tol),
        Command::Matrix(c) => matrix::run(c, cli.tol),
        Command::Special(c) => special::run(c, cli.tol),
        Command::Graph(c) => graph::run(c),
        Command::Wg(c) => wg::run(c),
        Command::Rmt(c) => rmt::run(c, seed, csv),
        Command::Laws(c) => laws::run(c, csv),
    }
}

/// Writes to stdout, treating a closed pipe (e.g. `| head`) as success.
fn emit(text: &str) -> ExitCode {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            eprintln!("{}", json!({ "error": e.to_string(), "kind": "io", "context": "stdout" }));
            ExitCode::FAILURE
        }
        _ => ExitCode::SUCCESS,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(Output::Json(v)) => emit(&(serde_json::to_string_pretty(&v).expect("JSON values serialize") + "\n")),
        Ok(Output::Text(s)) => emit(&s),
        Err(e) => {
            let body = json!({ "error": e.to_string(), "kind": e.kind(), "context": context(&cli.command) });
            eprintln!("{body}");
            ExitCode::FAILURE
        }
    }
}
