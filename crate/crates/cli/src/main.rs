mod commands;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{Failure, Output};

#[derive(Parser, Debug)]
#[command(name = "betasplit", version, about = "Exact and numerical toolkit for the Beta/Bernstein operator factorisation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Degree parameter of the operator
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Eigen index
    #[arg(long, global = true)]
    pub k: Option<usize>,
    /// Moment order or monomial degree
    #[arg(long, global = true)]
    pub m: Option<usize>,
    /// Monomial index for `monomials`
    #[arg(long, global = true)]
    pub j: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub op: Option<Op>,
    /// Number of uniform grid points on [0, 1]
    #[arg(long, global = true, default_value_t = 201)]
    pub grid: usize,
    /// Working precision in bits for extended-precision evaluation (64, 128, 256, 512 or 1024)
    #[arg(long, global = true, default_value_t = 256)]
    pub bits: usize,
    /// Quadrature tolerance
    #[arg(long, global = true, default_value_t = 1e-6)]
    pub tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Images of the monomials e_j under an operator
    Monomials,
    /// Central moments M_{n,m} of F_n
    Moments,
    /// Spectra and eigenpolynomials
    Eigen {
        /// Print the n-independent limit polynomial p_k* instead
        #[arg(long)]
        limit: bool,
    },
    /// Basis polynomials phi_{n,i}, rho_{n,j} or b_{n,i}, or their values on the grid
    Basis {
        #[arg(long, value_enum, default_value_t = Family::Phi)]
        family: Family,
        /// Tabulate values on the grid instead of coefficients
        #[arg(long)]
        curve: bool,
    },
    /// Lebesgue function of F_n: curve, maximum, or maxima table
    Lebesgue {
        #[arg(long, conflicts_with = "table")]
        max: bool,
        /// Maxima for n = 10, 20, ..., 70
        #[arg(long)]
        table: bool,
    },
    /// Rate check of n^2 (F_n p - p) against its limit for p = e_m
    Voronovskaya {
        /// Comma-separated increasing list of n
        #[arg(long, value_delimiter = ',', default_values_t = [250, 1000])]
        ns: Vec<usize>,
    },
    /// Limits of the eigenpolynomial expansions for index k
    Limits {
        #[arg(long, value_delimiter = ',', default_values_t = [100, 1000])]
        ns: Vec<usize>,
    },
    /// Exact identity suite; exits with status 1 if any check fails
    Verify,
    /// Sup and L2 errors of F_n f and B_n f for sample functions
    Bench {
        #[arg(long, value_enum, default_value_t = BenchFunction::All)]
        function: BenchFunction,
        #[arg(long, value_delimiter = ',', default_values_t = [5, 10, 20, 50])]
        ns: Vec<usize>,
    },
    /// Quadrature check that G_2 differs from B_2, with the G_n moment bounds
    Contradiction,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Bernstein,
    Beta,
    BetaInv,
    #[value(name = "F")]
    F,
    Stancu,
    Durrmeyer,
    DurrmeyerInv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Phi,
    Rho,
    Bernstein,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchFunction {
    All,
    Square,
    Kink,
    Sine,
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, status) = match commands::run(&cli) {
        Ok(Output { text, failed }) => (text, if failed { 1 } else { 0 }),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Computation(err)) => {
            eprintln!("error: {err}");
            return ExitCode::from(1);
        }
    };
    if let Err(err) = emit(&cli, &text) {
        eprintln!("error: cannot write output: {err}");
        return ExitCode::from(1);
    }
    ExitCode::from(status)
}
