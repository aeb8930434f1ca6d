mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use secant_core::groebner::DEFAULT_DEGREE_CAP;
use secant_core::resolve::DEFAULT_MAX_ROW;

#[derive(Parser, Debug)]
#[command(name = "secsyz", version, about = "Secant varieties of curves: ideals, Betti tables and checked predictions")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Characteristic for generated objects (0 for the rationals). Files
    /// carry their own characteristic.
    #[arg(long, global = true, default_value_t = 32003)]
    pub field: u64,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Degree cap for Gröbner basis computations.
    #[arg(long = "max-deg", global = true, default_value_t = DEFAULT_DEGREE_CAP)]
    pub max_deg: u32,
    /// Last Betti row to compute.
    #[arg(long = "max-row", global = true, default_value_t = DEFAULT_MAX_ROW)]
    pub max_row: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Construct ideals.
    Ideal {
        #[command(subcommand)]
        action: IdealAction,
    },
    /// Write a matrix of linear forms.
    Matrix {
        #[command(subcommand)]
        kind: MatrixKind,
    },
    /// Reduced Gröbner basis.
    Gb {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Order::Grevlex)]
        order: Order,
    },
    /// Ideal of the k-th secant variety, truncated at `--maxdeg`.
    Secant {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Largest degree of generators to look for (default k+3).
        #[arg(long)]
        maxdeg: Option<u32>,
        /// Print the degree/dimension certificate as JSON.
        #[arg(long)]
        certify: bool,
    },
    /// Hilbert function and polynomial.
    Hilbert {
        #[arg(long = "in")]
        input: PathBuf,
        /// Last degree of the Hilbert function to print.
        #[arg(long, default_value_t = 8)]
        upto: u32,
    },
    /// Graded Betti table.
    Betti {
        #[arg(long = "in")]
        input: PathBuf,
        /// Last homological index to compute (default: all).
        #[arg(long = "max-i")]
        max_i: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Reduced)]
        method: Method,
    },
    /// Koszul cycle certificate for a matrix of linear forms.
    Cycle {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Eagon-Northcott Betti table for the maximal minors of a generic matrix.
    En {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
    /// Compare predictions with the computed Betti table of a secant ideal.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: i64,
        #[arg(long, default_value_t = 1)]
        k: i64,
        /// The input is the curve; compute its secant ideal first.
        #[arg(long = "from-curve")]
        from_curve: bool,
    },
    /// Reproducible test curves.
    Fixture {
        #[command(subcommand)]
        kind: FixtureKind,
    },
}

#[derive(Subcommand, Debug)]
pub enum IdealAction {
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenKind {
    /// Rational normal curve of degree d.
    Rnc {
        #[arg(long)]
        d: usize,
    },
    /// Maximal minors (or `--size` minors) of a Hankel matrix in x0..xd.
    Hankel {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        size: Option<usize>,
    },
    /// Genus-2 curve of degree 9 in P^7 over F_p (p from --field).
    Genus2,
}

#[derive(Subcommand, Debug)]
pub enum MatrixKind {
    /// Hankel matrix x_{i+j} with `rows` rows in x0..xd.
    Hankel {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        rows: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum FixtureKind {
    Genus2 {
        #[arg(long, default_value_t = 32003)]
        p: u64,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum Order {
    Grevlex,
    Lex,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum Method {
    Reduced,
    Direct,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
