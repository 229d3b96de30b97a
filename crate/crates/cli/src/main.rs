use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use trace3::exactnum::Rat;
use trace3::genmat::Mode;
use trace3::hilbert::Variant;
use trace3::partitions::Partition;
use trace3_cli::commands::{self, Outcome, Shape};

/// Verification checks for the invariants of 3x3 matrices.
#[derive(Parser)]
#[command(name = "trace3", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Record wall-clock times in the reports.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Generator counts and relation counts for d matrices.
    Dims {
        #[arg(long, default_value_t = 3)]
        d: usize,
    },
    /// Decomposition of a graded piece of the square of the augmentation ideal.
    Decompose {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        d: Option<usize>,
    },
    /// Catalog of candidate highest weight vectors.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Relations among the catalog vectors.
    Relations {
        #[command(subcommand)]
        action: RelationsCmd,
    },
    /// Hilbert series of the trace algebra and its kernel.
    Hilbert {
        #[command(subcommand)]
        action: HilbertCmd,
    },
    /// Compare Hilbert series coefficients with ranks at random matrices.
    Oracle {
        #[arg(long, default_value_t = 4)]
        order: u32,
    },
    /// Run every acceptance check.
    CheckAll,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Diag,
    Full,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Diag => Mode::DiagonalFirst,
            ModeArg::Full => Mode::FullGeneric,
        }
    }
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Check that catalog entries are independent highest weight vectors.
    Validate {
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        lambda: Option<Partition>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_enum, default_value = "diag")]
        mode: ModeArg,
    },
}

#[derive(Args)]
struct ShapeArgs {
    #[arg(long)]
    lambda: Partition,
    /// Defaults to the size of lambda.
    #[arg(long)]
    degree: Option<usize>,
    /// Defaults to the number of rows of lambda (3 in degree 8).
    #[arg(long)]
    d: Option<usize>,
}

impl ShapeArgs {
    fn shape(self) -> Shape {
        Shape::new(self.lambda, self.degree, self.d)
    }
}

#[derive(Subcommand)]
enum RelationsCmd {
    /// Compute the relation space among the catalog vectors of one shape.
    Find {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value = "diag")]
        mode: ModeArg,
    },
    /// Check whether a coefficient vector is a relation.
    Verify {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        coeffs: Vec<Rat>,
    },
    /// Tableau basis of the module generated by the relations.
    Basis {
        #[command(flatten)]
        shape: ShapeArgs,
    },
}

#[derive(Subcommand)]
enum HilbertCmd {
    /// Expansion of the Hilbert series of the trace algebra.
    Series {
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long, default_value = "verbatim")]
        variant: Variant,
    },
    /// Graded pieces of the kernel of the symmetric algebra map.
    Kernel {
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long, default_value = "verbatim")]
        variant: Variant,
    },
}

fn run(cli: Cli) -> trace3::Result<Outcome> {
    match cli.command {
        Command::Dims { d } => commands::dims(d),
        Command::Decompose { degree, d } => commands::decompose(degree, d),
        Command::Catalog {
            action:
                CatalogCmd::Validate {
                    degree,
                    lambda,
                    d,
                    mode,
                },
        } => commands::catalog_validate(degree, lambda.as_ref(), d, mode.into()),
        Command::Relations { action } => match action {
            RelationsCmd::Find { shape, mode } => {
                commands::relations_find(&shape.shape(), mode.into(), cli.timings)
            }
            RelationsCmd::Verify { shape, coeffs } => {
                commands::relations_verify(&shape.shape(), &coeffs)
            }
            RelationsCmd::Basis { shape } => commands::relations_basis(&shape.shape()),
        },
        Command::Hilbert { action } => match action {
            HilbertCmd::Series { order, variant } => commands::hilbert_series(order, variant),
            HilbertCmd::Kernel { order, variant } => commands::hilbert_kernel(order, variant),
        },
        Command::Oracle { order } => commands::oracle(order, cli.seed),
        Command::CheckAll => commands::check_all(cli.seed, cli.timings),
    }
}

fn write_json(path: &PathBuf, value: &serde_json::Value) -> bool {
    let body = serde_json::to_string_pretty(value).expect("report serializes") + "\n";
    match std::fs::write(path, body) {
        Ok(()) => true,
        Err(e) => {
            eprintln!("error: cannot write {}: {e}", path.display());
            false
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_path = cli.json.clone();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if let Some(p) = &json_path {
                if !write_json(p, &out.json) {
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(p) = &json_path {
                write_json(p, &serde_json::json!({ "error": e.to_string() }));
            }
            ExitCode::from(2)
        }
    }
}
