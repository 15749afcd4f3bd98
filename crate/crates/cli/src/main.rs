mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hnash::groebner::{EliminationOrder, GbLimits};
use hnash::OrderKind;

use commands::{HilbertInput, PolyInput};
use report::{CommandResult, Failure};

/// Higher-order Jacobians, Nash-blowup ideals and limits of higher tangent
/// spaces of hypersurfaces over the rationals.
#[derive(Parser)]
#[command(name = "hnash", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct PolyArgs {
    /// Polynomial defining the hypersurface, e.g. "x^3 - y^2".
    #[arg(short = 'f', long)]
    poly: String,
    /// Comma-separated variables, most significant first.
    #[arg(long)]
    vars: String,
    /// Order of the Jacobian.
    #[arg(short = 'n')]
    n: u32,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Abort after this many S-pairs.
    #[arg(long)]
    max_pairs: Option<usize>,
    /// Abort after this many reduction steps.
    #[arg(long)]
    max_reductions: Option<u64>,
}

impl From<BudgetArgs> for GbLimits {
    fn from(b: BudgetArgs) -> Self {
        GbLimits {
            max_pairs: b.max_pairs,
            max_reductions: b.max_reductions,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EliminationArg {
    Block,
    Lex,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Grlex,
    Grevlex,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Jacobian matrix of order n.
    Jac(PolyArgs),
    /// Decide singularity at a point by the rank of the evaluated matrix.
    Singular {
        #[command(flatten)]
        poly: PolyArgs,
        /// Comma-separated rational coordinates, e.g. "1,-2/3".
        #[arg(long)]
        point: String,
    },
    /// Basis of the order-n tangent space at a non-singular point.
    Tangent {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        point: String,
    },
    /// List all maximal minors.
    Minors(PolyArgs),
    /// Maximal minors and the generators of J_n modulo F.
    Nashideal {
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Limits of order-n tangent spaces at a singular point.
    Limits {
        #[command(flatten)]
        poly: PolyArgs,
        /// Singular point to study; the origin by default.
        #[arg(long, alias = "center")]
        point: Option<String>,
        /// Monomial order used to eliminate the auxiliary variable.
        #[arg(long, value_enum, default_value_t = EliminationArg::Block)]
        order: EliminationArg,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Graded dimensions of a monomial ideal or of a hypersurface's local ring.
    Hilbert {
        /// Comma-separated monomial generators, e.g. "x^2,y^2".
        #[arg(long, conflicts_with = "poly", required_unless_present = "poly")]
        monomials: Option<String>,
        /// Hypersurface whose local ring is measured.
        #[arg(short = 'f', long)]
        poly: Option<String>,
        /// Comma-separated variables, most significant first.
        #[arg(long)]
        vars: String,
        /// Highest degree reported.
        #[arg(short = 'n')]
        n: u32,
        /// Point of the hypersurface; the origin by default.
        #[arg(long, requires = "poly")]
        point: Option<String>,
    },
    /// Reduced Gröbner basis of an ideal.
    Gb {
        /// File with one generator per line; blank lines and `#` comments are skipped.
        #[arg(long, conflicts_with = "gens", required_unless_present = "gens")]
        file: Option<PathBuf>,
        /// Generators separated by `;`.
        #[arg(long)]
        gens: Option<String>,
        /// Comma-separated variables, most significant first.
        #[arg(long)]
        vars: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
        /// Comma-separated variables to eliminate.
        #[arg(long)]
        eliminate: Option<String>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

fn with_poly(
    command: &'static str,
    args: &PolyArgs,
    run: impl FnOnce(&PolyInput) -> Result<CommandResult, Failure>,
) -> CommandResult {
    match commands::poly_input(&args.poly, &args.vars).and_then(|input| run(&input)) {
        Ok(result) => result,
        Err(failure) => CommandResult::failed(command, failure, None),
    }
}

fn read_generators(file: Option<&PathBuf>, gens: Option<&str>) -> Result<Vec<String>, Failure> {
    let text = match (file, gens) {
        (Some(path), _) => std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?,
        (None, Some(list)) => list.replace(';', "\n"),
        (None, None) => String::new(),
    };
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect())
}

fn run(command: Command) -> CommandResult {
    match command {
        Command::Jac(args) => with_poly("jac", &args, |i| commands::jac(i, args.n)),
        Command::Singular { poly, point } => {
            with_poly("singular", &poly, |i| commands::singular(i, poly.n, &point))
        }
        Command::Tangent { poly, point } => {
            with_poly("tangent", &poly, |i| commands::tangent(i, poly.n, &point))
        }
        Command::Minors(args) => with_poly("minors", &args, |i| commands::minors(i, args.n)),
        Command::Nashideal { poly, budget } => with_poly("nashideal", &poly, |i| {
            commands::nashideal(i, poly.n, budget.into())
        }),
        Command::Limits {
            poly,
            point,
            order,
            budget,
        } => {
            let order = match order {
                EliminationArg::Block => EliminationOrder::Block,
                EliminationArg::Lex => EliminationOrder::Lex,
            };
            with_poly("limits", &poly, |i| {
                Ok(commands::limits(
                    i,
                    poly.n,
                    point.as_deref(),
                    order,
                    budget.into(),
                ))
            })
        }
        Command::Hilbert {
            monomials,
            poly,
            vars,
            n,
            point,
        } => {
            let input = match (&monomials, &poly) {
                (Some(m), _) => HilbertInput::Monomials(m),
                (None, Some(p)) => HilbertInput::Poly {
                    poly: p,
                    point: point.as_deref(),
                },
                (None, None) => unreachable!("clap requires one input"),
            };
            commands::hilbert(input, &vars, n)
                .unwrap_or_else(|f| CommandResult::failed("hilbert", f, None))
        }
        Command::Gb {
            file,
            gens,
            vars,
            order,
            eliminate,
            budget,
        } => {
            let order = match order {
                OrderArg::Lex => OrderKind::Lex,
                OrderArg::Grlex => OrderKind::GrLex,
                OrderArg::Grevlex => OrderKind::GrevLex,
            };
            read_generators(file.as_ref(), gens.as_deref())
                .and_then(|g| commands::gb(&vars, &g, order, eliminate.as_deref(), budget.into()))
                .unwrap_or_else(|f| CommandResult::failed("gb", f, None))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command);
    match cli.format {
        Format::Json => println!("{}", result.to_json()),
        Format::Text => {
            print!("{}", result.text);
            if let Some(message) = result.error() {
                eprintln!("error ({}): {message}", result.status.name());
            }
        }
    }
    ExitCode::from(result.status.exit_code() as u8)
}
