//! `sigmacat`: finite 2-categories, σ-limits in Cat, filteredness and
//! flatness from the command line.
//!
//! Reports are JSON on stdout; prose goes to stderr. Exit codes: 0 success,
//! 1 a property check failed, 2 invalid input, 3 undecided.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sigmacat::budget;
use sigmacat::colimits::DEFAULT_CAP;
use sigmacat::Error;

use sigmacat_cli::run::{self, Outcome, Workspace};

/// Environment variable overriding the enumeration budget.
const BUDGET_ENV: &str = "SIGMACAT_BUDGET";

#[derive(Parser)]
#[command(name = "sigmacat", version, about = "Finite 2-categories, sigma-limits in Cat, filteredness and flatness")]
struct Cli {
    /// Word-length cap of the localization.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Node budget of every exhaustive enumeration.
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate any document.
    Validate { file: PathBuf },
    /// The category Hom(P, Q) of transformations of one flavor.
    Hom {
        p: PathBuf,
        q: PathBuf,
        /// s, p, lax, sigma, or `{"sigma": [...]}`.
        #[arg(long, default_value = "p")]
        flavor: String,
        /// Marked 1-cells: `*`, empty, a JSON file of names, or `a,b,c`.
        #[arg(long)]
        sigma: Option<String>,
        /// Op-lax instead of lax transformations.
        #[arg(long)]
        oplax: bool,
    },
    /// The 2-category of elements with its marked 1-cells.
    Elements {
        diagram: PathBuf,
        #[arg(long)]
        pseudo: bool,
        /// Marked 1-cells: `*`, empty, a JSON file of names, or `a,b,c`.
        #[arg(long)]
        sigma: Option<String>,
    },
    /// The weighted limit {W, P} of one flavor.
    Limit {
        weight: PathBuf,
        diagram: PathBuf,
        /// s, p, lax, sigma, or `{"sigma": [...]}`.
        #[arg(long, default_value = "p")]
        flavor: String,
        /// Marked 1-cells: `*`, empty, a JSON file of names, or `a,b,c`.
        #[arg(long)]
        sigma: Option<String>,
    },
    /// A conical or weighted σ-colimit in Cat.
    Colimit {
        diagram: PathBuf,
        /// Marked 1-cells: `*`, empty, a JSON file of names, or `a,b,c`.
        #[arg(long)]
        sigma: Option<String>,
        /// A weight on the opposite of the diagram's base.
        #[arg(long)]
        weight: Option<PathBuf>,
    },
    /// A bilimit of one of the finite shapes.
    Bilimit {
        #[arg(long)]
        shape: String,
        /// Categories, functors and cells of the shape.
        data: Option<PathBuf>,
    },
    /// σ-filteredness (or σ-cofilteredness) of a marked 2-category.
    Filtered {
        file: PathBuf,
        /// Marked 1-cells: `*`, empty, a JSON file of names, or `a,b,c`.
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long)]
        co: bool,
    },
    /// σ-cofinality of a 2-functor.
    Cofinal {
        file: PathBuf,
        /// Marked 1-cells: `*`, empty, a JSON file of names, or `a,b,c`.
        #[arg(long)]
        sigma: Option<String>,
        /// Marking of the target, as for --sigma.
        #[arg(long = "sigma-prime")]
        sigma_prime: Option<String>,
    },
    /// Flatness of a 2-functor or pseudofunctor.
    Flat {
        diagram: PathBuf,
        #[arg(long)]
        pseudo: bool,
        /// Also check the expression as a colimit of representables.
        #[arg(long)]
        canonical: bool,
    },
    /// Left exactness against the bilimit cones of the base.
    Exact {
        diagram: PathBuf,
        #[arg(long)]
        cones: Option<PathBuf>,
    },
    /// A strict 2-functor equivalent to a pseudofunctor.
    Strictify {
        diagram: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Pseudo-Yoneda: Hom(A(A, -), Q) is equivalent to Q(A).
    Yoneda {
        file: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long, required = true)]
        against: Vec<PathBuf>,
    },
}

fn dispatch(ws: &Workspace, c: &Command) -> sigmacat::Result<Outcome> {
    match c {
        Command::Validate { file } => run::validate(ws, file),
        Command::Hom { p, q, flavor, sigma, oplax } => run::hom(ws, p, q, flavor, sigma.as_deref(), *oplax),
        Command::Elements { diagram, pseudo, sigma } => run::elements(ws, diagram, *pseudo, sigma.as_deref()),
        Command::Limit { weight, diagram, flavor, sigma } => run::limit(ws, weight, diagram, flavor, sigma.as_deref()),
        Command::Colimit { diagram, sigma, weight } => run::colimit(ws, diagram, sigma.as_deref(), weight.as_deref()),
        Command::Bilimit { shape, data } => run::bilimit(ws, shape, data.as_deref()),
        Command::Filtered { file, sigma, co } => run::filtered(ws, file, sigma.as_deref(), *co),
        Command::Cofinal { file, sigma, sigma_prime } => run::cofinal(ws, file, sigma.as_deref(), sigma_prime.as_deref()),
        Command::Flat { diagram, pseudo, canonical } => run::flat(ws, diagram, *pseudo, *canonical),
        Command::Exact { diagram, cones } => run::exact(ws, diagram, cones.as_deref()),
        Command::Strictify { diagram, output } => run::strictify_cmd(ws, diagram, output.as_deref()),
        Command::Yoneda { file, object, against } => run::yoneda(ws, file, object, against),
    }
}

fn configure_budget(flag: Option<usize>) -> sigmacat::Result<()> {
    let n = match (flag, std::env::var(BUDGET_ENV)) {
        (Some(n), _) => n,
        (None, Ok(v)) => v.trim().parse().map_err(|_| Error::Invalid(format!("{BUDGET_ENV}={v:?} is not a number")))?,
        (None, Err(_)) => budget::DEFAULT_BUDGET,
    };
    budget::set_limit(n);
    Ok(())
}

fn emit(report: &serde_json::Value) {
    let text = serde_json::to_string_pretty(report).expect("reports serialize");
    // a closed pipe is not an error of ours
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ws = Workspace { cap: cli.cap };
    let res = configure_budget(cli.budget).and_then(|_| dispatch(&ws, &cli.command));
    let code = match res {
        Ok(out) => {
            emit(&out.report);
            eprintln!("{}", out.prose);
            out.code
        }
        Err(e) => {
            emit(&run::error_report(&e));
            eprintln!("error: {e}");
            run::exit_code(&e)
        }
    };
    ExitCode::from(code as u8)
}
