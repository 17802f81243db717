//! `painleve` command line: hierarchy tables, NVE potentials and Galois certificates.

mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use painleve_core::nve::NveError;
use painleve_core::painleve::{pii_residual, HierarchyError};
use painleve_core::{
    analyze, analyze_nve, format_polynomial, format_rational, nve_potential,
    parse_rational_expression, ExprError, GaloisCertificate, InvariantViolation, RationalScalar,
    VorobevYablonskiTable,
};
use rayon::prelude::*;
use thiserror::Error;

pub use render::{render_summary, render_text};

#[derive(Debug, Parser)]
#[command(
    name = "painleve",
    version,
    about = "Exact non-integrability certificates for rational Painleve II solutions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Vorobev-Yablonski polynomial Q_n.
    Vy {
        #[arg(long)]
        n: usize,
    },
    /// Print the rational solution w(z, n).
    Ratsol {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Also print the Painleve II residual, which must be 0.
        #[arg(long)]
        verify: bool,
    },
    /// Print the normal variational potential r(z) = 6 w^2 + z.
    Nve {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Run the case analysis on y'' = r y.
    #[command(group(ArgGroup::new("input").required(true).args(["n", "r"])))]
    Analyze {
        /// Use the normal variational potential at parameter n.
        #[arg(long, allow_negative_numbers = true)]
        n: Option<i64>,
        /// A rational function of z, e.g. "6/z^2 + z".
        #[arg(long)]
        r: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Certificates for every n in a range, with a summary table.
    Certify {
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        /// Write the certificates here instead of after the table on stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        parallel: bool,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot parse expression: {0}")]
    Parse(#[from] ExprError),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Invariant(_) => 2,
            _ => 1,
        }
    }
}

impl From<InvariantViolation> for CliError {
    fn from(err: InvariantViolation) -> Self {
        CliError::Invariant(err.0)
    }
}

impl From<HierarchyError> for CliError {
    fn from(err: HierarchyError) -> Self {
        match err {
            HierarchyError::LimitExceeded { .. } => CliError::Usage(err.to_string()),
            HierarchyError::Invariant(v) => v.into(),
        }
    }
}

impl From<NveError> for CliError {
    fn from(err: NveError) -> Self {
        match err {
            NveError::Hierarchy(h) => h.into(),
            other => CliError::Invariant(other.to_string()),
        }
    }
}

fn table_for(n: i64) -> VorobevYablonskiTable {
    let n = u32::try_from(n.unsigned_abs()).unwrap_or(u32::MAX);
    VorobevYablonskiTable::new(n.max(painleve_core::painleve::DEFAULT_MAX_PARAMETER))
}

fn certificate_for(
    n: i64,
    table: &mut VorobevYablonskiTable,
) -> Result<GaloisCertificate, CliError> {
    Ok(analyze_nve(&nve_potential(n, table)?)?)
}

/// Certificates for `from..=to`, ordered by `n` whichever way they were computed.
fn certify_range(from: i64, to: i64, parallel: bool) -> Result<Vec<GaloisCertificate>, CliError> {
    if parallel {
        (from..=to)
            .into_par_iter()
            .map(|n| certificate_for(n, &mut table_for(n)))
            .collect()
    } else {
        let mut table = table_for(from.unsigned_abs().max(to.unsigned_abs()) as i64);
        (from..=to)
            .map(|n| certificate_for(n, &mut table))
            .collect()
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Vy { n } => {
            let mut table = table_for(n as i64);
            let q = table.get(n)?;
            writeln!(out, "{}", format_polynomial(q))?;
        }
        Command::Ratsol { n, verify } => {
            let w = table_for(n).rational_solution(n)?.w;
            writeln!(out, "{}", format_rational(&w))?;
            if verify {
                let residual = pii_residual(&w, &RationalScalar::from_integer(n));
                writeln!(out, "residual: {}", format_rational(&residual))?;
                if !residual.is_zero() {
                    return Err(CliError::Invariant(format!(
                        "w(z, {n}) does not solve Painleve II"
                    )));
                }
            }
        }
        Command::Nve { n } => {
            let problem = nve_potential(n, &mut table_for(n))?;
            writeln!(out, "{}", format_rational(&problem.r))?;
        }
        Command::Analyze { n, r, format } => {
            let certificate = match (n, r) {
                (Some(n), None) => certificate_for(n, &mut table_for(n))?,
                (None, Some(expr)) => analyze(&parse_rational_expression(&expr)?, None)?,
                _ => {
                    return Err(CliError::Usage(
                        "give exactly one of --n and --r".to_string(),
                    ))
                }
            };
            let value = certificate.to_json_value();
            match format {
                Format::Json => writeln!(out, "{}", pretty(&value))?,
                Format::Text => write!(out, "{}", render_text(&value))?,
            }
        }
        Command::Certify {
            from,
            to,
            out: path,
            parallel,
        } => {
            if from > to {
                return Err(CliError::Usage(format!(
                    "--from {from} is greater than --to {to}"
                )));
            }
            let certificates = certify_range(from, to, parallel)?;
            let values: Vec<serde_json::Value> = certificates
                .iter()
                .map(GaloisCertificate::to_json_value)
                .collect();
            write!(out, "{}", render_summary(&values))?;
            let document = pretty(&serde_json::Value::Array(values));
            match path {
                Some(path) => std::fs::write(path, document + "\n")?,
                None => writeln!(out, "\n{document}")?,
            }
        }
    }
    Ok(())
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values serialize")
}

/// Runs the command line with explicit output streams; returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Runs with the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run_with(args, &mut stdout.lock(), &mut stderr.lock());
    let _ = std::io::stdout().flush();
    code
}
