//! The `frob` command line.
//!
//! Exit codes: 0 success, 1 a verification suite reported failures (or an
//! internal error), 2 invalid input, 3 arithmetic overflow, 4 a resource
//! ceiling or search horizon was hit.

mod output;

use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

pub use output::{OutputRecord, Payload, PayloadKind, Query, TableRow};

use crate::config::Limits;
use crate::denumerant::{self, dp_table, CountMethod};
use crate::error::Error;
use crate::frobenius::{g_k_closed, g_k_search, list_k_rep};
use crate::numth::DenominationSet;
use crate::oracle::enumerate_reps;
use crate::suites::{coprime_pairs, run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "frob",
    version,
    about = "Frobenius numbers, denumerants and k-representable integers"
)]
pub struct Cli {
    /// Output format; `csv` applies to `table` only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest DP table (cells) any command may allocate.
    #[arg(long, global = true, env = "FROB_MAX_TABLE_CELLS")]
    pub max_table_cells: Option<usize>,

    /// Largest number of representations `reps` may print.
    #[arg(long, global = true, env = "FROB_MAX_REPS_OUT")]
    pub max_reps_out: Option<usize>,

    /// Starting horizon for the g_k search (doubled as needed).
    #[arg(long, global = true, env = "FROB_HORIZON")]
    pub horizon: Option<i64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum GkMethod {
    #[default]
    Auto,
    Closed,
    Search,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print g_k, the largest integer with at most k representations.
    Gk {
        #[arg(long)]
        denoms: DenominationSet,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value_t = GkMethod::Auto)]
        method: GkMethod,
    },
    /// Print p_A(n), the number of representations of n.
    Count {
        #[arg(long)]
        denoms: DenominationSet,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, default_value = "auto")]
        method: CountMethod,
    },
    /// List every positive integer with exactly k representations.
    List {
        #[arg(long)]
        denoms: DenominationSet,
        #[arg(long)]
        k: u64,
    },
    /// Enumerate the representations of n.
    Reps {
        #[arg(long)]
        denoms: DenominationSet,
        #[arg(long)]
        n: i64,
    },
    /// Dump p_A(n) for n = 0..=max.
    Table {
        #[arg(long)]
        denoms: DenominationSet,
        #[arg(long)]
        max: i64,
    },
    /// Run self-verification suites over a coin set or a grid of pairs.
    Verify {
        #[arg(long, conflicts_with = "grid")]
        denoms: Option<DenominationSet>,
        /// Check every coprime pair a < b <= GRID (default 20).
        #[arg(long)]
        grid: Option<i64>,
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 8)]
        max_k: u64,
    },
}

pub const DEFAULT_GRID: i64 = 20;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidInput(_) | Error::NoInverse { .. } | Error::MethodMismatch { .. } => {
            EXIT_INVALID
        }
        Error::Overflow(_) => EXIT_OVERFLOW,
        Error::ResourceLimit { .. } | Error::NotFoundBelowHorizon { .. } => EXIT_RESOURCE,
        Error::Internal(_) => EXIT_FAILED,
    }
}

impl Cli {
    fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            max_table_cells: self.max_table_cells.unwrap_or(d.max_table_cells),
            max_reps_out: self.max_reps_out.unwrap_or(d.max_reps_out),
            horizon: self.horizon,
        }
    }
}

/// Runs one command and returns the query echo, payload and backend name.
pub fn execute(cli: &Cli) -> Result<(Query, Payload, String), Error> {
    let limits = cli.limits();
    Ok(match &cli.command {
        Command::Gk { denoms, k, method } => {
            let (value, backend) = match (method, denoms.as_pair()) {
                (GkMethod::Auto | GkMethod::Closed, Some((a, b))) => {
                    (g_k_closed(a, b, *k)?, "closed")
                }
                (GkMethod::Closed, None) => {
                    return Err(Error::MethodMismatch {
                        method: "closed",
                        got: denoms.len(),
                    })
                }
                _ => (g_k_search(denoms, *k, &limits)?, "search"),
            };
            let query = Query {
                command: "gk".into(),
                denoms: Some(denoms.clone()),
                k: Some(*k),
                method: method.to_possible_value().map(|v| v.get_name().to_string()),
                ..Query::default()
            };
            (query, Payload::Integer(value), backend.into())
        }
        Command::Count { denoms, n, method } => {
            let backend = method.resolve(denoms)?;
            let value = denumerant::count(denoms, *n, backend, &limits)?;
            let query = Query {
                command: "count".into(),
                denoms: Some(denoms.clone()),
                n: Some(*n),
                method: Some(method.to_string()),
                ..Query::default()
            };
            (query, Payload::Count(value.get()), backend.to_string())
        }
        Command::List { denoms, k } => {
            let list = list_k_rep(denoms, *k, None, &limits)?;
            let query = Query {
                command: "list".into(),
                denoms: Some(denoms.clone()),
                k: Some(*k),
                ..Query::default()
            };
            (query, Payload::List(list), "dp".into())
        }
        Command::Reps { denoms, n } => {
            let reps = enumerate_reps(denoms, *n, limits.max_reps_out)?;
            let query = Query {
                command: "reps".into(),
                denoms: Some(denoms.clone()),
                n: Some(*n),
                ..Query::default()
            };
            (query, Payload::Reps(reps), "oracle".into())
        }
        Command::Table { denoms, max } => {
            let table = dp_table(denoms, *max, None, &limits)?;
            let rows = table
                .rows()
                .map(|(n, count)| TableRow { n, count })
                .collect();
            let query = Query {
                command: "table".into(),
                denoms: Some(denoms.clone()),
                max: Some(*max),
                ..Query::default()
            };
            (query, Payload::Table(rows), "dp".into())
        }
        Command::Verify {
            denoms,
            grid,
            suite,
            max_k,
        } => {
            let sets = match denoms {
                Some(d) => vec![d.clone()],
                None => coprime_pairs(grid.unwrap_or(DEFAULT_GRID)),
            };
            let reports = run_suite(*suite, &sets, *max_k, &limits)?;
            let query = Query {
                command: "verify".into(),
                denoms: denoms.clone(),
                grid: denoms.is_none().then(|| grid.unwrap_or(DEFAULT_GRID)),
                suite: Some(suite.to_string()),
                max_k: Some(*max_k),
                ..Query::default()
            };
            (query, Payload::Verify(reports), "suite".into())
        }
    })
}

/// Parses `args` (including the program name), runs the command, writes
/// the result to `out` and diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };

    if cli.format == Format::Csv && !matches!(cli.command, Command::Table { .. }) {
        let _ = writeln!(err, "error: --format csv is only supported by `table`");
        return EXIT_INVALID;
    }

    let start = Instant::now();
    let (query, payload, backend) = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    let failed = matches!(&payload, Payload::Verify(rs) if rs.iter().any(|r| r.failed > 0));

    let written = match cli.format {
        Format::Text => out.write_all(payload.to_text().as_bytes()),
        Format::Csv => out.write_all(payload.to_csv().unwrap_or_default().as_bytes()),
        Format::Json => {
            let record = OutputRecord {
                query,
                result: payload,
                backend,
                elapsed_ms,
            };
            serde_json::to_string(&record)
                .map_err(std::io::Error::other)
                .and_then(|s| writeln!(out, "{s}"))
        }
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: writing output: {e}");
        return EXIT_FAILED;
    }
    if failed {
        EXIT_FAILED
    } else {
        EXIT_OK
    }
}
