//! `casimir`: power-sum characters, cof coefficients, orbital decompositions
//! and Casimir eigenvalue polynomials of A_N from the command line.

mod commands;
mod record;
mod verify;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use commands::{MethodArg, NormArg, TableArg};
use record::{object, OutputRecord, Request, Status};

#[derive(Parser)]
#[command(
    name = "casimir",
    version,
    about = "Exact Weyl orbit and Casimir eigenvalue computations for A_N"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value = "json")]
    format: record::Format,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Add wall-clock timing to the record.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Args)]
struct WeightArgs {
    /// Rank N of A_N.
    #[arg(long)]
    rank: u32,

    /// Dominant weight as comma-separated λ-coefficients.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension (and optionally elements) of the Weyl orbit of a weight.
    Orbit {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long)]
        list: bool,
    },
    /// ch_s in the monomial basis.
    Chs {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long)]
        order: u32,
        #[arg(long, value_enum, default_value = "formula")]
        method: MethodArg,
        /// Sum over the whole representation instead of a single orbit.
        #[arg(long)]
        rep: bool,
    },
    /// cof coefficients of ch_s.
    Cof {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long)]
        order: u32,
        #[arg(long, value_enum, default_value = "formula")]
        method: MethodArg,
        #[arg(long)]
        rep: bool,
    },
    /// Orbital decomposition of the irreducible representation.
    Decompose {
        #[command(flatten)]
        w: WeightArgs,
    },
    /// Eigenvalue polynomial P_p of a class p.
    Eigen {
        #[command(flatten)]
        w: WeightArgs,
        /// Partition class, e.g. "3,2".
        #[arg(long)]
        class: String,
        /// formula: closed form; bruteforce: from cof; both: compare.
        #[arg(long, value_enum, default_value = "formula")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "default")]
        norm: NormArg,
        #[arg(long, value_enum, default_value = "corrected")]
        table: TableArg,
    },
    /// Batch verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: verify::Suite,
        #[arg(long, default_value_t = 6)]
        rank_max: u32,
        #[arg(long, default_value_t = 7)]
        order_max: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coefficient table used for Tier A.
        #[arg(long, value_enum, default_value = "corrected")]
        table: TableArg,
        /// Fail on any erratum candidate.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<casimir::Error> for CliError {
    fn from(e: casimir::Error) -> Self {
        let code = match e {
            casimir::Error::UnsupportedClass(_) => 3,
            ref e if e.is_domain() => 3,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn run(cli: &Cli) -> Result<(OutputRecord, u8), CliError> {
    let (name, (request, status, result), extra_fail) = match &cli.command {
        Command::Orbit { w, list } => {
            let w = commands::parse_weight(w.rank, &w.weight)?;
            ("orbit", commands::orbit(&w, *list), false)
        }
        Command::Chs {
            w,
            order,
            method,
            rep,
        } => {
            let w = commands::parse_weight(w.rank, &w.weight)?;
            ("chs", commands::chs(&w, *order, *method, *rep), false)
        }
        Command::Cof {
            w,
            order,
            method,
            rep,
        } => {
            let w = commands::parse_weight(w.rank, &w.weight)?;
            ("cof", commands::cof(&w, *order, *method, *rep), false)
        }
        Command::Decompose { w } => {
            let w = commands::parse_weight(w.rank, &w.weight)?;
            ("decompose", commands::decompose(&w), false)
        }
        Command::Eigen {
            w,
            class,
            method,
            norm,
            table,
        } => {
            let w = commands::parse_weight(w.rank, &w.weight)?;
            let class = commands::parse_class(class)?;
            (
                "eigen",
                commands::eigen(&w, &class, *method, *norm, *table)?,
                false,
            )
        }
        Command::Verify {
            suite,
            rank_max,
            order_max,
            seed,
            table,
            strict,
        } => {
            if *rank_max == 0 || *order_max == 0 {
                return Err(CliError::input(
                    "--rank-max and --order-max must be positive",
                ));
            }
            let outcome = verify::run(*suite, *rank_max, *order_max, *seed, (*table).into());
            let failed = outcome.failures();
            let status = if failed == 0 {
                Status::Ok
            } else {
                Status::Failed
            };
            let strict_fail = *strict && !outcome.candidates.is_empty();
            let result = object([
                (
                    "passed",
                    json!(outcome.checks.iter().filter(|c| c.status == "pass").count()),
                ),
                ("failed", json!(failed)),
                (
                    "checks",
                    serde_json::to_value(&outcome.checks).expect("serializable"),
                ),
                (
                    "erratum_candidates",
                    serde_json::to_value(&outcome.candidates).expect("serializable"),
                ),
            ]);
            let request = Request {
                suite: Some(format!("{suite:?}").to_lowercase()),
                rank_max: Some(*rank_max),
                order_max: Some(*order_max),
                seed: Some(*seed),
                table: Some(format!("{table:?}").to_lowercase()),
                ..Default::default()
            };
            ("verify", (request, status, result), strict_fail)
        }
    };
    let code = if status == Status::Failed || extra_fail {
        1
    } else {
        0
    };
    let record = OutputRecord {
        command: name.into(),
        request,
        status: if extra_fail { Status::Failed } else { status },
        result,
        timing_ms: None,
    };
    Ok((record, code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool configured once");
    }
    let start = Instant::now();
    match run(&cli) {
        Ok((mut record, code)) => {
            if cli.timing {
                record.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            let text = record.render(cli.format);
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
