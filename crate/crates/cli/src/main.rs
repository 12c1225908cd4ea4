//! `gcs`: command-line front end.
//!
//! Every command writes one JSON report to stdout and, unless `--json` is
//! given, a short summary to stderr. Exit codes: 0 pass, 1 negative
//! verdict, 2 usage or input error.

mod commands;
mod resolve;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "gcs", version, about = "Generalized complex structures on cotangent Lie algebras")]
struct Cli {
    /// Only print the JSON report.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct AlgebraArgs {
    /// Catalog name, table row label or path to an algebra file.
    #[arg(long)]
    pub algebra: String,
    /// Parameter value `name=value`; repeatable.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    pub params: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Catalog entries with their parameters and constraints.
    List,
    /// Checks a structure file exactly and reports its type.
    Verify {
        /// Defaults to the algebra named in the structure file.
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        structure: PathBuf,
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
    /// Betti numbers of an algebra or of its cotangent algebra.
    Betti {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        cotangent: bool,
        /// `a..b` (inclusive) or a single degree; defaults to all.
        #[arg(long)]
        degrees: Option<String>,
    },
    /// Decides whether the algebra carries a symplectic form.
    Obstruct {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Betti numbers and example structures of every table row.
    Table1,
    /// The main theorem's Betti criterion against the absence of structures.
    TheoremMain,
    /// The type 1 corollary on every row with some structure.
    CorollaryType1,
    /// Numeric search for a structure, certified exactly when found.
    Search {
        algebra: String,
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
        #[arg(long = "type")]
        type_k: Option<usize>,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        restarts: Option<usize>,
        #[arg(long)]
        max_iters: Option<usize>,
        #[arg(long)]
        bound: Option<f64>,
    },
    /// Checks a deduction script.
    Replay {
        file: PathBuf,
        /// Values for parameters the script leaves open; the others stay symbolic.
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
    /// Catalog file operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// The +i eigenspace of a structure and the round trip back.
    Eigenspace {
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        structure: PathBuf,
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Writes algebra and structure files under DIR.
    Export { dir: PathBuf },
}

/// A finished command: the report, whether it passed, and a summary line.
pub struct Outcome {
    pub report: Value,
    pub ok: bool,
    pub summary: String,
}

/// Errors carry exit code 2.
pub type CmdResult = Result<Outcome, String>;

fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::List => commands::list(),
        Command::Verify { algebra, structure, params } => commands::verify(algebra, &structure, &params),
        Command::Betti { alg, cotangent, degrees } => commands::betti(&alg, cotangent, degrees.as_deref()),
        Command::Obstruct { alg } => commands::obstruct(&alg),
        Command::Table1 => commands::table1(),
        Command::TheoremMain => commands::theorem_main(),
        Command::CorollaryType1 => commands::corollary_type1(),
        Command::Search { algebra, params, type_k, seed, restarts, max_iters, bound } => {
            commands::search(&algebra, &params, type_k, seed, restarts, max_iters, bound)
        }
        Command::Replay { file, params } => commands::replay(&file, &params),
        Command::Catalog { action: CatalogAction::Export { dir } } => commands::export(&dir),
        Command::Eigenspace { algebra, structure, params } => commands::eigenspace(algebra, &structure, &params),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap names the offending token and exits 2 on usage errors
            e.exit();
        }
    };
    let quiet = cli.json;
    match dispatch(cli.command) {
        Ok(out) => {
            let mut report = out.report;
            if let Value::Object(map) = &mut report {
                map.insert("ok".into(), Value::Bool(out.ok));
            }
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            if !quiet {
                eprintln!("{}", out.summary);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(msg) => {
            let report = json!({ "schema": "error/1", "ok": false, "error": msg });
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
