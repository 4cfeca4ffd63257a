//! Command-line frontend.
//!
//! Exit codes: 0 success/realizable, 2 invalid passport or input, 3 not
//! realizable, 4 search budget exceeded, 5 verification failed.

use clap::{Parser, Subcommand, ValueEnum};
use constel::builder::{build, BuildError};
use constel::decision::{classify, Verdict};
use constel::oracle::{oracle_decide, OracleResult, SearchBudget};
use constel::passport::{enumerate_passports, validate};
use constel_cli::{format_validated, parse_passport, to_dot, ConstellationDoc};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_INVALID: u8 = 2;
const EXIT_NOT_REALIZABLE: u8 = 3;
const EXIT_BUDGET: u8 = 4;
const EXIT_VERIFY_FAILED: u8 = 5;

#[derive(Parser)]
#[command(
    name = "constel",
    about = "Realizability of Laurent passports: classify, build witnesses, cross-check"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a passport: REALIZABLE, EXCEPTIONAL or INVALID.
    Check {
        /// Passport text, e.g. "2,2;2,2;3,1" (the unique 2-part partition is
        /// the face unless one is marked with '*').
        passport: String,
    },
    /// Construct a witness constellation and write it as JSON.
    Build {
        passport: String,
        /// Output path for the witness document.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check a witness document against a passport.
    Verify {
        /// Path to a witness document produced by `build`.
        doc: PathBuf,
        passport: String,
    },
    /// Decide realizability by exhaustive search, independent of the theorem.
    Oracle {
        passport: String,
        /// Cap on backtracking nodes.
        #[arg(long, default_value_t = u64::MAX)]
        max_nodes: u64,
        /// Cap on wall-clock milliseconds.
        #[arg(long, default_value_t = u64::MAX)]
        max_millis: u64,
    },
    /// List every passport of a given degree and branch-point count with its
    /// verdict.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
        /// Print only the exceptional passports.
        #[arg(long)]
        only_exceptional: bool,
    },
    /// Export a witness document for rendering.
    Export {
        doc: PathBuf,
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
}

fn cmd_check(text: &str) -> u8 {
    let raw = match parse_passport(text) {
        Ok(raw) => raw,
        Err(e) => {
            eprintln!("INVALID {e}");
            return EXIT_INVALID;
        }
    };
    match classify(&raw) {
        Verdict::Realizable => {
            println!("REALIZABLE");
            EXIT_OK
        }
        Verdict::Exceptional(families) => {
            let ids: Vec<String> = families.iter().map(u8::to_string).collect();
            println!("EXCEPTIONAL families=[{}]", ids.join(","));
            EXIT_NOT_REALIZABLE
        }
        Verdict::Invalid(violations) => {
            println!("INVALID");
            for v in violations {
                eprintln!("  {v}");
            }
            EXIT_INVALID
        }
    }
}

fn cmd_build(text: &str, output: &PathBuf) -> u8 {
    let raw = match parse_passport(text) {
        Ok(raw) => raw,
        Err(e) => {
            eprintln!("INVALID {e}");
            return EXIT_INVALID;
        }
    };
    match build(&raw) {
        Ok(tuple) => {
            let doc = ConstellationDoc::from_tuple(&tuple);
            let json = serde_json::to_string_pretty(&doc).expect("serializable");
            if let Err(e) = std::fs::write(output, json) {
                eprintln!("cannot write {}: {e}", output.display());
                return 1;
            }
            println!("OK n={} q={} -> {}", tuple.degree(), tuple.q(), output.display());
            EXIT_OK
        }
        Err(BuildError::Invalid(violations)) => {
            println!("INVALID");
            for v in violations {
                eprintln!("  {v}");
            }
            EXIT_INVALID
        }
        Err(BuildError::NotRealizable(families)) => {
            let ids: Vec<String> = families.iter().map(u8::to_string).collect();
            println!("NOT REALIZABLE families=[{}]", ids.join(","));
            EXIT_NOT_REALIZABLE
        }
        Err(e @ BuildError::PlanInconsistent { .. }) => {
            eprintln!("{e}");
            EXIT_VERIFY_FAILED
        }
    }
}

fn load_doc(path: &PathBuf) -> Result<constel::ConstellationTuple, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let doc: ConstellationDoc =
        serde_json::from_str(&text).map_err(|e| format!("bad document: {e}"))?;
    doc.into_tuple().map_err(|e| format!("bad document: {e}"))
}

fn cmd_verify(doc_path: &PathBuf, text: &str) -> u8 {
    let tuple = match load_doc(doc_path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_INVALID;
        }
    };
    let raw = match parse_passport(text) {
        Ok(raw) => raw,
        Err(e) => {
            eprintln!("INVALID {e}");
            return EXIT_INVALID;
        }
    };
    let passport = match validate(&raw) {
        Ok(p) => p,
        Err(violations) => {
            println!("INVALID");
            for v in violations {
                eprintln!("  {v}");
            }
            return EXIT_INVALID;
        }
    };
    match tuple.verify_against(&passport) {
        Ok(report) if report.is_pass() => {
            println!("PASS");
            EXIT_OK
        }
        Ok(report) => {
            println!("FAIL");
            for f in report.failures {
                eprintln!("  {f}");
            }
            EXIT_VERIFY_FAILED
        }
        Err(e) => {
            println!("FAIL");
            eprintln!("  {e}");
            EXIT_VERIFY_FAILED
        }
    }
}

fn cmd_oracle(text: &str, max_nodes: u64, max_millis: u64) -> u8 {
    let raw = match parse_passport(text) {
        Ok(raw) => raw,
        Err(e) => {
            eprintln!("INVALID {e}");
            return EXIT_INVALID;
        }
    };
    let budget = SearchBudget::new(max_nodes, max_millis);
    match oracle_decide(&raw, budget) {
        Ok(OracleResult::Realizable(witness)) => {
            println!("REALIZABLE");
            let doc = ConstellationDoc::from_tuple(&witness);
            println!("{}", serde_json::to_string(&doc).expect("serializable"));
            EXIT_OK
        }
        Ok(OracleResult::NotRealizable) => {
            println!("NOT REALIZABLE (search space exhausted)");
            EXIT_NOT_REALIZABLE
        }
        Ok(OracleResult::BudgetExceeded { nodes }) => {
            println!("BUDGET EXCEEDED after {nodes} nodes");
            EXIT_BUDGET
        }
        Err(e) => {
            println!("INVALID");
            eprintln!("  {e}");
            EXIT_INVALID
        }
    }
}

fn cmd_enumerate(n: usize, q: usize, only_exceptional: bool) -> u8 {
    for p in enumerate_passports(n, q) {
        match classify(&p.to_raw()) {
            Verdict::Realizable => {
                if !only_exceptional {
                    println!("{}\tREALIZABLE", format_validated(&p));
                }
            }
            Verdict::Exceptional(families) => {
                let ids: Vec<String> = families.iter().map(u8::to_string).collect();
                println!("{}\tEXCEPTIONAL families=[{}]", format_validated(&p), ids.join(","));
            }
            Verdict::Invalid(_) => unreachable!("enumerate yields valid passports"),
        }
    }
    EXIT_OK
}

fn cmd_export(doc_path: &PathBuf, format: ExportFormat) -> u8 {
    let tuple = match load_doc(doc_path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_INVALID;
        }
    };
    match format {
        ExportFormat::Dot => print!("{}", to_dot(&tuple)),
    }
    EXIT_OK
}

fn main() -> ExitCode {
    let args = Args::parse();
    let code = match &args.command {
        Command::Check { passport } => cmd_check(passport),
        Command::Build { passport, output } => cmd_build(passport, output),
        Command::Verify { doc, passport } => cmd_verify(doc, passport),
        Command::Oracle { passport, max_nodes, max_millis } => {
            cmd_oracle(passport, *max_nodes, *max_millis)
        }
        Command::Enumerate { n, q, only_exceptional } => cmd_enumerate(*n, *q, *only_exceptional),
        Command::Export { doc, format } => cmd_export(doc, *format),
    };
    ExitCode::from(code)
}
