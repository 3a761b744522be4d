//! The `wkpc` command line.
//!
//! Exit codes: 0 accept or success, 1 reject (or invalid trace), 2 usage or
//! parse error, 3 search limit reached.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::constructions::{build_squares_system, SquaresVariant};
use crate::engine::{brute_force_accepts, search, validate_trace, PcwkSystem, SearchLimits, Verdict};
use crate::format::{parse_system, parse_trace, serialize_scan_report, serialize_system, serialize_trace};
use crate::model::{Symbol, Word};
use crate::verification::{scan_unary, ScanBudget};

pub const EXIT_ACCEPT: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "wkpc", version, about = "Parallel communicating Watson-Crick automata systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide membership of one word.
    Check {
        file: PathBuf,
        #[arg(long)]
        word: String,
        /// Write the accepting run here.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = EngineKind::Lazy)]
        engine: EngineKind,
        #[arg(long)]
        max_configs: Option<usize>,
    },
    /// Decide membership of S^m for m = 0..=M.
    Scan {
        file: PathBuf,
        #[arg(long)]
        symbol: char,
        #[arg(long)]
        max: usize,
        /// Write one `m=.. verdict=.. witness=.. configs=..` record per length.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Fixed per-word budget (default grows with the word length).
        #[arg(long)]
        max_configs: Option<usize>,
    },
    /// Print a built-in system definition.
    Builtin {
        #[arg(value_enum)]
        name: Builtin,
        #[arg(long, default_value = "corrected")]
        variant: SquaresVariant,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a trace file is an accepting run on the word.
    ValidateTrace {
        file: PathBuf,
        #[arg(long)]
        word: String,
        #[arg(long)]
        trace: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum EngineKind {
    Lazy,
    Bruteforce,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Builtin {
    Squares,
}

/// A failure reported on the diagnostic stream with [`EXIT_USAGE`].
struct Usage(String);

fn read(path: &Path) -> Result<String, Usage> {
    fs::read_to_string(path).map_err(|e| Usage(format!("{}: {}", path.display(), e)))
}

fn write_file(path: &Path, text: &str) -> Result<(), Usage> {
    fs::write(path, text).map_err(|e| Usage(format!("{}: {}", path.display(), e)))
}

fn load_system(path: &Path) -> Result<PcwkSystem, Usage> {
    parse_system(&read(path)?).map_err(|e| Usage(format!("{}: {}", path.display(), e)))
}

fn parse_word(sys: &PcwkSystem, text: &str) -> Result<Word, Usage> {
    let w = if text == "-" { Word::empty() } else { Word::parse(text).map_err(|e| Usage(format!("--word: {e}")))? };
    sys.alphabet().check_word(&w).map_err(|e| Usage(format!("--word: {e}")))?;
    Ok(w)
}

/// Runs the CLI on `args` (including the program name).
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, diag: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_ACCEPT };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(diag, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(diag, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Usage> {
    let io = |e: std::io::Error| Usage(e.to_string());
    match command {
        Command::Check { file, word, trace, engine, max_configs } => {
            let sys = load_system(&file)?;
            let upper = parse_word(&sys, &word)?;
            let limits = max_configs.map(|max_configs| SearchLimits { max_configs }).unwrap_or_default();
            let result = match engine {
                EngineKind::Lazy => search(&sys, &upper, limits),
                EngineKind::Bruteforce => brute_force_accepts(&sys, &upper, limits),
            }
            .map_err(|e| Usage(e.to_string()))?;
            writeln!(out, "{}", result.verdict).map_err(io)?;
            if let Some(w) = &result.witness_lower {
                writeln!(out, "witness {}", if w.is_empty() { "-".to_string() } else { w.to_string() }).map_err(io)?;
            }
            writeln!(out, "configs {}", result.configs_explored).map_err(io)?;
            if let (Some(path), Some(t)) = (&trace, &result.trace) {
                write_file(path, &serialize_trace(t))?;
            }
            Ok(match result.verdict {
                Verdict::Accept => EXIT_ACCEPT,
                Verdict::Reject => EXIT_REJECT,
                Verdict::Limit => EXIT_LIMIT,
            })
        }
        Command::Scan { file, symbol, max, report, max_configs } => {
            let sys = load_system(&file)?;
            let symbol = Symbol::new(symbol).map_err(|e| Usage(format!("--symbol: {e}")))?;
            let budget =
                max_configs.map(|max_configs| ScanBudget::fixed(SearchLimits { max_configs })).unwrap_or_default();
            let scan = scan_unary(&sys, symbol, max, budget).map_err(|e| Usage(format!("--symbol: {e}")))?;
            let records = serialize_scan_report(&scan);
            write!(out, "{records}").map_err(io)?;
            let accepted: Vec<String> = scan.accepted_lengths().iter().map(|m| m.to_string()).collect();
            writeln!(out, "accepted {}", accepted.join(",")).map_err(io)?;
            let limited = scan.limited_lengths();
            if !limited.is_empty() {
                let l: Vec<String> = limited.iter().map(|m| m.to_string()).collect();
                writeln!(out, "limit {}", l.join(",")).map_err(io)?;
            }
            if let Some(path) = report {
                write_file(&path, &records)?;
            }
            Ok(if limited.is_empty() { EXIT_ACCEPT } else { EXIT_LIMIT })
        }
        Command::Builtin { name: Builtin::Squares, variant, out: path } => {
            let text = serialize_system(&build_squares_system(variant));
            match path {
                Some(p) => write_file(&p, &text)?,
                None => write!(out, "{text}").map_err(io)?,
            }
            Ok(EXIT_ACCEPT)
        }
        Command::ValidateTrace { file, word, trace } => {
            let sys = load_system(&file)?;
            let upper = parse_word(&sys, &word)?;
            let t = parse_trace(&read(&trace)?).map_err(|e| Usage(format!("{}: {}", trace.display(), e)))?;
            match validate_trace(&sys, &upper, &t) {
                Ok(()) => {
                    writeln!(out, "valid").map_err(io)?;
                    Ok(EXIT_ACCEPT)
                }
                Err(e) => {
                    writeln!(out, "invalid: {e}").map_err(io)?;
                    Ok(EXIT_REJECT)
                }
            }
        }
    }
}
