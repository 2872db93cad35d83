use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use nilg2_core::catalog::{by_name, seven_dim_candidates};
use nilg2_core::format::{parse_algebra_file, serialize_algebra};
use nilg2_core::report::Report;
use nilg2_core::suite::{self, SuiteConfig};
use nilg2_core::MetricLieAlgebra;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Machine,
}

#[derive(Debug, Parser)]
#[command(name = "nilg2", version, about = "Exact checks for metric nilpotent Lie algebras and split G2")]
pub struct Cli {
    /// Report style: readable text or one JSON record per line.
    #[arg(long, value_enum, default_value_t = OutputFormat::Human, global = true)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structure, Witt decomposition, Ricci and holonomy of an algebra file.
    Analyze { file: PathBuf },
    /// Run every check suite and the seven-dimensional verdict.
    VerifyPaper {
        #[arg(long, default_value_t = 100_000)]
        trials: usize,
        #[arg(long, default_value_t = 10_000)]
        refutations: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// The split G2 matrix model.
    G2 {
        #[command(subcommand)]
        action: G2Action,
    },
    /// Exhaustive rank-two classification over {-N..N}^6.
    RankClassify {
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
    /// Seeded search for 3-dim subalgebras of m with constant rank two.
    Search {
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// Embedding obstruction for an algebra file.
    Obstruct { file: PathBuf },
    /// Catalog algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum G2Action {
    /// Closure, invariant forms and stabilizer.
    Check,
    /// Generators, invariant form and three-form as JSON.
    Dump,
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// Write a catalog algebra as an algebra file.
    Export {
        name: String,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn emit(report: &Report, format: OutputFormat, out: &mut dyn Write) -> i32 {
    let text = match format {
        OutputFormat::Human => report.human(),
        OutputFormat::Machine => report.machine(),
    };
    let _ = out.write_all(text.as_bytes());
    if report.passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn load(path: &PathBuf) -> Result<(String, MetricLieAlgebra), String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_algebra_file(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn catalog_names() -> Vec<String> {
    let mut names: Vec<String> = ["nI", "nI-", "nII", "nIII", "nIII-", "abelian"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    names.extend(seven_dim_candidates().iter().map(|e| e.label()));
    names
}

/// Parses `args` (including the program name) and runs the command,
/// writing reports to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let format = cli.format;
    match cli.command {
        Command::Analyze { file } => match load(&file) {
            Ok((name, m)) => emit(&suite::analyze(&name, &m), format, out),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_FAIL
            }
        },
        Command::Obstruct { file } => match load(&file) {
            Ok((name, m)) => emit(&suite::obstruct(&name, &m), format, out),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_FAIL
            }
        },
        Command::VerifyPaper {
            trials,
            refutations,
            seed,
        } => {
            let cfg = SuiteConfig {
                trials,
                refutations,
                seed,
                ..SuiteConfig::default()
            };
            emit(&suite::verify_paper(&cfg), format, out)
        }
        Command::G2 { action: G2Action::Check } => emit(&suite::g2_check(), format, out),
        Command::G2 { action: G2Action::Dump } => match suite::g2_dump() {
            Ok(text) => {
                let _ = writeln!(out, "{text}");
                EXIT_PASS
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_FAIL
            }
        },
        Command::RankClassify { bound } => emit(&suite::rank_classify(bound), format, out),
        Command::Search { trials, seed } => emit(&suite::search(trials, seed), format, out),
        Command::Catalog {
            action: CatalogAction::Export { name, output },
        } => {
            let Some((label, m)) = by_name(&name) else {
                let _ = writeln!(
                    err,
                    "error: unknown catalog algebra {name:?}; known: {}",
                    catalog_names().join(", ")
                );
                return EXIT_USAGE;
            };
            let text = serialize_algebra(&label, &m);
            match output {
                Some(path) => match std::fs::write(&path, text + "\n") {
                    Ok(()) => EXIT_PASS,
                    Err(e) => {
                        let _ = writeln!(err, "error: {}: {e}", path.display());
                        EXIT_FAIL
                    }
                },
                None => {
                    let _ = writeln!(out, "{text}");
                    EXIT_PASS
                }
            }
        }
    }
}
