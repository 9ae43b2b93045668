use clap::{Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use sextonions_cli::algebra::Algebra;
use sextonions_cli::report::Usage;
use sextonions_cli::suites::{run_check, CheckCfg};
use sextonions_cli::{dims, export, realforms};

/// Exact-arithmetic checks for the split octonions, the sextonions, the
/// cubic Jordan algebras over them, and the Lie algebras sitting between
/// the rows of the magic square.
#[derive(Parser)]
#[command(name = "sextonions", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite.
    Check {
        /// One of: octonion-relations, alternativity, composition-norm,
        /// sextonion-closure, g2-derivation, jacobi, closure, cubic,
        /// dagger-consistency, cross-model-n1.
        suite: String,
        /// oct, sext, g2, ders, c3h, a5h, d6h, e7h, or j3.
        #[arg(long)]
        algebra: Option<String>,
        /// Composition dimension for j3 suites (1, 2, 4, 6, 8).
        #[arg(long)]
        n: Option<u8>,
        /// Sample count for randomized suites (default 100).
        #[arg(long)]
        samples: Option<u64>,
        /// Random seed for randomized suites.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads (default: all cores).
        #[arg(long)]
        workers: Option<usize>,
        /// Run the exhaustive tensor sweep where the default is sampled.
        #[arg(long)]
        full: bool,
        /// text or json.
        #[arg(long, default_value = "text")]
        format: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute and check the magic-square dimension table.
    Dims {
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write structure constants, the octonion multiplication table, or a
    /// weight diagram.
    Export {
        /// structconst, multable, or weights.
        what: String,
        #[arg(long)]
        algebra: Option<String>,
        /// json, or csv for structconst.
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Norm signature of the sextonions and the quaternion subalgebra facts.
    Realforms {
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

const EXIT_PASS: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    // clap itself exits with code 2 on unparsable flags.
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    };
    ExitCode::from(code)
}

fn run(cli: Cli) -> Result<u8, Usage> {
    match cli.cmd {
        Cmd::Check { suite, algebra, n, samples, seed, workers, full, format, out } => {
            configure_workers(workers)?;
            check_format(&format)?;
            let cfg = CheckCfg {
                algebra: algebra.as_deref().map(Algebra::parse).transpose()?,
                n,
                samples,
                seed,
                full,
            };
            let outcome = run_check(&suite, &cfg)?;
            let rendered = match format.as_str() {
                "json" => outcome.to_json(),
                _ => outcome.to_text(),
            };
            emit(&rendered, out.as_deref())?;
            Ok(if outcome.passed() { EXIT_PASS } else { EXIT_CHECK_FAILED })
        }
        Cmd::Dims { format, out } => {
            check_format(&format)?;
            let outcome = dims::run_dims();
            let rendered = match format.as_str() {
                "json" => outcome.to_json(),
                _ => outcome.to_text(),
            };
            emit(&rendered, out.as_deref())?;
            Ok(if outcome.passed { EXIT_PASS } else { EXIT_CHECK_FAILED })
        }
        Cmd::Export { what, algebra, format, out, workers } => {
            configure_workers(workers)?;
            let alg = algebra.as_deref().map(Algebra::parse).transpose()?;
            let bytes = match what.as_str() {
                "structconst" => {
                    let alg = alg.ok_or_else(|| Usage("structconst needs --algebra".into()))?;
                    match export::export_structconst(alg, &format)? {
                        Ok(bytes) => bytes,
                        Err(math) => {
                            eprintln!("check failed: {math}");
                            return Ok(EXIT_CHECK_FAILED);
                        }
                    }
                }
                "multable" => {
                    if let Some(a) = alg {
                        if a != Algebra::Oct {
                            return Err(Usage(format!(
                                "multable is the octonion table; --algebra {} does not apply",
                                a.name()
                            )));
                        }
                    }
                    export::export_multable(&format)?
                }
                "weights" => {
                    let alg = alg.ok_or_else(|| Usage("weights needs --algebra".into()))?;
                    match export::export_weights(alg, &format)? {
                        Ok(bytes) => bytes,
                        Err(math) => {
                            eprintln!("check failed: {math}");
                            return Ok(EXIT_CHECK_FAILED);
                        }
                    }
                }
                other => {
                    return Err(Usage(format!(
                        "unknown export '{other}' (expected structconst, multable, or weights)"
                    )))
                }
            };
            emit_bytes(&bytes, out.as_deref())?;
            Ok(EXIT_PASS)
        }
        Cmd::Realforms { format, out } => {
            check_format(&format)?;
            let outcome = realforms::run_realforms();
            let rendered = match format.as_str() {
                "json" => outcome.to_json(),
                _ => outcome.to_text(),
            };
            emit(&rendered, out.as_deref())?;
            Ok(if outcome.passed { EXIT_PASS } else { EXIT_CHECK_FAILED })
        }
    }
}

fn check_format(format: &str) -> Result<(), Usage> {
    match format {
        "text" | "json" => Ok(()),
        other => Err(Usage(format!("unknown format '{other}' (expected text or json)"))),
    }
}

fn configure_workers(workers: Option<usize>) -> Result<(), Usage> {
    if let Some(w) = workers {
        if w == 0 {
            return Err(Usage("--workers must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .map_err(|e| Usage(format!("could not set up {w} workers: {e}")))?;
    }
    Ok(())
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), Usage> {
    emit_bytes(text.as_bytes(), out)
}

fn emit_bytes(bytes: &[u8], out: Option<&std::path::Path>) -> Result<(), Usage> {
    match out {
        Some(path) => std::fs::write(path, bytes)
            .map_err(|e| Usage(format!("could not write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| Usage(format!("could not write to stdout: {e}"))),
    }
}
