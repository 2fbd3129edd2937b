use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context as _, Result};
use clap::{Parser, Subcommand};
use h4_cli::dump::{dump, OBJECTS};
use h4_cli::report::to_canonical_json;
use h4_cli::{run_checks, select, Context, Status};

/// Exact verification of the 600-cell, its symmetries, and E8/2E8.
#[derive(Parser)]
#[command(name = "h4verify", version)]
struct Cli {
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks and write a JSON report.
    Verify {
        /// Glob over check ids, e.g. `facts/*`; may be repeated.
        #[arg(long)]
        only: Vec<String>,
        /// Report path (default: stdout).
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Write a canonical JSON dump of one object.
    Dump {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(OBJECTS))]
        object: String,
        /// Output path (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn write_out(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .context("writing stdout"),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("thread pool")?;
    }
    let ctx = Context::new();
    match cli.command {
        Command::Verify { only, report } => {
            let checks = select(&only)?;
            let reports = run_checks(&ctx, &checks);
            write_out(report.as_ref(), &to_canonical_json(&reports))?;
            let failed: Vec<&str> = reports
                .iter()
                .filter(|r| r.status == Status::Fail)
                .map(|r| r.id.as_str())
                .collect();
            for r in &reports {
                eprintln!(
                    "{:<14} {}",
                    r.id,
                    if r.status == Status::Pass {
                        "pass"
                    } else {
                        "FAIL"
                    }
                );
            }
            if failed.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("{} of {} checks failed", failed.len(), reports.len());
                Ok(ExitCode::from(1))
            }
        }
        Command::Dump { object, out } => {
            let value = dump(&ctx, &object)?;
            write_out(out.as_ref(), &to_canonical_json(&value))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
