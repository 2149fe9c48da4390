// SPDX-License-Identifier: Apache-2.0

mod args;
mod commands;

use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;

use args::{Cli, Format};

/// Consulted only when `--threads` is absent.
const THREADS_ENV: &str = "FLAGBOUND_THREADS";

fn run(cli: Cli) -> anyhow::Result<bool> {
    let threads = match cli.threads {
        Some(t) => Some(t),
        None => match std::env::var(THREADS_ENV) {
            Ok(v) => Some(
                v.trim()
                    .parse()
                    .with_context(|| format!("{THREADS_ENV}={v} is not a thread count"))?,
            ),
            Err(_) => None,
        },
    };
    if let Some(threads) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("setting up the thread pool")?;
    }
    let outcome = commands::run(&cli.command)?;
    let mut body = match cli.format {
        Format::Text => outcome.text,
        Format::Json => outcome.json,
    };
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &cli.output {
        Some(path) => {
            std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{body}"),
    }
    Ok(outcome.ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
