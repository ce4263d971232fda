//! Command-line front end for `smarand-core`: argument parsing, the verify
//! suites, and run manifests. The `smarand` binary is a thin wrapper.

pub mod args;
pub mod commands;
pub mod manifest;
pub mod numbers;
pub mod suites;

use std::time::Instant;

pub use args::Cli;
pub use commands::{execute, Output};
pub use manifest::RunManifest;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(smarand_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("thread pool: {0}")]
    Threads(#[from] rayon::ThreadPoolBuildError),
}

impl From<smarand_core::Error> for CliError {
    fn from(e: smarand_core::Error) -> Self {
        match e {
            smarand_core::Error::InvalidArgument(m) => CliError::Usage(m),
            e => CliError::Core(e),
        }
    }
}

impl CliError {
    /// 2 for usage errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// Runs the parsed command on a pool of `cli.threads` workers (or the
/// default pool) and returns its output with the elapsed time.
pub fn run(cli: &Cli) -> Result<(Output, f64), CliError> {
    let start = Instant::now();
    let out = match cli.threads {
        Some(0) => return Err(CliError::Usage("--threads must be positive".into())),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()?
            .install(|| execute(&cli.command, cli.table_limit))?,
        None => execute(&cli.command, cli.table_limit)?,
    };
    Ok((out, start.elapsed().as_secs_f64()))
}
