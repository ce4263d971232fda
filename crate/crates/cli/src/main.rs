use std::process::ExitCode;

use clap::Parser;
use smarand_cli::{run, Cli, CliError, RunManifest};

fn write_outputs(cli: &Cli) -> Result<bool, CliError> {
    let (out, elapsed) = run(cli)?;
    match &cli.out {
        Some(path) => {
            std::fs::write(path, &out.csv)?;
            let command_line = std::env::args().collect::<Vec<_>>().join(" ");
            let m = RunManifest::new(command_line, out.params, elapsed, out.csv.as_bytes());
            std::fs::write(RunManifest::path_for(path), m.render())?;
        }
        None => print!("{}", out.csv),
    }
    Ok(out.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match write_outputs(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("smarand: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
