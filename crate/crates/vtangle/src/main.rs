use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use vtangle::cli::{run, Cli, EXIT_IO};

fn emit(cli: &Cli, document: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, document),
        None => std::io::stdout().lock().write_all(document.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (code, document) = match run(&cli) {
        Ok(outcome) => (outcome.code, outcome.document),
        Err(e) => {
            eprintln!("vtangle: {e}");
            (e.exit_code(), e.document(cli.format))
        }
    };
    if let Err(e) = emit(&cli, &document) {
        eprintln!("vtangle: cannot write output: {e}");
        return ExitCode::from(EXIT_IO as u8);
    }
    ExitCode::from(code as u8)
}
