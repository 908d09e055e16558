use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use graphqec::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, ok) = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let written = match &cli.out {
        Some(p) => std::fs::write(p, &out).map_err(|e| e.to_string()),
        None => std::io::stdout().write_all(out.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(3);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
