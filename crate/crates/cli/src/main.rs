use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use ncframe_cli::{run, Cli};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = stdout.write_all(report.stdout.as_bytes());
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
