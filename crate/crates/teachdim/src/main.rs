use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use teachdim::cli::Cli;
use teachdim::commands::run;
use teachdim::error::{EXIT_CLAIM_FAILED, EXIT_OK};
use teachdim::report::Status;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match run(&cli, &echo) {
        Ok(report) => {
            let out = if cli.config.machine { report.to_machine() } else { report.to_text() };
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::from(match report.status {
                Status::Ok => EXIT_OK,
                Status::ClaimFailed => EXIT_CLAIM_FAILED,
            })
        }
        Err(e) => {
            eprintln!("teachdim: {e}");
            e.exit_code()
        }
    }
}
