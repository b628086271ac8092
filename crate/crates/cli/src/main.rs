mod args;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use cmseq_core::Error;

use args::Cli;

const EXIT_DOMAIN: u8 = 1;
const EXIT_VERIFICATION: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_DOMAIN),
            };
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.render(cli.format).as_bytes());
            if out.verified {
                ExitCode::SUCCESS
            } else {
                eprintln!("cmseq: verification failed");
                ExitCode::from(EXIT_VERIFICATION)
            }
        }
        Err(e) => {
            eprintln!("cmseq: {e}");
            match e {
                Error::Consistency(_) | Error::Unresolved { .. } => ExitCode::from(EXIT_VERIFICATION),
                _ => ExitCode::from(EXIT_DOMAIN),
            }
        }
    }
}
