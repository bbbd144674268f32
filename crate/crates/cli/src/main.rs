mod commands;
mod dirs;

use std::process::ExitCode;

use clap::Parser;

use commands::{Cli, Outcome};
use linemap_core::Error;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) | Error::Format(_) => 2,
        Error::Resource(_) => 3,
        Error::Construction(_) | Error::Internal(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = cli.out.clone();
    match commands::run(cli).and_then(|o| o.write(out.as_deref()).map(|()| o)) {
        Ok(Outcome { ok: true, .. }) => ExitCode::SUCCESS,
        Ok(Outcome { ok: false, .. }) => ExitCode::from(1),
        Err(e) => {
            eprintln!("linemap: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
