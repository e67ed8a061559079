use clap::Parser;
use flag_hilbert::cli::{run, Request};
use std::process::ExitCode;

fn main() -> ExitCode {
    let req = Request::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&req, &mut out) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
