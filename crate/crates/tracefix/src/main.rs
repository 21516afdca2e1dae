use std::process::ExitCode;

use clap::Parser;

use tracefix::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    match run(cli, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(code) => ExitCode::from(code),
        // Failure to write to the streams themselves (e.g. a closed pipe).
        Err(_) => ExitCode::from(2),
    }
}
