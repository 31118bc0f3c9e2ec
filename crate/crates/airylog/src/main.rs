use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use airylog::config::Cli;
use airylog::{run, AppError, RunConfig};

fn execute(cli: Cli) -> Result<(), AppError> {
    let cfg = RunConfig::from_cli(cli)?;
    match &cfg.output_path {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            run(&cfg, &mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            run(&cfg, &mut lock)?;
            lock.flush()?;
        }
    }
    Ok(())
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
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("airylog: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
