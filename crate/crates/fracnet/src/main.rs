use std::process::ExitCode;

use fracnet::cli::{load_config, run, OUTDIR_ENV};
use fracnet::Error;

fn main() -> ExitCode {
    let config = match load_config(std::env::args_os(), std::env::var_os(OUTDIR_ENV)) {
        Ok(config) => config,
        Err(Error::Usage(err)) => err.exit(),
        Err(err) => {
            eprintln!("fracnet: {err}");
            return ExitCode::from(2);
        }
    };
    match run(&config) {
        Ok(_) => ExitCode::SUCCESS,
        Err(Error::Usage(err)) => err.exit(),
        Err(err @ Error::InvalidConfig(_)) => {
            eprintln!("fracnet: {err}");
            ExitCode::from(2)
        }
        Err(err) => {
            eprintln!("fracnet: {err}");
            ExitCode::FAILURE
        }
    }
}
