use std::process::ExitCode;

use clap::Parser;
use epglab::cli::{run, Cli};

fn main() -> ExitCode {
    if let Ok(v) = std::env::var("EPGLAB_THREADS") {
        let threads = match v.parse::<usize>() {
            Ok(t) if t > 0 => t,
            _ => {
                eprintln!("epglab: EPGLAB_THREADS must be a positive integer, got {v:?}");
                return ExitCode::from(2);
            }
        };
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("epglab: cannot size the thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(run(Cli::parse()) as u8)
}
