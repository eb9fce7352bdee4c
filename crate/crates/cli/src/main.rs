mod args;
mod commands;
mod format;
mod verify;

use args::{Cli, Command};
use clap::Parser;
use std::process::ExitCode;

pub const THREADS_ENV: &str = "BLOWUP_PROFILES_THREADS";

#[derive(Debug)]
pub enum Failure {
    /// Argument rejected before any computation.
    Usage(String),
    Io(std::io::Error),
    Solver(String),
    /// Name of the first failing group.
    Verify(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Solver(_) => 2,
            Failure::Verify(_) => 3,
            Failure::Usage(_) => 4,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "invalid arguments: {m}"),
            Failure::Io(e) => write!(f, "i/o error: {e}"),
            Failure::Solver(m) => write!(f, "solver failure: {m}"),
            Failure::Verify(g) => write!(f, "verification failed; first failing group: {g}"),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => builder = builder.num_threads(n),
            _ => return Err(Failure::Usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}"))),
        }
    }
    builder.build().map_err(|e| Failure::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Sweep(a) => {
            a.validate().map_err(Failure::Usage)?;
            commands::sweep(&a, &thread_pool()?)
        }
        Command::SolveSigma(a) => {
            a.validate().map_err(Failure::Usage)?;
            commands::solve_sigma_cmd(&a)
        }
        Command::SolveH(a) => {
            a.validate().map_err(Failure::Usage)?;
            commands::solve_h_cmd(&a)
        }
        Command::Profile(a) => {
            a.validate().map_err(Failure::Usage)?;
            commands::profile(&a)
        }
        Command::Verify(a) => {
            a.validate().map_err(Failure::Usage)?;
            verify::run(&a)
        }
        Command::Asymptotics(a) => {
            a.validate().map_err(Failure::Usage)?;
            commands::asymptotics(&a, &thread_pool()?)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(4) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("blowup: {f}");
            ExitCode::from(f.code())
        }
    }
}
