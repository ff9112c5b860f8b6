//! `setinc`: exact spectra and symmetries of set-inclusion graphs.
//!
//! Exit codes: 0 pass, 1 verification failure or runtime error, 2 resource
//! cap exceeded, 64 usage error (bad arguments or parameters).

mod args;
mod commands;

use std::io;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use setinc_core::Error;

use crate::args::{Cli, Command};
use crate::commands::Verdict;

const EXIT_FAIL: u8 = 1;
const EXIT_CAP: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// An error together with the exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn runtime(message: String) -> Self {
        CliError { code: EXIT_FAIL, message }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::NotConverged(_) => EXIT_FAIL,
            _ => EXIT_USAGE,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::runtime(e.to_string())
    }
}

fn run(cli: Cli) -> Result<Verdict, CliError> {
    match cli.command {
        Command::Spectrum { params, line, format } => commands::spectrum(params, line, format),
        Command::Verify { params, line, tol, max_vertices, format, perturb } => {
            commands::verify(params, line, tol, max_vertices, format, perturb)
        }
        Command::Aut { params, brute_force, cap, samples, seed, max_vertices, format } => {
            commands::aut(params, brute_force, cap, samples, seed, max_vertices, format)
        }
        Command::Orbits { params, on, max_vertices, format } => commands::orbits(params, on, max_vertices, format),
        Command::Export { params, line, format, out, max_vertices } => {
            commands::export(params, line, format, out.as_deref(), max_vertices)
        }
        Command::Scheme { n, k, check, max_vertices, format } => commands::scheme(n, k, check, max_vertices, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(EXIT_FAIL),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
