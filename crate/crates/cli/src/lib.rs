//! Command-line front end for the `locinv` library.

mod args;
mod commands;
mod error;
mod input;
mod output;

use std::ffi::OsString;

use clap::Parser;

pub use args::{Cli, Command, Format};
pub use error::{CliError, EXIT_INPUT, EXIT_MATH};
pub use output::Report;

/// What one invocation prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match commands::execute(&cli.command) {
        Ok(report) => {
            let stdout = match cli.format {
                Format::Text => report.text(),
                Format::Json => report.json(),
            };
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("{e}\n") },
    }
}
