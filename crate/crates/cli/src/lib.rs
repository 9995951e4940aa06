//! Command-line front end for `boolrsk` and its acceptance suite.

pub mod args;
pub mod commands;
pub mod envelope;
pub mod oracles;
pub mod selftest;

use clap::Parser;

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the CLI on `argv` (program name first) without touching the process.
pub fn invoke<I, T>(argv: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Invocation { stdout: text, stderr: String::new(), code }
            } else {
                Invocation { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match commands::execute(&cli) {
        Ok(report) => Invocation {
            stdout: report.render(cli.json),
            stderr: String::new(),
            code: if report.success { 0 } else { 1 },
        },
        Err(e) => Invocation {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}
