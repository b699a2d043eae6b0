//! Command-line front end: algebra files, axis and axet checks, catalog
//! emission and the reproduction suite.

pub mod commands;
pub mod format;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use commands::{Cli, CliError, Command};
pub use format::{emit_algebra_file, parse_algebra_file, FileError};

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code: 0 pass, 1 verification failure, 2 parse
/// or usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // --help and --version are not errors
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match commands::execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
