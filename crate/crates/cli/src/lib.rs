//! Command-line front end: JSON in, JSON reports out.
//!
//! Exit codes: `0` everything applicable holds, `1` a check failed, `2` the
//! input or the invocation was invalid. Reports go to stdout (or `--output`)
//! and a one-line-per-result table goes to stderr.

pub mod commands;
pub mod config;
pub mod io;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub use commands::{execute, generated_corpus, run_suite, Report};
pub use config::{Command, GenKind, RunConfig, SuiteSel};
pub use io::CliError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_INPUT,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    run_config(&cfg, out, err)
}

pub fn run_config(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let report = match execute(cfg) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    for line in &report.summary {
        let _ = writeln!(err, "{line}");
    }
    match cfg.output.as_deref() {
        Some(path) if !report.written => {
            if let Err(e) = io::write_atomic(path, &report.json) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_INPUT;
            }
        }
        _ => {
            if out.write_all(report.json.as_bytes()).is_err() {
                return EXIT_INPUT;
            }
        }
    }
    if report.failed {
        EXIT_FAILED
    } else {
        EXIT_OK
    }
}
