//! Command-line front end for `fusionlab-core`.

pub mod args;
pub mod commands;
pub mod format;
pub mod words;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use fusionlab_core::limits;

pub const CAP_VAR: &str = "FUSIONLAB_TERM_CAP";

/// Parses `argv`, runs the command and writes its output. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    if let Some(raw) = std::env::var_os(CAP_VAR) {
        match raw.to_str().and_then(|s| s.trim().parse::<u64>().ok()) {
            Some(cap) => limits::set_all(cap),
            None => {
                let _ = writeln!(err, "error: {CAP_VAR} must be a non-negative integer");
                return 2;
            }
        }
    }
    match commands::run(&cli.command) {
        Ok(report) => {
            let _ = out.write_all(report.render(cli.format).as_bytes());
            for note in &report.notes {
                let _ = writeln!(err, "note: {note}");
            }
            if report.passed {
                0
            } else {
                let _ = writeln!(err, "error: verification failed");
                1
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.exit_code()
        }
    }
}
