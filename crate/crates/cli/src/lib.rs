//! Command-line front end: file formats, reports and the `homlie` command.

pub mod commands;
pub mod format;
pub mod report;

use clap::error::ErrorKind;
use clap::Parser;
use std::ffi::OsString;
use std::io::Write;

/// Runs the command line `args` (program name first) and returns the exit
/// code: 0 on success, 1 when a requested check fails, 2 on bad input or
/// usage.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match commands::Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    match commands::execute(cli) {
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Ok(o) => {
            let passed = o.report.passed();
            if let (Some(text), true) = (&o.stdout_file, passed) {
                let _ = out.write_all(text.as_bytes());
            } else if o.json {
                let _ = out.write_all(o.report.render_json().as_bytes());
            } else {
                let _ = out.write_all(o.report.render_text().as_bytes());
            }
            if passed {
                0
            } else {
                1
            }
        }
    }
}
