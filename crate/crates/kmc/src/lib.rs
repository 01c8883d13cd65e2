//! Command-line companion to `kmc-core`: group files, trace reports, the
//! property suites, and the `run` / `verify` commands.

pub mod error;
pub mod group_file;
pub mod report;
pub mod run;
pub mod suites;

pub use error::{CliError, Result};
pub use run::{cmd_run, CommandOutput, Format, RunConfig};

use kmc_core::Limits;

/// `verify`: runs the named suite (or `all`) and summarizes. Exit 0 iff
/// every check passed.
pub fn cmd_verify(scope: &str, limits: &Limits) -> CommandOutput {
    let suites = match suites::select(scope) {
        Ok(s) => s,
        Err(e) => {
            return CommandOutput {
                status: 1,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let mut stdout = String::new();
    let mut ok = true;
    for s in suites {
        let report = s.run(limits);
        ok &= report.ok();
        stdout.push_str(&format!("{report}\n"));
    }
    stdout.push_str(if ok { "all checks passed\n" } else { "FAILURES\n" });
    CommandOutput {
        status: if ok { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}
