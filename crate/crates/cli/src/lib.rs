//! Front end for `normed-forms-core`: one JSON record per result, CSV for
//! curves, and batch catalogs over discriminant ranges.

pub mod catalog;
pub mod cli;
pub mod commands;
pub mod error;
pub mod records;

use std::io::Write;

pub use cli::{Cli, Command};
pub use error::{CliError, Status};

pub const THREADS_ENV: &str = "NORMED_FORMS_THREADS";

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status, CliError> {
    match &cli.command {
        Command::FormInfo(a) => commands::form_info(a, out),
        Command::Classify(a) => commands::classify(a, out),
        Command::Curve(a) => commands::curve(a, out),
        Command::Verify(a) => commands::verify(a, out),
        Command::Catalog(a) => catalog::catalog(a, out),
        Command::Probe(a) => commands::probe(a, out),
        Command::Lattice(a) => commands::lattice(a, out),
    }
}
