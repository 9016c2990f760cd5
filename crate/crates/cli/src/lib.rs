//! Command-line front end for QMSTP linearization: instance files, reports
//! and exit codes.

pub mod args;
pub mod commands;
pub mod error;
pub mod io;

pub use commands::{run, Command, ExitStatus, Format, Options, Report};
pub use error::CliError;
