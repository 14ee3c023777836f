//! Command-line front end for `graphsym`: graph files, JSON amplitude
//! reports and exhaustive verification sweeps.

pub mod commands;
pub mod error;
pub mod graphfile;
pub mod report;
pub mod verify;

pub use error::{CliError, CliResult};
