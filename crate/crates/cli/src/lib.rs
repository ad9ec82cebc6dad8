//! Library side of the `resgraph` command-line tool.

pub mod args;
pub mod commands;
pub mod document;
pub mod error;
pub mod report;

pub use commands::{run, Cli, Command, Output};
pub use document::{AnalyticHints, GraphDocument};
pub use error::{CliError, CliResult};
