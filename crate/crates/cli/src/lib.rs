//! Library half of the `specbound` command-line tool.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use error::CliError;
