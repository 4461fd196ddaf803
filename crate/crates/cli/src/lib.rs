//! Library half of the `zeon` command-line tool: input parsing, report
//! documents and the command implementations. `main.rs` only does argument
//! parsing and dispatch.

pub mod commands;
pub mod error;
pub mod identities;
pub mod input;
pub mod report;

pub use error::CliError;
