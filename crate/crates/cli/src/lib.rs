//! Command-line front end: reads JSON system documents and emits JSON or CSV
//! reports and DOT graphs.

mod commands;
pub mod document;
pub mod report;

pub use commands::{exit, parse_args, run, Cli, Command, Format, Outcome};
