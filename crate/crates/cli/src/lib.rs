//! Session language and commands for the `frob` tool.

pub mod app;
pub mod parse;
pub mod report;

pub use parse::{parse_expression, parse_session, ParseError, Session};
