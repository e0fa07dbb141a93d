//! Library side of the command-line tool: document parsing, assembly of core
//! objects, and the subcommand implementations. The binary in `main.rs` is a
//! thin argument-parsing shell over this.

pub mod build;
pub mod commands;
pub mod doc;
pub mod parse;
