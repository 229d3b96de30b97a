//! Command implementations behind the `trace3` binary.

pub mod checks;
pub mod commands;
