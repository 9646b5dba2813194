//! File formats, run reports and the command implementations behind the
//! `teachdim` binary.

pub mod cli;
pub mod commands;
pub mod error;
pub mod format;
pub mod random;
pub mod report;
