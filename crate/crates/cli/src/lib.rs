//! File formats, instance generators and the command-line driver built on
//! `timedmatch-core`.

pub mod cli;
pub mod format;
pub mod gen;

pub use format::{FormatError, Instance};
pub use gen::InfeasibleParams;
