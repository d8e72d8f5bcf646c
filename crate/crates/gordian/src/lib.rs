//! Files, reports and the command line for `gordian-core`.

pub mod cli;
pub mod format;
pub mod report;
