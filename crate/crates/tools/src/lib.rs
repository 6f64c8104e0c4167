//! File formats, verification suites and reports for `cyclic-ainf`.

pub mod export;
pub mod format;
pub mod report;
pub mod suites;

pub use report::{ConfigError, FieldChoice, Mutation, Report, RunConfig, Suite};
pub use suites::run_suite;
