//! Batch driver: read a run configuration, compute, write a JSON report.

pub mod config;
pub mod run;

pub use config::{parse_config, ConfigError, PresetSpec, RunConfig, RunTheory};
pub use run::{run, RankEntry, Report, UsageError};
