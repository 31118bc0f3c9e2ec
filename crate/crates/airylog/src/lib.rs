//! Command-line driver for `airylog-core`: run configuration, table output in
//! CSV / JSON / text, and the `verify` suite of acceptance checks.

pub mod app;
pub mod config;
pub mod error;
pub mod output;
pub mod verify;

pub use app::run;
pub use config::{Command, OutputFormat, RunConfig};
pub use error::AppError;
