//! Command-line front end for `upkit-core`: text formats, JSON records and the verification
//! harness.

pub mod app;
pub mod format;
pub mod report;
pub mod verify;

pub use app::run;
