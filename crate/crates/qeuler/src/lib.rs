//! Std companion to `qeuler-core`: a threaded executor, the verification suites
//! behind the `qeuler` binary, and their JSON and CSV renderings.

pub mod render;
pub mod suites;
pub mod threads;

pub use suites::{Bounds, Suite, SuiteRun};
pub use threads::Threaded;

/// Version of the JSON layout emitted by every command.
pub const SCHEMA: u64 = 1;
