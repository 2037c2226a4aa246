//! JSON front end, corpus files, and the timing harness for `nestsolve-core`.
//!
//! The binary in `main.rs` is a thin wrapper over [`cli::run`], which takes
//! the argument vector and standard input and returns the exit code together
//! with the text destined for stdout and stderr.

pub mod bench;
pub mod cli;
pub mod json;

pub use bench::{bench_compare, BenchError, BenchReport};
pub use cli::{run, Outcome};
