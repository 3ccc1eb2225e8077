//! Command-line front end: job descriptions, dispatch and reports.

pub mod exec;
pub mod job;

pub use exec::{run, run_report, Outcome};
pub use job::{JobSpec, Primes, Report};
