//! Report types, the verification suite, and the emitters behind the
//! `ncgraded` command line.

pub mod emit;
pub mod report;
pub mod suite;

pub use report::{Report, ReportEntry, Status};
pub use suite::{run_suite, SuiteOptions};
