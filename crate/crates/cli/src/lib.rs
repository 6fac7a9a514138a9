//! Problem-file parsing and report rendering for the `relcalc` binary.

pub mod error;
pub mod problem;
pub mod report;

pub use error::{CliError, ProblemError};
pub use problem::{parse_problem, ProblemFile};
pub use report::{run, RunOptions};
