//! Problem files, command dispatch and the benchmark corpus behind `zdk`.

pub mod bench;
pub mod problem;
pub mod run;

pub use problem::{parse_problem, Problem, ProblemError, Spec};
pub use run::{run_command, Alg, CliError, Command, Flags, Report};
