//! Front end for the `leibniz-braid` binary: the workspace file format and
//! the command runner.

pub mod fixtures;
pub mod run;
pub mod workspace;

pub use run::{run, Options, Outcome};
pub use workspace::{parse, serialize, InputError, Workspace};
