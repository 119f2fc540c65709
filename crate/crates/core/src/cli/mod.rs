//! The command-line front end: a JSON workspace of named finite structures,
//! the commands that check and translate them, and their reports.

pub mod report;
pub mod run;
pub mod schema;
pub mod workspace;

pub use report::{emit_report, Format, Report, Section};
pub use run::{run, Command, Theorem, What};
pub use schema::Document;
pub use workspace::{load_workspace, parse_document, Workspace};
