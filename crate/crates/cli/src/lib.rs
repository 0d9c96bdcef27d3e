//! Spec-file front end for `wcpkit-core`: a line-oriented document format,
//! its parser and serializer, and a runner producing JSON or text reports.
//!
//! ```text
//! field Q
//! obj A dim 2
//! mor A.eta : K -> A { 0 0 1 }
//! mor A.mu : A*A -> A { 0 0 1; 1 1 1; 1 2 1; 0 3 1 }
//! monoid A.monoid unit A.eta mult A.mu
//! check monoid A.monoid
//! ```

pub mod ast;
pub mod eval;
pub mod fixture_docs;
pub mod parse;
pub mod report;
pub mod serialize;

pub use ast::Document;
pub use eval::run;
pub use parse::{parse, ParseError};
pub use report::{Outcome, Report, Status};
pub use serialize::serialize;

/// Parses and runs a document in one step.
pub fn run_source(src: &str) -> Result<Report, ParseError> {
    parse(src).map(|d| run(&d))
}
