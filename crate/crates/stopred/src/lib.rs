//! IO companion for `stopred-core`: text file formats, CSV and JSON report
//! emission, the code registry, worker fan-out for pattern counting, and the
//! command-line front end.

pub mod cli;
pub mod formats;
pub mod parallel;
pub mod registry;
