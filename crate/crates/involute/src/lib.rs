//! JSON file formats and the command-line front end for `involute-core`.

pub mod cli;
pub mod json;
