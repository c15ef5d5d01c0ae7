//! Command-line front end for critical portrait combinatorics.

pub mod commands;
pub mod document;
pub mod svg;
