//! Command-line front end for `vtangle-core`, with parallel suite drivers and
//! JSON/CSV output.

pub mod cli;
pub mod criteria;
pub mod output;
pub mod parallel;
