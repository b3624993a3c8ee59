//! IO, file formats, experiment harness and report generation for the Ising
//! property-testing library.

pub mod bounds_cli;
pub mod config;
pub mod families;
pub mod formats;
pub mod harness;
pub mod oracle_cli;
pub mod report;
