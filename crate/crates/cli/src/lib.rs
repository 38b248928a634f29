//! Library side of the `trivext` command-line tool: input parsing, report
//! types, the census pipeline and the QPA exporter. The binary in
//! `main.rs` is a thin argument-handling layer over these.

pub mod census;
pub mod input;
pub mod qpa;
pub mod report;
