//! Support library for the `bohrad` binary: deterministic output formatting
//! and sweep config parsing. Split out so integration tests can exercise the
//! byte-level output contract directly.

pub mod config;
pub mod output;
