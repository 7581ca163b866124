//! Std companion to `perind-core`: text and JSON formats, randomized
//! property checks, independent oracles, the self-test suite and the CLI.

pub mod checks;
pub mod cli;
pub mod factor;
pub mod format;
pub mod json;
pub mod oracle;
pub mod selftest;
