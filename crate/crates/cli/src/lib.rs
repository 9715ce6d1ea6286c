//! Library side of the `bispinor` command-line tool: the invariant check
//! registry, parameter sweeps and state reports. The binary in `main.rs` is
//! a thin clap front-end over these modules, so integration tests can drive
//! the same code paths directly.

#![allow(clippy::needless_range_loop)]

pub mod checks;
pub mod report;
pub mod state;
pub mod sweep;
