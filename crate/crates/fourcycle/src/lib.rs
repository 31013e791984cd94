//! Edge-list IO, hash-map baselines, benchmarks and the command-line front
//! end for `fourcycle-core`.

pub mod bench;
pub mod cli;
pub mod hash;
pub mod load;
pub mod verify;

pub use fourcycle_core as core;
