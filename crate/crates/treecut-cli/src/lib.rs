//! File formats, instance generation, verification, and benchmarking for
//! the `treecut` binary. Split out as a library so integration tests can
//! drive the same machinery the CLI uses.

pub mod bench;
pub mod formats;
pub mod generate;
pub mod report;
pub mod verify;
