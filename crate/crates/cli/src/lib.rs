//! Report types and table rendering behind the `hamspec` binary.

pub mod report;
pub mod table;

/// Seed used by randomized strategies when none is given on the command
/// line; fixed so default runs are reproducible.
pub const DEFAULT_SEED: u64 = 0x4b52_4157;
