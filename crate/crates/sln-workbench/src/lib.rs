//! One-stop workbench facade: re-exports every layer of the toolchain
//! (braid words, the polynomial invariant, partition combinatorics, slice
//! geometry, numerical transport, graded invariants) plus the acceptance
//! matrix in [`verify`].
//!
//! The `examples/` directory of this crate is the guided tour: one
//! runnable program per capability.

pub use braid_core;
pub use homology_assembly;
pub use partition_comb;
pub use skein_poly;
pub use slice_geometry;
pub use transport_engine;

pub mod verify;
