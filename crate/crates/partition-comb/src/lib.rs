//! Integer-partition combinatorics: dominance order, nilpotent-orbit closures,
//! breakings of one partition along another, Kostka numbers, and counts of
//! permutations with bounded longest increasing subsequence.
//!
//! Everything here is exact integer combinatorics.  Enumerative routines that
//! are inherently exponential (`kostka`, `lis_count`) carry hard input limits
//! and return an error instead of silently running forever.

mod breaking;
mod error;
mod kostka;
mod partition;
mod schensted;
mod spaltenstein;

pub use breaking::{breakings, Breaking};
pub use error::CombinatoricsError;
pub use kostka::{kostka, kostka_with_composition, MAX_TABLEAU_CELLS};
pub use partition::{all_partitions, dominance_leq, orbits_in_closure, Partition};
pub use schensted::{catalan, check_schensted, lis_count, MAX_LIS_LENGTH};
pub use spaltenstein::spaltenstein_dim;
