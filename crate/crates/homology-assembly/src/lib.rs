//! Graded abelian groups and the closed-form graded invariants of the
//! model links, with the Euler-characteristic bridge to the polynomial
//! invariant.

mod error;
mod graded;
mod invariants;
mod spaces;

pub use error::AssemblyError;
pub use graded::{euler_characteristic, shift, tensor, GradedGroup, Summand};
pub use invariants::{
    check_conjecture_euler, grading_shift, kr_trefoil, kr_unknot, kr_unlink, LinkExample,
};
pub use spaces::{cohomology_cpn, cohomology_ut_cpn};
