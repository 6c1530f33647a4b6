//! Numerical-exact hybrid model of the block companion slice, its
//! adjoint-quotient map, fiber sampling, and the rank-one local model used by
//! the transport experiments.
//!
//! Matrices are dense complex double-precision (`nalgebra`); every spectral
//! decision (clustering, multiplicity, rank) is made with explicit tolerances
//! and fails loudly instead of guessing.

mod config;
mod error;
mod matrix;
mod sampler;
mod slice;
mod spectral;
mod transversality;
mod xnd;

pub use config::BipartiteConfig;
pub use error::SliceError;
pub use matrix::{
    matrix_from_json, matrix_to_json, random_complex_matrix, random_complex_vector, CMatrix,
    CVector,
};
pub use sampler::{sample_fiber, sample_fiber_with, SampleOptions};
pub use slice::{
    assemble, embed_lower, lambda_action, matrix_polynomial, nilpotent_data, MatrixPolynomial,
    SliceElement,
};
pub use spectral::{chi_pi, git_map, spectral_clusters, SpectralCluster, DEFAULT_CLUSTER_TOL};
pub use transversality::{slice_transversality_check, TransversalityReport};
pub use xnd::{
    c1_c2, reduced_coords, singular_alphas, thin_thick_eigenvalues, xnd_element, xnd_matrix,
    zeta_d, ReducedCoords,
};
