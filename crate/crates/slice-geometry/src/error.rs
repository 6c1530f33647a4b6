use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the slice-geometry layer.
#[derive(Debug, Clone, Error)]
pub enum SliceError {
    /// Input dimensions or values violate a constructor's contract.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The eigenvalue cluster pattern is not one thin (multiplicity 1) plus
    /// one thick (multiplicity n−1) cluster per block row, or the clustering
    /// is unstable under tolerance halving.
    #[error("eigenvalue multiplicities do not match the stratum: {0}")]
    MultiplicityMismatch(String),

    /// A cluster's geometric multiplicity falls short of its algebraic one.
    #[error(
        "non-semisimple eigenvalue {eigenvalue}: algebraic multiplicity {algebraic}, \
         geometric multiplicity {geometric}"
    )]
    SemisimplicityFail {
        eigenvalue: Complex64,
        algebraic: usize,
        geometric: usize,
    },

    /// The Newton fiber sampler exhausted its restart budget.
    #[error("fiber sampler did not converge after {restarts} restarts (best residual {best_residual:.3e})")]
    NoConvergence { restarts: usize, best_residual: f64 },

    /// Extending a configuration by a zero eigenvalue pair would collide
    /// with an existing zero value.
    #[error("configuration already contains a value at 0 (closest |value| = {closest:.3e})")]
    ZeroCollision { closest: f64 },

    /// A matrix claimed to lie in the local-model slice does not have the
    /// required fixed structure or rank profile.
    #[error("matrix is not in the expected slice form: {0}")]
    StructureViolation(String),
}
