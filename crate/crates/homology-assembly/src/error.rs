use thiserror::Error;

/// Errors from graded-group construction and assembly.
#[derive(Debug, Error)]
pub enum AssemblyError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(
        "TORSION_TORSION_UNSUPPORTED: both factors carry torsion in \
         contributing degrees {left_degree} and {right_degree}"
    )]
    TorsionTorsionUnsupported { left_degree: i64, right_degree: i64 },
    #[error("the two constructions disagree: {0}")]
    ConstructionMismatch(String),
}
