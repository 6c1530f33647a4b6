//! Numerical parallel transport over the single-block trace-free family,
//! with weighted Kähler profiles, Liouville rescaling, vanishing-cycle
//! probes, moment-map fiber classification, and the path constructions of
//! the rank-one local model.

mod charpoly;
mod error;
mod gradient;
mod moment;
mod path;
mod paths;
mod transport;
mod vanishing;
mod weights;

pub use charpoly::{char_coeffs, char_coeffs_with_gradient};
pub use error::TransportError;
pub use gradient::{gradient_bound_scan, GradientScan};
pub use moment::{
    classify_fiber, moment_fiber, moment_fiber_dimension, moment_fiber_sample, FiberKind,
    MomentFiber,
};
pub use path::BasePath;
pub use paths::{
    intersection_points, lambda_path_samples, monodromy_swap, trefoil_intersection_report,
    trefoil_paths, LambdaPathReport, MonodromyReport, PathIntersection, PathSample,
    TrefoilPaths,
};
pub use transport::{
    fiber_residual, horizontal_lift, model_point, naive_transport, project_to_fiber,
    rescaled_transport, vertical_projection, TraceSample, TransportOutcome, TransportStatus,
    RESIDUAL_ACCEPT,
};
pub use vanishing::{
    non_orbit_control, random_unitary, vanishing_cp_samples, vanishing_probe, LadderRung,
    VanishingReport, VanishingVerdict, VANISHING_LADDER,
};
pub use weights::KahlerWeights;
