//! Parallel transport of fiber points over a moving base parameter.
//!
//! The model is the single-block trace-free family: the fiber over t
//! consists of n×n matrices with characteristic polynomial
//! (x − t)^{n−1}·(x − (1−n)t).  A state is transported by integrating the
//! minimum-norm (with respect to the chosen entrywise metric) solution of
//! the linearized constraint system, with a Newton reprojection onto the
//! fiber after every Runge–Kutta step.

use num_complex::Complex64;
use slice_geometry::CMatrix;

use crate::charpoly::{char_coeffs, char_coeffs_with_gradient};
use crate::error::TransportError;
use crate::path::BasePath;
use crate::weights::KahlerWeights;

/// Residual bound a reprojected state must satisfy before the next step.
pub const RESIDUAL_ACCEPT: f64 = 1e-8;
/// Norm below which the state counts as having reached the cone point.
const CRITICAL_NORM: f64 = 1e-9;
/// Norm above which the integration is declared divergent.
const DIVERGENCE_NORM: f64 = 1e6;

/// Why a transport run ended.
#[derive(Debug, Clone, PartialEq)]
pub enum TransportStatus {
    /// Reached the end of the path with all residual checks passing.
    Completed,
    /// The state norm fell below the critical threshold before the end of
    /// the path (the fiber point collapsed onto the cone point).
    ConvergedToCritical,
    /// The state norm blew up.
    Diverged,
    /// A step or reprojection failed; the message names the reason.
    StepFailure(String),
}

/// One recorded sample of a transport run.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceSample {
    /// Path parameter in [0, 1].
    pub s: f64,
    /// Base point t(s).
    pub t: Complex64,
    /// Frobenius norm of the state.
    pub state_norm: f64,
    /// Sup-norm of the fiber-constraint residual after reprojection.
    pub residual: f64,
}

/// Result of a transport run: final state, how it ended, and the trace.
#[derive(Debug, Clone)]
pub struct TransportOutcome {
    pub status: TransportStatus,
    pub final_state: CMatrix,
    pub trace: Vec<TraceSample>,
}

impl TransportOutcome {
    pub fn completed(&self) -> bool {
        self.status == TransportStatus::Completed
    }
}

/// Elementary symmetric values E_j of the model spectrum (1, …, 1, 1−n),
/// so that the fiber over t has target coefficients e_j = t^j · E_j.
fn model_symmetric_values(n: usize) -> Vec<Complex64> {
    let mut poly = vec![Complex64::from(1.0)];
    let mut roots = vec![Complex64::from(1.0); n - 1];
    roots.push(Complex64::from(1.0 - n as f64));
    for r in roots {
        let mut next = vec![Complex64::from(0.0); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] += c;
            next[k + 1] += c * r;
        }
        poly = next;
    }
    // poly[j] = e_j of the root multiset.
    poly[1..].to_vec()
}

/// Target constraint values at base point t.
fn target_coeffs(e_model: &[Complex64], t: Complex64) -> Vec<Complex64> {
    e_model
        .iter()
        .enumerate()
        .map(|(j, ej)| ej * t.powu(j as u32 + 1))
        .collect()
}

/// d/dt of the target constraint values.
fn target_coeffs_dt(e_model: &[Complex64], t: Complex64) -> Vec<Complex64> {
    e_model
        .iter()
        .enumerate()
        .map(|(j, ej)| ej * Complex64::from(j as f64 + 1.0) * t.powu(j as u32))
        .collect()
}

/// Constraint residual c(Y, t) = e(Y) − e(fiber over t), sup-norm.
pub fn fiber_residual(y: &CMatrix, t: Complex64) -> f64 {
    let n = y.nrows();
    let e_model = model_symmetric_values(n);
    let target = target_coeffs(&e_model, t);
    char_coeffs(y)
        .iter()
        .zip(target.iter())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
}

struct ConstraintSystem {
    /// Constraint values minus targets.
    residual: Vec<Complex64>,
    /// Holomorphic gradients of the constraints.
    grads: Vec<CMatrix>,
}

fn constraint_system(y: &CMatrix, target: &[Complex64]) -> ConstraintSystem {
    let (e, grads) = char_coeffs_with_gradient(y);
    let residual = e.iter().zip(target.iter()).map(|(a, b)| a - b).collect();
    ConstraintSystem { residual, grads }
}

/// Minimum-norm solution of J δ = rhs in the metric G = diag(h(ρ_e)):
/// δ = G⁻¹ Jᴴ (J G⁻¹ Jᴴ)⁺ rhs.  The Gram pseudo-inverse uses a relative
/// singular-value cutoff, which handles the rank drop along multiplicity
/// strata (where the constraint gradients span fewer than n directions).
fn weighted_min_norm_step(
    grads: &[CMatrix],
    metric: &CMatrix,
    rhs: &[Complex64],
) -> Result<CMatrix, TransportError> {
    let k = grads.len();
    let (rows, cols) = grads[0].shape();
    // gram[(a, b)] = Σ_e grads_a(e) · conj(grads_b(e)) / h(e)
    let mut gram = CMatrix::zeros(k, k);
    for a in 0..k {
        for b in 0..k {
            let mut acc = Complex64::from(0.0);
            for p in 0..rows {
                for q in 0..cols {
                    acc += grads[a][(p, q)] * grads[b][(p, q)].conj() / metric[(p, q)];
                }
            }
            gram[(a, b)] = acc;
        }
    }
    let rhs_vec = nalgebra::DVector::from_row_slice(rhs);
    let svd = gram.svd(true, true);
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
    let x = svd
        .solve(&rhs_vec, 1e-10 * sigma_max.max(1e-300))
        .map_err(|e| TransportError::RankDeficient(e.to_string()))?;
    // δ = G⁻¹ Jᴴ x, i.e. entrywise conj(grad) weighted by x / h.
    let mut delta = CMatrix::zeros(rows, cols);
    for a in 0..k {
        for p in 0..rows {
            for q in 0..cols {
                delta[(p, q)] += grads[a][(p, q)].conj() * x[a] / metric[(p, q)];
            }
        }
    }
    Ok(delta)
}

fn entry_metric(y: &CMatrix, weights: &KahlerWeights) -> CMatrix {
    CMatrix::from_fn(y.nrows(), y.ncols(), |p, q| {
        Complex64::from(weights.h(y[(p, q)].norm_sqr()))
    })
}

/// Horizontal lift of the base velocity `tdot` at state `y` over base
/// point `t`: the minimum-norm state velocity (in the weighted entrywise
/// metric) that keeps the fiber constraints satisfied to first order.
pub fn horizontal_lift(
    y: &CMatrix,
    t: Complex64,
    tdot: Complex64,
    weights: &KahlerWeights,
) -> Result<CMatrix, TransportError> {
    let n = y.nrows();
    let e_model = model_symmetric_values(n);
    let target = target_coeffs(&e_model, t);
    let system = constraint_system(y, &target);
    let ddt = target_coeffs_dt(&e_model, t);
    // Keeping c(Y(s), t(s)) = 0 to first order means J Ẏ = d/dt(target)·ṫ.
    let rhs: Vec<Complex64> = ddt.iter().map(|d| d * tdot).collect();
    let metric = entry_metric(y, weights);
    weighted_min_norm_step(&system.grads, &metric, &rhs)
}

/// Projection of an arbitrary state velocity onto the vertical (fiber-
/// tangent) subspace, g-orthogonally: v − G⁻¹Jᴴ(JG⁻¹Jᴴ)⁺(Jv).
pub fn vertical_projection(
    y: &CMatrix,
    t: Complex64,
    v: &CMatrix,
    weights: &KahlerWeights,
) -> Result<CMatrix, TransportError> {
    let n = y.nrows();
    let e_model = model_symmetric_values(n);
    let target = target_coeffs(&e_model, t);
    let system = constraint_system(y, &target);
    let jv: Vec<Complex64> = system
        .grads
        .iter()
        .map(|g| {
            let mut acc = Complex64::from(0.0);
            for p in 0..n {
                for q in 0..n {
                    acc += g[(p, q)] * v[(p, q)];
                }
            }
            acc
        })
        .collect();
    let metric = entry_metric(y, weights);
    let correction = weighted_min_norm_step(&system.grads, &metric, &jv)?;
    Ok(v - correction)
}

/// Newton reprojection onto the fiber over `t`, using weighted
/// minimum-norm corrections.  Returns the reprojected state.
pub fn project_to_fiber(
    y: &CMatrix,
    t: Complex64,
    weights: &KahlerWeights,
) -> Result<CMatrix, TransportError> {
    let n = y.nrows();
    let e_model = model_symmetric_values(n);
    let target = target_coeffs(&e_model, t);
    let mut current = y.clone();
    let scale = target.iter().map(|c| c.norm()).fold(1.0, f64::max);
    for _ in 0..30 {
        let system = constraint_system(&current, &target);
        let err = system.residual.iter().map(|r| r.norm()).fold(0.0, f64::max);
        if err <= 1e-13 * scale.max(1.0) {
            return Ok(current);
        }
        let rhs: Vec<Complex64> = system.residual.iter().map(|r| -r).collect();
        let metric = entry_metric(&current, weights);
        let delta = weighted_min_norm_step(&system.grads, &metric, &rhs)?;
        // Damped update: accept the first halving that reduces the residual.
        let mut accepted = false;
        let mut step = 1.0f64;
        for _ in 0..6 {
            let trial = &current + &delta * Complex64::from(step);
            let trial_err = char_coeffs(&trial)
                .iter()
                .zip(target.iter())
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            if trial_err < err {
                current = trial;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    let final_err = char_coeffs(&current)
        .iter()
        .zip(target.iter())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    if final_err <= RESIDUAL_ACCEPT * scale.max(1.0) {
        Ok(current)
    } else {
        Err(TransportError::StepFailure {
            s: f64::NAN,
            reason: format!("fiber reprojection stalled at residual {final_err:.3e}"),
        })
    }
}

/// Velocity field of the transport ODE: the horizontal lift, minus
/// `sigma` times the vertical part of the metric gradient of the
/// potential when `sigma` is nonzero.
fn transport_velocity(
    y: &CMatrix,
    t: Complex64,
    tdot: Complex64,
    weights: &KahlerWeights,
    sigma: f64,
) -> Result<CMatrix, TransportError> {
    let mut v = horizontal_lift(y, t, tdot, weights)?;
    if sigma != 0.0 {
        let grad = weights.metric_gradient(y);
        let vert = vertical_projection(y, t, &grad, weights)?;
        v -= vert * Complex64::from(sigma);
    }
    Ok(v)
}

fn record(trace: &mut Vec<TraceSample>, s: f64, t: Complex64, y: &CMatrix) {
    trace.push(TraceSample {
        s,
        t,
        state_norm: y.norm(),
        residual: fiber_residual(y, t),
    });
}

/// Integrates the transport ODE from `start` along `path` with `steps`
/// fourth-order Runge–Kutta steps, reprojecting onto the fiber after each
/// step.  With `sigma = 0` this is plain minimal parallel transport.
fn integrate(
    start: &CMatrix,
    path: &BasePath,
    weights: &KahlerWeights,
    sigma: f64,
    steps: usize,
) -> TransportOutcome {
    let mut trace = Vec::with_capacity(steps + 1);
    let mut y = start.clone();
    let mut s = 0.0f64;
    record(&mut trace, s, path.eval(0.0), &y);
    let h = 1.0 / steps as f64;
    for step in 0..steps {
        let field = |ss: f64, state: &CMatrix| -> Result<CMatrix, TransportError> {
            transport_velocity(state, path.eval(ss), path.velocity(ss), weights, sigma)
        };
        let result = (|| -> Result<CMatrix, TransportError> {
            let k1 = field(s, &y)?;
            let k2 = field(s + h / 2.0, &(&y + &k1 * Complex64::from(h / 2.0)))?;
            let k3 = field(s + h / 2.0, &(&y + &k2 * Complex64::from(h / 2.0)))?;
            let k4 = field(s + h, &(&y + &k3 * Complex64::from(h)))?;
            let increment =
                (k1 + k2 * Complex64::from(2.0) + k3 * Complex64::from(2.0) + k4)
                    * Complex64::from(h / 6.0);
            project_to_fiber(&(&y + increment), path.eval(s + h), weights)
        })();
        match result {
            Ok(next) => y = next,
            Err(e) => {
                let reason = match e {
                    TransportError::StepFailure { reason, .. } => reason,
                    other => other.to_string(),
                };
                record(&mut trace, s, path.eval(s), &y);
                return TransportOutcome {
                    status: TransportStatus::StepFailure(format!(
                        "step {step} at s = {s:.4}: {reason}"
                    )),
                    final_state: y,
                    trace,
                };
            }
        }
        s += h;
        record(&mut trace, s, path.eval(s), &y);
        let norm = y.norm();
        if !norm.is_finite() || norm > DIVERGENCE_NORM {
            return TransportOutcome {
                status: TransportStatus::Diverged,
                final_state: y,
                trace,
            };
        }
        if norm < CRITICAL_NORM {
            return TransportOutcome {
                status: TransportStatus::ConvergedToCritical,
                final_state: y,
                trace,
            };
        }
    }
    TransportOutcome {
        status: TransportStatus::Completed,
        final_state: y,
        trace,
    }
}

/// Plain minimal parallel transport of `start` along `path`.
pub fn naive_transport(
    start: &CMatrix,
    path: &BasePath,
    weights: &KahlerWeights,
    steps: usize,
) -> Result<TransportOutcome, TransportError> {
    validate_start(start, path, steps)?;
    Ok(integrate(start, path, weights, 0.0, steps))
}

/// Transport with Liouville rescaling: during integration the vertical
/// part of the potential gradient is subtracted with strength `sigma`,
/// and after the path ends the state flows along the vertical Liouville
/// field for time `sigma` to realign the fiber scale.  `sigma = 0`
/// reduces exactly to `naive_transport`.
pub fn rescaled_transport(
    start: &CMatrix,
    path: &BasePath,
    weights: &KahlerWeights,
    sigma: f64,
    steps: usize,
) -> Result<TransportOutcome, TransportError> {
    validate_start(start, path, steps)?;
    if sigma < 0.0 {
        return Err(TransportError::InvalidInput(
            "rescaling strength must be nonnegative".into(),
        ));
    }
    let mut outcome = integrate(start, path, weights, sigma, steps);
    if outcome.status != TransportStatus::Completed || sigma == 0.0 {
        return Ok(outcome);
    }
    // Final fiberwise Liouville flow for time sigma (fixed base point).
    let t_end = path.end();
    let flow_steps = 50usize.max((sigma * 50.0).ceil() as usize);
    let h = sigma / flow_steps as f64;
    let mut y = outcome.final_state.clone();
    for _ in 0..flow_steps {
        let field = |state: &CMatrix| -> Result<CMatrix, TransportError> {
            let z = weights.liouville_field(state);
            vertical_projection(state, t_end, &z, weights)
        };
        let step_result = (|| -> Result<CMatrix, TransportError> {
            let k1 = field(&y)?;
            let k2 = field(&(&y + &k1 * Complex64::from(h / 2.0)))?;
            let k3 = field(&(&y + &k2 * Complex64::from(h / 2.0)))?;
            let k4 = field(&(&y + &k3 * Complex64::from(h)))?;
            let increment = (k1 + k2 * Complex64::from(2.0) + k3 * Complex64::from(2.0) + k4)
                * Complex64::from(h / 6.0);
            project_to_fiber(&(&y + increment), t_end, weights)
        })();
        match step_result {
            Ok(next) => y = next,
            Err(e) => {
                outcome.status = TransportStatus::StepFailure(format!(
                    "final Liouville flow: {e}"
                ));
                return Ok(outcome);
            }
        }
    }
    record(&mut outcome.trace, 1.0, t_end, &y);
    outcome.final_state = y;
    Ok(outcome)
}

fn validate_start(
    start: &CMatrix,
    path: &BasePath,
    steps: usize,
) -> Result<(), TransportError> {
    let (rows, cols) = start.shape();
    if rows != cols || rows < 2 {
        return Err(TransportError::InvalidInput(format!(
            "state must be square of size >= 2, got {rows}x{cols}"
        )));
    }
    if steps == 0 {
        return Err(TransportError::InvalidInput(
            "need at least one integration step".into(),
        ));
    }
    let res = fiber_residual(start, path.start());
    if res > RESIDUAL_ACCEPT {
        return Err(TransportError::InvalidInput(format!(
            "start state is not on the fiber over the path start (residual {res:.3e})"
        )));
    }
    Ok(())
}

/// The diagonal model point of the fiber over t: diag(t, …, t, (1−n)t).
pub fn model_point(n: usize, t: Complex64) -> CMatrix {
    let mut d = CMatrix::zeros(n, n);
    for i in 0..n - 1 {
        d[(i, i)] = t;
    }
    d[(n - 1, n - 1)] = t * Complex64::from(1.0 - n as f64);
    d
}
