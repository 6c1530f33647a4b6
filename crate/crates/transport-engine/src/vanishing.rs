//! Vanishing-cycle probes: sample candidate cycle points in a fiber,
//! transport them toward the degenerate fiber at t = 0, and classify
//! whether they collapse onto the cone point.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use slice_geometry::{random_complex_matrix, CMatrix};

use crate::error::TransportError;
use crate::path::BasePath;
use crate::transport::{model_point, naive_transport, TransportStatus};
use crate::weights::KahlerWeights;

/// Thresholds of the contraction ladder.  Each rung transports to the
/// base point 10·thr·t₀ and asks whether the state norm has dropped below
/// √thr times its initial value; the three rungs must agree.
pub const VANISHING_LADDER: [f64; 3] = [1e-3, 1e-4, 1e-5];

/// Outcome of the contraction ladder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VanishingVerdict {
    /// The state collapsed at every rung.
    Vanishing,
    /// The state stayed away from the cone point at every rung.
    NonVanishing,
    /// The rungs disagreed or a transport run failed.
    Ambiguous,
}

/// One rung of the ladder.
#[derive(Debug, Clone)]
pub struct LadderRung {
    pub threshold: f64,
    /// Fraction of t₀ remaining at the measurement point (10·threshold).
    pub remaining: f64,
    pub initial_norm: f64,
    /// Final norm, if the transport completed.
    pub final_norm: Option<f64>,
    /// Whether the contraction criterion final ≤ √threshold·initial held.
    pub contracted: Option<bool>,
}

/// Full report of a vanishing probe.
#[derive(Debug, Clone)]
pub struct VanishingReport {
    pub verdict: VanishingVerdict,
    pub rungs: Vec<LadderRung>,
}

/// A Haar-like random unitary from the QR factorization of a Gaussian
/// matrix, with the phase convention fixed by the R diagonal.
pub fn random_unitary(rng: &mut ChaCha8Rng, n: usize) -> CMatrix {
    let g = random_complex_matrix(rng, n, n, 1.0);
    let qr = g.qr();
    let q = qr.q();
    let r = qr.r();
    let phases = CMatrix::from_fn(n, n, |i, j| {
        if i == j {
            let d = r[(i, i)];
            if d.norm() > 0.0 {
                d / d.norm()
            } else {
                Complex64::from(1.0)
            }
        } else {
            Complex64::from(0.0)
        }
    });
    q * phases
}

/// Samples candidate vanishing-cycle points in the fiber over `t`.
///
/// For the flat profile the cycle is the unitary sweep of the model point,
/// so unitary conjugates are exact samples.  For power profiles the cycle
/// is deformed; samples are produced by transporting unitary conjugates
/// outward from a nearly-degenerate fiber (base εt), with a step-halving
/// consistency check on ε.
pub fn vanishing_cp_samples(
    n: usize,
    t: Complex64,
    weights: &KahlerWeights,
    count: usize,
    seed: u64,
) -> Result<Vec<CMatrix>, TransportError> {
    if n < 2 {
        return Err(TransportError::InvalidInput("need n >= 2".into()));
    }
    if t.norm() < 1e-8 {
        return Err(TransportError::InvalidInput(
            "fiber parameter must stay away from the cone point".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(count);
    for _ in 0..count {
        let u = random_unitary(&mut rng, n);
        let conjugate = |m: &CMatrix| -> CMatrix { &u * m * u.adjoint() };
        if weights.standard_metric {
            samples.push(conjugate(&model_point(n, t)));
            continue;
        }
        let epsilon = 1e-3;
        let mut flowed = None;
        for eps in [epsilon, epsilon / 2.0] {
            let start = conjugate(&model_point(n, t * Complex64::from(eps)));
            let path = BasePath::line(t * Complex64::from(eps), t, 64)?;
            let outcome = naive_transport(&start, &path, weights, 400)?;
            if outcome.status != TransportStatus::Completed {
                return Err(TransportError::StepFailure {
                    s: 0.0,
                    reason: format!("outward cycle flow ended with {:?}", outcome.status),
                });
            }
            match flowed.take() {
                None => flowed = Some(outcome.final_state),
                Some(prev) => {
                    let gap = (&prev - &outcome.final_state).norm();
                    let scale = outcome.final_state.norm().max(1.0);
                    if gap > 1e-4 * scale {
                        return Err(TransportError::StepFailure {
                            s: 0.0,
                            reason: format!(
                                "outward cycle flow did not stabilize under halving \
                                 the inner radius (gap {gap:.3e})"
                            ),
                        });
                    }
                    flowed = Some(outcome.final_state);
                }
            }
        }
        samples.push(flowed.expect("two flow passes ran"));
    }
    Ok(samples)
}

/// Runs the contraction ladder on `start` (a point of the fiber over `t0`):
/// transport toward 0 along the ray, measure the norm contraction at each
/// rung, and combine the rung verdicts.
pub fn vanishing_probe(
    start: &CMatrix,
    t0: Complex64,
    weights: &KahlerWeights,
    steps: usize,
) -> Result<VanishingReport, TransportError> {
    let initial_norm = start.norm();
    if initial_norm < 1e-12 {
        return Err(TransportError::InvalidInput(
            "probe state must be nonzero".into(),
        ));
    }
    let mut rungs = Vec::with_capacity(VANISHING_LADDER.len());
    for &threshold in &VANISHING_LADDER {
        let remaining = 10.0 * threshold;
        let path = BasePath::line(t0, t0 * Complex64::from(remaining), 64)?;
        let rung = match naive_transport(start, &path, weights, steps) {
            Ok(outcome) if outcome.status == TransportStatus::Completed => {
                let final_norm = outcome.final_state.norm();
                LadderRung {
                    threshold,
                    remaining,
                    initial_norm,
                    final_norm: Some(final_norm),
                    contracted: Some(final_norm <= threshold.sqrt() * initial_norm),
                }
            }
            Ok(outcome) if outcome.status == TransportStatus::ConvergedToCritical => LadderRung {
                threshold,
                remaining,
                initial_norm,
                final_norm: Some(outcome.final_state.norm()),
                contracted: Some(true),
            },
            Ok(_) | Err(_) => LadderRung {
                threshold,
                remaining,
                initial_norm,
                final_norm: None,
                contracted: None,
            },
        };
        rungs.push(rung);
    }
    let verdict = if rungs.iter().all(|r| r.contracted == Some(true)) {
        VanishingVerdict::Vanishing
    } else if rungs.iter().all(|r| r.contracted == Some(false)) {
        VanishingVerdict::NonVanishing
    } else {
        VanishingVerdict::Ambiguous
    };
    Ok(VanishingReport { verdict, rungs })
}

/// An engineered fiber point with norm exactly ‖model‖ + `margin`: a
/// non-unitary conjugate of the model point, guaranteed off the flat
/// vanishing cycle by the norm gap (unitary conjugation preserves the
/// Frobenius norm).
pub fn non_orbit_control(n: usize, t: Complex64, margin: f64) -> Result<CMatrix, TransportError> {
    if n < 2 || t.norm() < 1e-12 || margin <= 0.0 {
        return Err(TransportError::InvalidInput(
            "need n >= 2, t away from 0, and a positive margin".into(),
        ));
    }
    let base = model_point(n, t);
    let base_norm = base.norm();
    let target = base_norm + margin;
    // Conjugating by I + s·E_{1,n} adds s·n·t to the (1, n) entry only.
    let s = ((target * target - base_norm * base_norm).sqrt()) / (n as f64 * t.norm());
    let mut y = base;
    y[(0, n - 1)] += Complex64::from(s) * t * Complex64::from(n as f64);
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transport::fiber_residual;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn random_unitaries_are_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [2usize, 4] {
            let u = random_unitary(&mut rng, n);
            let gap = (&u * u.adjoint() - CMatrix::identity(n, n)).norm();
            assert!(gap < 1e-12, "n = {n}: {gap:.3e}");
        }
    }

    #[test]
    fn flat_cycle_samples_sit_on_the_fiber_with_model_norm() {
        let t = c(0.5, 0.0);
        let samples =
            vanishing_cp_samples(3, t, &KahlerWeights::standard(), 5, 11).unwrap();
        let model_norm = model_point(3, t).norm();
        for y in &samples {
            assert!(fiber_residual(y, t) < 1e-10);
            assert!((y.norm() - model_norm).abs() < 1e-10);
        }
    }

    #[test]
    fn cycle_points_vanish_and_the_control_does_not() {
        let n = 2;
        let t = c(0.5, 0.0);
        let weights = KahlerWeights::standard();
        let cycle = &vanishing_cp_samples(n, t, &weights, 1, 21).unwrap()[0];
        let report = vanishing_probe(cycle, t, &weights, 300).unwrap();
        assert_eq!(report.verdict, VanishingVerdict::Vanishing, "{report:#?}");

        let control = non_orbit_control(n, t, 0.1).unwrap();
        assert!(fiber_residual(&control, t) < 1e-12);
        assert!((control.norm() - (model_point(n, t).norm() + 0.1)).abs() < 1e-12);
        let report = vanishing_probe(&control, t, &weights, 300).unwrap();
        assert_eq!(
            report.verdict,
            VanishingVerdict::NonVanishing,
            "{report:#?}"
        );
        for rung in &report.rungs {
            assert!(rung.final_norm.unwrap() >= 0.05);
        }
    }
}
