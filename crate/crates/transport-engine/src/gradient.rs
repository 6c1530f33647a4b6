//! Empirical lower bound for the gradient inequality of the quadratic
//! invariant on the rank-one variety: over random rank-one data a = v·wᵀ,
//! the squared norm of the restricted gradient of
//! q(a) = −a₁₁ − (n+1)d·s − s²  (s the trailing diagonal sum)
//! is compared against the distance of q from its critical value ζ_d.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slice_geometry::{zeta_d, CMatrix, CVector};

use crate::error::TransportError;

/// Result of a gradient-bound scan.
#[derive(Debug, Clone)]
pub struct GradientScan {
    /// Empirical infimum of ‖∇q|_V‖² / |q − ζ_d| over the scan.
    pub nu_emp: f64,
    /// Samples that entered the minimum.
    pub samples_used: usize,
    /// Samples skipped by the guard |q − ζ_d| ≥ 1e−3.
    pub samples_skipped: usize,
}

fn random_ball_vector(rng: &mut ChaCha8Rng, n: usize, radius: f64) -> CVector {
    loop {
        let v = CVector::from_fn(n, |_, _| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        let norm = v.norm();
        if norm > 1e-6 {
            let r = radius * rng.gen_range(0.0f64..1.0).powf(1.0 / (2.0 * n as f64));
            return v * Complex64::from(r / norm);
        }
    }
}

/// Scans random rank-one data in the ball of the given radius and returns
/// the empirical gradient-bound constant.  With a fixed seed, a longer
/// scan extends a shorter one (the first draws coincide), so the minimum
/// is monotone under increasing `samples`.
pub fn gradient_bound_scan(
    n: usize,
    d: f64,
    region: f64,
    samples: usize,
    seed: u64,
) -> Result<GradientScan, TransportError> {
    if n < 2 {
        return Err(TransportError::InvalidInput("need n >= 2".into()));
    }
    if region <= 0.0 || samples == 0 {
        return Err(TransportError::InvalidInput(
            "need a positive region and at least one sample".into(),
        ));
    }
    let u = (n as f64 + 1.0) * d;
    let critical = Complex64::from(zeta_d(n, d));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut nu = f64::INFINITY;
    let mut used = 0usize;
    let mut skipped = 0usize;
    for _ in 0..samples {
        let v = random_ball_vector(&mut rng, n, region);
        let w = random_ball_vector(&mut rng, n, region);
        let s: Complex64 = (1..n).map(|k| v[k] * w[k]).sum();
        let q = -v[0] * w[0] - Complex64::from(u) * s - s * s;
        let gap = (q - critical).norm();
        if gap < 1e-3 {
            skipped += 1;
            continue;
        }
        // Holomorphic ambient partials of q in the matrix entries of a.
        let mut partials = CMatrix::zeros(n, n);
        partials[(0, 0)] = Complex64::from(-1.0);
        for k in 1..n {
            partials[(k, k)] = -Complex64::from(u) - 2.0 * s;
        }
        // Riesz gradient = conjugated partials, restricted to the tangent
        // space of the rank-one variety: span{e_i wᵀ} ∪ {v e_jᵀ}.
        let tangent = tangent_basis(&v, &w);
        let svd = tangent.svd(true, false);
        let sigma_max = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
        let basis = svd.u.as_ref().expect("svd with u");
        let grad = CVector::from_fn(n * n, |idx, _| {
            partials[(idx / n, idx % n)].conj()
        });
        let mut norm_sq = 0.0f64;
        for col in 0..svd.singular_values.len() {
            if svd.singular_values[col] <= 1e-10 * sigma_max.max(1e-300) {
                continue;
            }
            let mut dot = Complex64::from(0.0);
            for row in 0..n * n {
                dot += basis[(row, col)].conj() * grad[row];
            }
            norm_sq += dot.norm_sqr();
        }
        nu = nu.min(norm_sq / gap);
        used += 1;
    }
    if used == 0 {
        return Err(TransportError::InvalidInput(
            "every sample was skipped by the critical-value guard".into(),
        ));
    }
    Ok(GradientScan {
        nu_emp: nu,
        samples_used: used,
        samples_skipped: skipped,
    })
}

/// Columns are the vectorized tangent directions of the rank-one variety
/// at (v, w).
fn tangent_basis(v: &CVector, w: &CVector) -> CMatrix {
    let n = v.len();
    let mut t = CMatrix::zeros(n * n, 2 * n);
    for i in 0..n {
        // e_i wᵀ: row i holds w.
        for j in 0..n {
            t[(i * n + j, i)] = w[j];
        }
        // v e_iᵀ: column i holds v.
        for p in 0..n {
            t[(p * n + i, n + i)] = v[p];
        }
    }
    t
}
