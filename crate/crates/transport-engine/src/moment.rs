//! Moment-map fibers of the rank-one local model: the set of vector pairs
//! (v, w) ∈ ℂⁿ×ℂⁿ with prescribed leading product v₁w₁ = c₁ and trailing
//! pairing Σ_{i≥2} vᵢwᵢ = c₂, cut down by the reality constraints
//! vᵢv̄ⱼ = w̄ᵢwⱼ (i, j ≥ 2) and |v₁|² = |w₁|², modulo the diagonal circle
//! action.  The fiber type depends only on the vanishing pattern of
//! (c₁, c₂): a point, a projective space, or a sphere.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::TransportError;

/// Topological type of a moment fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberKind {
    /// c₂ = 0: the fiber degenerates to a single point.
    Point,
    /// c₁ = 0 ≠ c₂: a complex projective space of real dimension 2n−4.
    Projective,
    /// c₁ ≠ 0 ≠ c₂: a sphere of real dimension 2n−3.
    Sphere,
}

impl FiberKind {
    /// Expected real dimension of the fiber for ambient rank n.
    pub fn expected_dim(&self, n: usize) -> usize {
        match self {
            FiberKind::Point => 0,
            FiberKind::Projective => 2 * n - 4,
            FiberKind::Sphere => 2 * n - 3,
        }
    }
}

/// Classifies the fiber type from the invariants, treating values below
/// `tol` as zero.
pub fn classify_fiber(c1: Complex64, c2: Complex64, tol: f64) -> FiberKind {
    if c2.norm() <= tol {
        FiberKind::Point
    } else if c1.norm() <= tol {
        FiberKind::Projective
    } else {
        FiberKind::Sphere
    }
}

/// A moment fiber with its measured tangent dimension at a random sample.
#[derive(Debug, Clone)]
pub struct MomentFiber {
    pub kind: FiberKind,
    pub expected_dim: usize,
    pub measured_dim: usize,
}

fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Closed-form sample on the fiber: the trailing blocks satisfy
/// w⃗ = λ·v̄⃗ with λ = c₂/|c₂| and ‖v⃗‖² = |c₂|; the leading pair splits
/// c₁ by a random phase.
pub fn moment_fiber_sample(
    n: usize,
    c1: Complex64,
    c2: Complex64,
    rng: &mut ChaCha8Rng,
) -> (Vec<Complex64>, Vec<Complex64>) {
    let mut v = vec![Complex64::from(0.0); n];
    let mut w = vec![Complex64::from(0.0); n];
    if c2.norm() > 0.0 {
        let lam = c2 / Complex64::from(c2.norm());
        let mut tail: Vec<Complex64> = (0..n - 1)
            .map(|_| Complex64::new(standard_normal(rng), standard_normal(rng)))
            .collect();
        let norm: f64 = tail.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let scale = c2.norm().sqrt() / norm;
        for z in &mut tail {
            *z *= Complex64::from(scale);
        }
        for i in 1..n {
            v[i] = tail[i - 1];
            w[i] = lam * tail[i - 1].conj();
        }
    }
    if c1.norm() > 0.0 {
        let theta = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
        let v1 = Complex64::from_polar(c1.norm().sqrt(), theta);
        v[0] = v1;
        w[0] = c1 / v1;
    }
    (v, w)
}

fn unpack(x: &[f64], n: usize) -> (Vec<Complex64>, Vec<Complex64>) {
    let v = (0..n)
        .map(|i| Complex64::new(x[2 * i], x[2 * i + 1]))
        .collect();
    let w = (0..n)
        .map(|i| Complex64::new(x[2 * n + 2 * i], x[2 * n + 2 * i + 1]))
        .collect();
    (v, w)
}

fn pack(v: &[Complex64], w: &[Complex64]) -> Vec<f64> {
    let n = v.len();
    let mut x = vec![0.0; 4 * n];
    for i in 0..n {
        x[2 * i] = v[i].re;
        x[2 * i + 1] = v[i].im;
        x[2 * n + 2 * i] = w[i].re;
        x[2 * n + 2 * i + 1] = w[i].im;
    }
    x
}

/// Real residual of the defining constraints at packed coordinates.
fn residual(n: usize, c1: Complex64, c2: Complex64, x: &[f64]) -> Vec<f64> {
    let (v, w) = unpack(x, n);
    let mut res = Vec::new();
    let e1 = v[0] * w[0] - c1;
    res.push(e1.re);
    res.push(e1.im);
    let e2: Complex64 = (1..n).map(|i| v[i] * w[i]).sum::<Complex64>() - c2;
    res.push(e2.re);
    res.push(e2.im);
    for i in 1..n {
        for j in i..n {
            let e = v[i] * v[j].conj() - w[i].conj() * w[j];
            if i == j {
                res.push(e.re);
            } else {
                res.push(e.re);
                res.push(e.im);
            }
        }
    }
    res.push(v[0].norm_sqr() - w[0].norm_sqr());
    res
}

/// Measures the tangent dimension of the fiber at a closed-form sample:
/// real rank of the constraint Jacobian on the coordinate blocks that are
/// active at the sample (identically-zero blocks are removed exactly, not
/// linearized), minus one for the free circle action.
pub fn moment_fiber_dimension(
    n: usize,
    c1: Complex64,
    c2: Complex64,
    seed: u64,
) -> Result<usize, TransportError> {
    if n < 2 {
        return Err(TransportError::InvalidInput("need n >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (v, w) = moment_fiber_sample(n, c1, c2, &mut rng);
    let x0 = pack(&v, &w);
    let r0 = residual(n, c1, c2, &x0);
    let worst = r0.iter().map(|r| r.abs()).fold(0.0, f64::max);
    if worst > 1e-10 {
        return Err(TransportError::InvalidInput(format!(
            "closed-form sample missed the fiber (residual {worst:.3e})"
        )));
    }

    let h = 1e-6;
    let rows = r0.len();
    let cols = 4 * n;
    let mut jac = nalgebra::DMatrix::<f64>::zeros(rows, cols);
    for k in 0..cols {
        let mut xp = x0.clone();
        xp[k] += h;
        let mut xm = x0.clone();
        xm[k] -= h;
        let rp = residual(n, c1, c2, &xp);
        let rm = residual(n, c1, c2, &xm);
        for row in 0..rows {
            jac[(row, k)] = (rp[row] - rm[row]) / (2.0 * h);
        }
    }

    // Coordinate blocks: the leading pair (v₁, w₁) and the trailing rest.
    // A block that vanishes identically on the fiber is pinned by quadratic
    // constraints the Jacobian cannot see; drop it exactly.
    let block1: Vec<usize> = vec![0, 1, 2 * n, 2 * n + 1];
    let block2: Vec<usize> = (0..4 * n).filter(|i| !block1.contains(i)).collect();
    let mut keep = Vec::new();
    if block1.iter().any(|&i| x0[i].abs() > 1e-12) {
        keep.extend_from_slice(&block1);
    }
    if block2.iter().any(|&i| x0[i].abs() > 1e-12) {
        keep.extend_from_slice(&block2);
    }
    if keep.is_empty() {
        return Ok(0);
    }
    let kept = nalgebra::DMatrix::<f64>::from_fn(rows, keep.len(), |r, c| jac[(r, keep[c])]);
    let singular = kept.svd(false, false).singular_values;
    let sigma_max = singular.iter().cloned().fold(0.0f64, f64::max);
    let rank = singular
        .iter()
        .filter(|&&s| s > 1e-4 * sigma_max.max(1.0))
        .count();
    Ok(keep.len() - rank - 1)
}

/// Classifies and measures a moment fiber.
pub fn moment_fiber(
    n: usize,
    c1: Complex64,
    c2: Complex64,
    seed: u64,
) -> Result<MomentFiber, TransportError> {
    let kind = classify_fiber(c1, c2, 1e-9);
    let measured_dim = moment_fiber_dimension(n, c1, c2, seed)?;
    Ok(MomentFiber {
        kind,
        expected_dim: kind.expected_dim(n),
        measured_dim,
    })
}
