//! Numerical sampling of fiber points: given a regular configuration τ,
//! produce a slice element whose adjoint-quotient value is τ.
//!
//! For m = 1 a closed form through the rank-one construction suffices.
//! For m ≥ 2 we solve, by a damped Gauss–Newton iteration with minimum-norm
//! steps, the polynomial system that pins the multiplicity structure:
//! at every thick value μ_j the matrix polynomial A(μ_j) must be rank one
//! (written as A(μ_j) = b_j c_jᵀ), at every thin value λ_i it must be
//! singular (a chart-normalized kernel vector u_i), and the top block must
//! be trace-free.  The whole system is holomorphic in the unknowns, so the
//! complex Jacobian is exact and no realification is needed.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::BipartiteConfig;
use crate::error::SliceError;
use crate::matrix::{random_complex_matrix, random_complex_vector, CMatrix, CVector};
use crate::spectral::{chi_pi, git_map, DEFAULT_CLUSTER_TOL};
use crate::slice::SliceElement;

/// Tuning knobs for the fiber sampler.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleOptions {
    /// Gauss–Newton iterations per random restart.
    pub max_iterations: usize,
    /// Random restarts before giving up.
    pub max_restarts: usize,
    /// Residual norm at which the iteration counts as converged.
    pub residual_tol: f64,
    /// Maximum allowed distance between the requested configuration and
    /// the quotient value of the returned element.
    pub verify_tol: f64,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions {
            max_iterations: 80,
            max_restarts: 12,
            residual_tol: 1e-11,
            verify_tol: 1e-6,
        }
    }
}

/// Samples a slice element over the regular configuration `tau` with
/// default options.
pub fn sample_fiber(
    m: usize,
    n: usize,
    tau: &BipartiteConfig,
    seed: u64,
) -> Result<SliceElement, SliceError> {
    sample_fiber_with(m, n, tau, seed, &SampleOptions::default())
}

/// Samples a slice element over the regular configuration `tau`.
pub fn sample_fiber_with(
    m: usize,
    n: usize,
    tau: &BipartiteConfig,
    seed: u64,
    opts: &SampleOptions,
) -> Result<SliceElement, SliceError> {
    if tau.n() != n || tau.m() != m {
        return Err(SliceError::InvalidInput(format!(
            "configuration has (m, n) = ({}, {}), requested ({m}, {n})",
            tau.m(),
            tau.n()
        )));
    }
    if m * n > 12 {
        return Err(SliceError::InvalidInput(format!(
            "matrix size mn = {} exceeds the supported bound 12",
            m * n
        )));
    }
    if !tau.is_regular(1e-8) {
        return Err(SliceError::InvalidInput(
            "fiber sampling needs a regular configuration (pairwise-distinct values)".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if m == 1 {
        return sample_rank_one(n, tau, &mut rng);
    }

    let mut best_residual = f64::INFINITY;
    for _ in 0..opts.max_restarts {
        match gauss_newton_attempt(m, n, tau, &mut rng, opts) {
            Ok(element) => {
                // The residual controls the equations, not the multiplicity
                // pattern itself (a collapsed rank-one factor would satisfy
                // them too); verify the round trip before accepting.
                if let Ok(value) = chi_pi(&element, DEFAULT_CLUSTER_TOL) {
                    if let Ok(dist) = value.distance(tau) {
                        if dist <= opts.verify_tol {
                            return Ok(element);
                        }
                    }
                }
            }
            Err(residual) => best_residual = best_residual.min(residual),
        }
    }
    Err(SliceError::NoConvergence {
        restarts: opts.max_restarts,
        best_residual,
    })
}

/// m = 1: every fiber point is `v·wᵀ − ((v,w)/n)·I` for vectors with
/// bilinear pairing `(v, w) = −n·μ` (μ the thick value), so sample the
/// vectors directly.
fn sample_rank_one(
    n: usize,
    tau: &BipartiteConfig,
    rng: &mut ChaCha8Rng,
) -> Result<SliceElement, SliceError> {
    let mu = tau.thick()[0];
    loop {
        let v = random_complex_vector(rng, n, 1.0);
        let mut w = random_complex_vector(rng, n, 1.0);
        let vv: Complex64 = v.iter().map(|x| x * x).sum();
        if vv.norm() < 0.3 {
            continue; // bilinear square too close to the isotropic cone
        }
        let vw: Complex64 = v.iter().zip(w.iter()).map(|(a, b)| a * b).sum();
        let shift = (-Complex64::from(n as f64) * mu - vw) / vv;
        w += &v * shift;
        let y = git_map(&v, &w);
        return SliceElement::new(n, vec![y]);
    }
}

/// Index bookkeeping for the Gauss–Newton system.
struct Layout {
    m: usize,
    n: usize,
    /// Complex unknowns: m n² matrix entries, then b, c, u vectors.
    unknowns: usize,
    /// Complex equations: m n² rank-one, m (n+1) kernel/chart, 1 trace.
    equations: usize,
    off_b: usize,
    off_c: usize,
    off_u: usize,
}

impl Layout {
    fn new(m: usize, n: usize) -> Layout {
        let off_b = m * n * n;
        let off_c = off_b + m * n;
        let off_u = off_c + m * n;
        Layout {
            m,
            n,
            unknowns: off_u + m * n,
            equations: m * n * n + m * (n + 1) + 1,
            off_b,
            off_c,
            off_u,
        }
    }
    fn y(&self, k: usize, p: usize, q: usize) -> usize {
        k * self.n * self.n + p * self.n + q
    }
    fn b(&self, j: usize, p: usize) -> usize {
        self.off_b + j * self.n + p
    }
    fn c(&self, j: usize, q: usize) -> usize {
        self.off_c + j * self.n + q
    }
    fn u(&self, i: usize, p: usize) -> usize {
        self.off_u + i * self.n + p
    }
    fn blocks(&self, x: &CVector) -> Vec<CMatrix> {
        (0..self.m)
            .map(|k| CMatrix::from_fn(self.n, self.n, |p, q| x[self.y(k, p, q)]))
            .collect()
    }
}

/// One random-start Gauss–Newton run; returns the element on convergence,
/// or the best residual reached on failure.
fn gauss_newton_attempt(
    m: usize,
    n: usize,
    tau: &BipartiteConfig,
    rng: &mut ChaCha8Rng,
    opts: &SampleOptions,
) -> Result<SliceElement, f64> {
    let layout = Layout::new(m, n);
    let thin = tau.thin().to_vec();
    let thick = tau.thick().to_vec();

    // Chart covectors for the thin kernel normalizations.
    let charts: Vec<CVector> = (0..m).map(|_| random_complex_vector(rng, n, 1.0)).collect();

    let mut x = initial_guess(&layout, &thin, &thick, &charts, rng);
    let mut residual = residual_vector(&layout, &thin, &thick, &charts, &x);
    let mut res_norm = residual.norm();

    for _ in 0..opts.max_iterations {
        if res_norm <= opts.residual_tol {
            return finish(&layout, &x).ok_or(res_norm);
        }
        let jac = jacobian(&layout, &thin, &thick, &charts, &x);
        let svd = jac.svd(true, true);
        let sigma_max = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
        let delta = match svd.solve(&(-&residual), 1e-12 * sigma_max.max(1e-300)) {
            Ok(d) => d,
            Err(_) => return Err(res_norm),
        };
        // Damped step: halve until the residual decreases.
        let mut accepted = false;
        let mut t = 1.0f64;
        for _ in 0..8 {
            let trial = &x + &delta * Complex64::from(t);
            let trial_res = residual_vector(&layout, &thin, &thick, &charts, &trial);
            let trial_norm = trial_res.norm();
            if trial_norm < res_norm {
                x = trial;
                residual = trial_res;
                res_norm = trial_norm;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if !accepted {
            return Err(res_norm); // stalled; caller restarts
        }
    }
    if res_norm <= opts.residual_tol {
        finish(&layout, &x).ok_or(res_norm)
    } else {
        Err(res_norm)
    }
}

fn initial_guess(
    layout: &Layout,
    thin: &[Complex64],
    thick: &[Complex64],
    charts: &[CVector],
    rng: &mut ChaCha8Rng,
) -> CVector {
    let (m, n) = (layout.m, layout.n);
    let mut x = CVector::zeros(layout.unknowns);
    let mut blocks = Vec::with_capacity(m);
    for k in 0..m {
        let mut block = random_complex_matrix(rng, n, n, 0.7);
        if k == 0 {
            let shift = block.trace() / Complex64::from(n as f64);
            for i in 0..n {
                block[(i, i)] -= shift;
            }
        }
        for p in 0..n {
            for q in 0..n {
                x[layout.y(k, p, q)] = block[(p, q)];
            }
        }
        blocks.push(block);
    }

    let eval = |mu: Complex64| -> CMatrix {
        let mut a = CMatrix::identity(n, n) * mu.powu(m as u32);
        for (k, block) in blocks.iter().enumerate() {
            a -= block * mu.powu((m - 1 - k) as u32);
        }
        a
    };

    // Rank-one factors: dominant singular triple of A(μ_j).
    for (j, &mu) in thick.iter().enumerate() {
        let svd = eval(mu).svd(true, true);
        let (mut top, mut sigma) = (0usize, -1.0f64);
        for (i, &s) in svd.singular_values.iter().enumerate() {
            if s > sigma {
                sigma = s;
                top = i;
            }
        }
        let u_mat = svd.u.as_ref().expect("svd with u");
        let vt = svd.v_t.as_ref().expect("svd with v_t");
        for p in 0..n {
            x[layout.b(j, p)] = u_mat[(p, top)] * Complex64::from(sigma);
            // Row `top` of Vᴴ already holds the conjugated right singular
            // vector, which is exactly the bilinear cofactor we need.
            x[layout.c(j, p)] = vt[(top, p)];
        }
    }

    // Kernel candidates: least singular right vector of A(λ_i), scaled to
    // the chart a_iᵀu_i = 1.
    for (i, &lambda) in thin.iter().enumerate() {
        let svd = eval(lambda).svd(false, true);
        let (mut bottom, mut sigma) = (0usize, f64::INFINITY);
        for (idx, &s) in svd.singular_values.iter().enumerate() {
            if s < sigma {
                sigma = s;
                bottom = idx;
            }
        }
        let vt = svd.v_t.as_ref().expect("svd with v_t");
        let mut u_vec = CVector::from_fn(n, |p, _| vt[(bottom, p)].conj());
        let chart_val: Complex64 = charts[i].iter().zip(u_vec.iter()).map(|(a, b)| a * b).sum();
        if chart_val.norm() > 1e-6 {
            u_vec /= chart_val;
        }
        for p in 0..n {
            x[layout.u(i, p)] = u_vec[p];
        }
    }
    x
}

/// A(μ) = μ^m I − Σ_k μ^{m−1−k} Y_{k+1}, read off the unknown vector.
fn eval_poly(layout: &Layout, x: &CVector, mu: Complex64) -> CMatrix {
    let (m, n) = (layout.m, layout.n);
    let mut a = CMatrix::identity(n, n) * mu.powu(m as u32);
    for k in 0..m {
        let weight = mu.powu((m - 1 - k) as u32);
        for p in 0..n {
            for q in 0..n {
                a[(p, q)] -= weight * x[layout.y(k, p, q)];
            }
        }
    }
    a
}

fn residual_vector(
    layout: &Layout,
    thin: &[Complex64],
    thick: &[Complex64],
    charts: &[CVector],
    x: &CVector,
) -> CVector {
    let n = layout.n;
    let mut f = CVector::zeros(layout.equations);
    let mut row = 0;
    for (j, &mu) in thick.iter().enumerate() {
        let a = eval_poly(layout, x, mu);
        for p in 0..n {
            for q in 0..n {
                f[row] = a[(p, q)] - x[layout.b(j, p)] * x[layout.c(j, q)];
                row += 1;
            }
        }
    }
    for (i, &lambda) in thin.iter().enumerate() {
        let a = eval_poly(layout, x, lambda);
        for p in 0..n {
            let mut s = Complex64::from(0.0);
            for q in 0..n {
                s += a[(p, q)] * x[layout.u(i, q)];
            }
            f[row] = s;
            row += 1;
        }
        let chart: Complex64 = (0..n).map(|q| charts[i][q] * x[layout.u(i, q)]).sum();
        f[row] = chart - Complex64::from(1.0);
        row += 1;
    }
    let trace: Complex64 = (0..n).map(|p| x[layout.y(0, p, p)]).sum();
    f[row] = trace;
    f
}

fn jacobian(
    layout: &Layout,
    thin: &[Complex64],
    thick: &[Complex64],
    charts: &[CVector],
    x: &CVector,
) -> CMatrix {
    let (m, n) = (layout.m, layout.n);
    let mut jac = CMatrix::zeros(layout.equations, layout.unknowns);
    let mut row = 0;
    for (j, &mu) in thick.iter().enumerate() {
        let weights: Vec<Complex64> = (0..m).map(|k| mu.powu((m - 1 - k) as u32)).collect();
        for p in 0..n {
            for q in 0..n {
                for k in 0..m {
                    jac[(row, layout.y(k, p, q))] = -weights[k];
                }
                jac[(row, layout.b(j, p))] = -x[layout.c(j, q)];
                jac[(row, layout.c(j, q))] = -x[layout.b(j, p)];
                row += 1;
            }
        }
    }
    for (i, &lambda) in thin.iter().enumerate() {
        let weights: Vec<Complex64> = (0..m).map(|k| lambda.powu((m - 1 - k) as u32)).collect();
        let a = eval_poly(layout, x, lambda);
        for p in 0..n {
            for q in 0..n {
                for k in 0..m {
                    jac[(row, layout.y(k, p, q))] = -weights[k] * x[layout.u(i, q)];
                }
                jac[(row, layout.u(i, q))] = a[(p, q)];
            }
            row += 1;
        }
        for q in 0..n {
            jac[(row, layout.u(i, q))] = charts[i][q];
        }
        row += 1;
    }
    for p in 0..n {
        jac[(row, layout.y(0, p, p))] = Complex64::from(1.0);
    }
    jac
}

/// Converts a converged unknown vector into a slice element, squeezing the
/// top-block trace to exactly zero.
fn finish(layout: &Layout, x: &CVector) -> Option<SliceElement> {
    let n = layout.n;
    let mut blocks = layout.blocks(x);
    let shift = blocks[0].trace() / Complex64::from(n as f64);
    for i in 0..n {
        blocks[0][(i, i)] -= shift;
    }
    SliceElement::new(n, blocks).ok()
}
