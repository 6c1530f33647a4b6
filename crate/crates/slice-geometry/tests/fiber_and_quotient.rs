//! End-to-end checks of the quotient map and the fiber sampler: sampled
//! elements land on the requested configuration, their eigenspaces project
//! injectively to the leading coordinates, and everything is equivariant
//! under the block rescaling action.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slice_geometry::{
    assemble, chi_pi, lambda_action, sample_fiber, BipartiteConfig, CMatrix,
    DEFAULT_CLUSTER_TOL,
};

fn random_regular_config(m: usize, n: usize, seed: u64) -> BipartiteConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut draw = |_: usize| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        };
        let thin: Vec<Complex64> = (0..m).map(&mut draw).collect();
        let thick: Vec<Complex64> = (0..m).map(&mut draw).collect();
        let tau = BipartiteConfig::new(n, thin, thick).unwrap();
        if tau.is_regular(0.05) {
            return tau;
        }
    }
}

/// Smallest singular value of the projection of `subspace` (orthonormal
/// columns) onto its first `n` coordinates.
fn projection_smallest_sv(subspace: &CMatrix, n: usize) -> f64 {
    let projected = subspace.rows(0, n).into_owned();
    let singular = projected.singular_values();
    singular.iter().cloned().fold(f64::INFINITY, f64::min)
}

/// Orthonormal basis of the nullspace of `mat`, taking the `dim` right
/// singular vectors with the smallest singular values.
fn kernel_basis(mat: &CMatrix, dim: usize) -> CMatrix {
    let svd = mat.clone().svd(false, true);
    let vt = svd.v_t.expect("svd with right vectors");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| {
        svd.singular_values[a]
            .partial_cmp(&svd.singular_values[b])
            .unwrap()
    });
    let cols = vt.ncols();
    CMatrix::from_fn(cols, dim, |i, j| vt[(order[j], i)].conj())
}

#[test]
fn sampled_elements_round_trip_and_project_injectively() {
    for (m, n) in [(1usize, 3usize), (2, 2), (2, 3)] {
        for seed in 0..10u64 {
            let tau = random_regular_config(m, n, 1000 * seed + 17);
            let y = sample_fiber(m, n, &tau, seed).unwrap_or_else(|e| {
                panic!("(m, n) = ({m}, {n}), seed {seed}: sampling failed: {e}")
            });
            let value = chi_pi(&y, DEFAULT_CLUSTER_TOL).unwrap();
            let dist = value.distance(&tau).unwrap();
            assert!(
                dist <= 1e-6,
                "(m, n) = ({m}, {n}), seed {seed}: distance {dist:.3e}"
            );

            // Each eigenspace of the assembled matrix must inject into the
            // first n coordinates (the eigenvector is determined by its
            // leading block).
            let phi = assemble(&y);
            let eye = CMatrix::identity(m * n, m * n);
            for (&eig, dim) in tau
                .thin()
                .iter()
                .map(|e| (e, 1usize))
                .chain(tau.thick().iter().map(|e| (e, n - 1)))
            {
                let basis = kernel_basis(&(&phi - &eye * eig), dim);
                let sv = projection_smallest_sv(&basis, n);
                assert!(
                    sv > 1e-8,
                    "(m, n) = ({m}, {n}), seed {seed}: eigenspace at {eig} \
                     projects with smallest singular value {sv:.3e}"
                );
            }
        }
    }
}

#[test]
fn different_seeds_reach_different_fiber_points() {
    let tau = random_regular_config(2, 2, 5);
    let elements: Vec<CMatrix> = (1..=4u64)
        .map(|seed| assemble(&sample_fiber(2, 2, &tau, seed).unwrap()))
        .collect();
    for i in 0..elements.len() {
        for j in (i + 1)..elements.len() {
            let gap = (&elements[i] - &elements[j]).norm();
            assert!(gap > 1e-3, "seeds {} and {} coincide (gap {gap:.3e})", i + 1, j + 1);
        }
    }
}

#[test]
fn quotient_is_equivariant_under_block_scaling() {
    for (m, n) in [(1usize, 3usize), (2, 2)] {
        let tau = random_regular_config(m, n, 42);
        let y = sample_fiber(m, n, &tau, 3).unwrap();
        for r in [0.5f64, 1.3, 2.0] {
            let scaled = lambda_action(Complex64::from(r), &y).unwrap();
            let expected = tau.scaled(Complex64::from(r * r));
            let value = chi_pi(&scaled, DEFAULT_CLUSTER_TOL).unwrap();
            let dist = value.distance(&expected).unwrap();
            assert!(
                dist <= 1e-6,
                "(m, n) = ({m}, {n}), r = {r}: distance {dist:.3e}"
            );
        }
    }
}
