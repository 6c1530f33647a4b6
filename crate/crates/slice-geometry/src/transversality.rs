//! Numerical check that the companion-form slice meets the conjugation
//! orbit of its base nilpotent transversally inside the trace-free matrices.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::SliceError;
use crate::matrix::{random_complex_vector, CMatrix, CVector};
use crate::slice::nilpotent_data;

/// Principal-angle data between the orbit tangent space of the base
/// nilpotent and the tangent space of the companion slice, both inside
/// the trace-free (mn)×(mn) matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct TransversalityReport {
    pub m: usize,
    pub n: usize,
    /// Dimension of the trace-free ambient space, (mn)² − 1.
    pub ambient_dim: usize,
    /// Numerical rank of ad(N): expected (mn)² − mn².
    pub orbit_dim: usize,
    /// Dimension of the slice tangent space: mn² − 1.
    pub slice_dim: usize,
    /// Smallest principal angle between the two subspaces, in radians.
    pub min_principal_angle: f64,
    /// Largest overlap found by random probing of slice directions
    /// (must not exceed cos of the minimal principal angle).
    pub probe_max_cos: f64,
    pub samples: usize,
}

impl TransversalityReport {
    /// True when the dimensions are complementary in the trace-free
    /// ambient space and the subspaces meet at a positive angle.
    pub fn is_transverse(&self) -> bool {
        self.orbit_dim + self.slice_dim == self.ambient_dim && self.min_principal_angle > 1e-6
    }
}

/// Computes principal angles between the tangent space of the conjugation
/// orbit through the base nilpotent and the tangent space of the companion
/// slice, plus a randomized overlap probe with `samples` slice directions.
pub fn slice_transversality_check(
    m: usize,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<TransversalityReport, SliceError> {
    if m == 0 || n < 2 {
        return Err(SliceError::InvalidInput(format!(
            "need m >= 1 and n >= 2, got m = {m}, n = {n}"
        )));
    }
    let d = m * n;
    if d > 12 {
        return Err(SliceError::InvalidInput(format!(
            "matrix size mn = {d} exceeds the supported bound 12"
        )));
    }
    let dd = d * d;

    let (n_plus, _, _) = nilpotent_data(m, n);

    // Matrix of Z ↦ [N, Z] on gl(mn), columns indexed by the basis E_pq.
    let mut ad = CMatrix::zeros(dd, dd);
    for p in 0..d {
        for q in 0..d {
            let col = p * d + q;
            // [N, E_pq] = N E_pq − E_pq N: column p of N lands in column q,
            // minus row q of N spread along row p.
            for i in 0..d {
                ad[(i * d + q, col)] += n_plus[(i, p)];
            }
            for j in 0..d {
                ad[(p * d + j, col)] -= n_plus[(q, j)];
            }
        }
    }

    let svd = ad.svd(true, false);
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
    let u = svd.u.as_ref().expect("left singular vectors requested");
    let orbit_cols: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&i| svd.singular_values[i] > 1e-9 * sigma_max.max(1.0))
        .collect();
    let orbit_dim = orbit_cols.len();

    let slice_basis = slice_tangent_basis(m, n);
    let slice_dim = slice_basis.len();

    // Cosines of principal angles are the singular values of Uᴴ V for
    // orthonormal bases U, V of the two subspaces.
    let (min_angle, probe_max) = if orbit_dim == 0 {
        (std::f64::consts::FRAC_PI_2, 0.0)
    } else {
        let mut overlap = CMatrix::zeros(orbit_dim, slice_dim);
        for (row, &uc) in orbit_cols.iter().enumerate() {
            for (colv, v) in slice_basis.iter().enumerate() {
                let mut dot = Complex64::from(0.0);
                for i in 0..dd {
                    dot += u[(i, uc)].conj() * v[i];
                }
                overlap[(row, colv)] = dot;
            }
        }
        let overlap_svd = overlap.clone().singular_values();
        let max_cos = overlap_svd
            .iter()
            .cloned()
            .fold(0.0f64, f64::max)
            .clamp(0.0, 1.0);

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut probe_max = 0.0f64;
        for _ in 0..samples {
            let coeffs = random_complex_vector(&mut rng, slice_dim, 1.0);
            let mut vec = CVector::zeros(dd);
            for (c, basis) in coeffs.iter().zip(slice_basis.iter()) {
                vec += basis * *c;
            }
            let norm = vec.norm();
            if norm < 1e-12 {
                continue;
            }
            // Norm of the orthogonal projection onto the orbit tangent space.
            let mut proj_sq = 0.0f64;
            for &uc in &orbit_cols {
                let mut dot = Complex64::from(0.0);
                for i in 0..dd {
                    dot += u[(i, uc)].conj() * vec[i];
                }
                proj_sq += dot.norm_sqr();
            }
            probe_max = probe_max.max(proj_sq.sqrt() / norm);
        }
        (max_cos.acos(), probe_max)
    };

    Ok(TransversalityReport {
        m,
        n,
        ambient_dim: dd - 1,
        orbit_dim,
        slice_dim,
        min_principal_angle: min_angle,
        probe_max_cos: probe_max,
        samples,
    })
}

/// Orthonormal basis of the slice tangent space, vectorized into ℂ^{(mn)²}
/// with the same (row·d + col) flattening used for the ad matrix: all
/// entries of the first block column, with the top block restricted to
/// trace-free matrices.
fn slice_tangent_basis(m: usize, n: usize) -> Vec<CVector> {
    let d = m * n;
    let dd = d * d;
    let flat = |row: usize, col: usize| row * d + col;
    let mut basis = Vec::with_capacity(m * n * n - 1);
    for k in 0..m {
        for i in 0..n {
            for j in 0..n {
                if k == 0 && i == j {
                    continue; // diagonal of the top block handled below
                }
                let mut v = CVector::zeros(dd);
                v[flat(k * n + i, j)] = Complex64::from(1.0);
                basis.push(v);
            }
        }
    }
    // Trace-free diagonal directions of the top block: (e₁+…+e_t − t·e_{t+1})
    // normalized, for t = 1..n−1.
    for t in 1..n {
        let mut v = CVector::zeros(dd);
        let scale = 1.0 / ((t * (t + 1)) as f64).sqrt();
        for i in 0..t {
            v[flat(i, i)] = Complex64::from(scale);
        }
        v[flat(t, t)] = Complex64::from(-(t as f64) * scale);
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_and_angles_are_complementary() {
        for (m, n) in [(1usize, 2usize), (1, 3), (2, 2), (2, 3), (3, 2)] {
            let report = slice_transversality_check(m, n, 25, 99).unwrap();
            let d = m * n;
            assert_eq!(report.ambient_dim, d * d - 1);
            assert_eq!(report.orbit_dim, d * d - m * n * n, "(m, n) = ({m}, {n})");
            assert_eq!(report.slice_dim, m * n * n - 1);
            assert!(report.is_transverse(), "(m, n) = ({m}, {n}): {report:?}");
            let cos_min = report.min_principal_angle.cos();
            assert!(
                report.probe_max_cos <= cos_min + 1e-9,
                "probe exceeded the principal-angle bound: {report:?}"
            );
        }
    }

    #[test]
    fn single_block_case_has_trivial_orbit() {
        let report = slice_transversality_check(1, 4, 10, 5).unwrap();
        assert_eq!(report.orbit_dim, 0);
        assert_eq!(report.slice_dim, 15);
        assert!((report.min_principal_angle - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
        assert!(report.is_transverse());
    }

    #[test]
    fn oversized_request_is_rejected() {
        assert!(matches!(
            slice_transversality_check(5, 3, 5, 1),
            Err(SliceError::InvalidInput(_))
        ));
    }
}
