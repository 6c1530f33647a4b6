//! The rank-one family of trace-free (n+1)×(n+1) matrices with a marked
//! eigenvalue `d` of multiplicity n−1, parametrized by a chart coordinate
//! `alpha` and the quadratic invariant `z`.  The remaining two eigenvalues
//! are `d + ζ` for the roots ζ of `ζ² + (n+1)d·ζ + z`.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::SliceError;
use crate::matrix::{all_finite, random_complex_vector, CMatrix, CVector};

/// Chart data recovered from a matrix of the family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedCoords {
    /// Chart coordinate (the repeated diagonal entry of the corner 2×2 block).
    pub alpha: Complex64,
    /// Quadratic invariant of the two non-marked eigenvalues.
    pub z: Complex64,
    /// Product of the leading coordinates, `v₁w₁`.
    pub c1: Complex64,
    /// Bilinear pairing of the trailing coordinates, `Σ_{i≥2} vᵢwᵢ`.
    pub c2: Complex64,
}

/// The critical value of `z`: the two non-marked eigenvalues collide when
/// `z = ((n+1)d/2)²`.
pub fn zeta_d(n: usize, d: f64) -> f64 {
    let u = (n as f64 + 1.0) * d;
    u * u / 4.0
}

/// The linear coordinates `(c₁, c₂)` of the rank-one datum as functions of
/// the chart coordinate: `c₁ = −z − 2(n+1)d·α − 4α²`, `c₂ = −(n+1)d − 2α`.
pub fn c1_c2(n: usize, alpha: Complex64, d: f64, z: Complex64) -> (Complex64, Complex64) {
    let u = Complex64::from((n as f64 + 1.0) * d);
    let c1 = -z - 2.0 * u * alpha - 4.0 * alpha * alpha;
    let c2 = -u - 2.0 * alpha;
    (c1, c2)
}

/// The two eigenvalues split off the marked one: `([d+ζ₁, d+ζ₂], d)` where
/// ζ₁, ζ₂ solve `ζ² + (n+1)d·ζ + z = 0`; the marked value `d` keeps
/// multiplicity n−1.
pub fn thin_thick_eigenvalues(n: usize, d: f64, z: Complex64) -> ([Complex64; 2], Complex64) {
    let u = Complex64::from((n as f64 + 1.0) * d);
    let disc = (u * u - 4.0 * z).sqrt();
    let d = Complex64::from(d);
    ([d + (-u - disc) / 2.0, d + (-u + disc) / 2.0], d)
}

/// The three chart coordinates where the fiber degenerates:
/// `α₁ = −(n+1)d/2` (where c₂ = 0) and the two roots of c₁ = 0, ordered so
/// that `α₂` is the root closer to `α₁`.  For real `0 < z ≪ d` this gives
/// `α₁ < α₂ < α₃ < 0` on the real line.
pub fn singular_alphas(n: usize, d: f64, z: Complex64) -> [Complex64; 3] {
    let u = Complex64::from((n as f64 + 1.0) * d);
    let alpha1 = -u / 2.0;
    let disc = (u * u - 4.0 * z).sqrt();
    let (ra, rb) = ((-u - disc) / 4.0, (-u + disc) / 4.0);
    if (ra - alpha1).norm() <= (rb - alpha1).norm() {
        [alpha1, ra, rb]
    } else {
        [alpha1, rb, ra]
    }
}

/// Assembles the family matrix `d·I + A` from the rank-one datum
/// `a = v·wᵀ` and the chart coordinate: the corner 2×2 block of `A` is
/// `[[α, 1], [a₁₁ + α², α]]` and the rank-one block fills the rest.
pub fn xnd_matrix(
    n: usize,
    d: f64,
    v: &CVector,
    w: &CVector,
    alpha: Complex64,
) -> Result<CMatrix, SliceError> {
    if n < 2 {
        return Err(SliceError::InvalidInput(format!(
            "family needs n >= 2, got n = {n}"
        )));
    }
    if v.len() != n || w.len() != n {
        return Err(SliceError::InvalidInput(format!(
            "vectors must have length n = {n}, got {} and {}",
            v.len(),
            w.len()
        )));
    }
    if !v.iter().all(|x| x.is_finite()) || !w.iter().all(|x| x.is_finite()) || !alpha.is_finite() {
        return Err(SliceError::InvalidInput("non-finite chart data".into()));
    }
    let a = |i: usize, j: usize| v[i] * w[j];
    let mut m = CMatrix::zeros(n + 1, n + 1);
    m[(0, 0)] = alpha;
    m[(0, 1)] = Complex64::from(1.0);
    m[(1, 0)] = a(0, 0) + alpha * alpha;
    m[(1, 1)] = alpha;
    for j in 1..n {
        m[(1, j + 1)] = a(0, j);
    }
    for i in 1..n {
        m[(i + 1, 0)] = a(i, 0);
        for j in 1..n {
            m[(i + 1, j + 1)] = a(i, j);
        }
    }
    for i in 0..=n {
        m[(i, i)] += Complex64::from(d);
    }
    Ok(m)
}

/// A random matrix of the family with the prescribed invariants: the
/// rank-one datum is sampled so that `(c₁, c₂)` match `c1_c2(n, α, d, z)`,
/// which forces the spectrum `{d ×(n−1), d+ζ₁, d+ζ₂}`.
pub fn xnd_element(
    n: usize,
    d: f64,
    z: Complex64,
    alpha: Complex64,
    seed: u64,
) -> Result<CMatrix, SliceError> {
    if n < 2 {
        return Err(SliceError::InvalidInput(format!(
            "family needs n >= 2, got n = {n}"
        )));
    }
    let (c1, c2) = c1_c2(n, alpha, d, z);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v = random_complex_vector(&mut rng, n, 1.0);
    let mut w = random_complex_vector(&mut rng, n, 1.0);
    while v[0].norm() < 0.1 || v[1].norm() < 0.1 {
        v = random_complex_vector(&mut rng, n, 1.0);
    }
    // Fix the leading product v₁w₁ = c₁ ...
    if c1.norm() == 0.0 {
        w[0] = Complex64::from(0.0);
    } else {
        w[0] = c1 / v[0];
    }
    // ... and shift one trailing coordinate so Σ_{i≥2} vᵢwᵢ = c₂.
    let tail: Complex64 = (1..n).map(|i| v[i] * w[i]).sum();
    w[1] += (c2 - tail) / v[1];
    xnd_matrix(n, d, &v, &w, alpha)
}

/// Recovers the chart data from a matrix of the family, verifying the
/// structural constraints (unit corner entry, zero patterns, equal diagonal
/// pair, rank-one bulk, zero trace) to relative tolerance `tol`.
pub fn reduced_coords(matrix: &CMatrix, d: f64, tol: f64) -> Result<ReducedCoords, SliceError> {
    let (rows, cols) = matrix.shape();
    if rows != cols || rows < 3 {
        return Err(SliceError::InvalidInput(format!(
            "expected a square matrix of size n+1 >= 3, got {rows}x{cols}"
        )));
    }
    if !all_finite(matrix) {
        return Err(SliceError::InvalidInput("non-finite matrix".into()));
    }
    let n = rows - 1;
    let a_mat = matrix - CMatrix::identity(rows, rows) * Complex64::from(d);
    let scale = a_mat.norm().max(1.0);
    let check = |ok: bool, what: &str| -> Result<(), SliceError> {
        if ok {
            Ok(())
        } else {
            Err(SliceError::StructureViolation(format!(
                "{what} (relative tolerance {tol:.1e})"
            )))
        }
    };
    check(
        (a_mat[(0, 1)] - Complex64::from(1.0)).norm() <= tol * scale,
        "corner entry (1,2) must be 1",
    )?;
    check(
        (a_mat[(0, 0)] - a_mat[(1, 1)]).norm() <= tol * scale,
        "the two corner diagonal entries must agree",
    )?;
    check(
        (2..rows).all(|j| a_mat[(0, j)].norm() <= tol * scale),
        "first row must vanish past the corner block",
    )?;
    check(
        (2..rows).all(|i| a_mat[(i, 1)].norm() <= tol * scale),
        "second column must vanish below the corner block",
    )?;
    let alpha = a_mat[(0, 0)];

    // Reassemble the would-be rank-one datum and test its second singular value.
    let mut a = CMatrix::zeros(n, n);
    a[(0, 0)] = a_mat[(1, 0)] - alpha * alpha;
    for j in 1..n {
        a[(0, j)] = a_mat[(1, j + 1)];
    }
    for i in 1..n {
        a[(i, 0)] = a_mat[(i + 1, 0)];
        for j in 1..n {
            a[(i, j)] = a_mat[(i + 1, j + 1)];
        }
    }
    let singular = a.clone().singular_values();
    if singular.len() >= 2 && singular[1] > tol * singular[0].max(1.0) {
        return Err(SliceError::StructureViolation(format!(
            "bulk block is not rank one (second singular value {:.3e})",
            singular[1]
        )));
    }

    let c1 = a[(0, 0)];
    let c2: Complex64 = (1..n).map(|i| a[(i, i)]).sum();
    let u = Complex64::from((n as f64 + 1.0) * d);
    check(
        (c2 + u + 2.0 * alpha).norm() <= tol * scale.max(u.norm()),
        "trace constraint c₂ = −(n+1)d − 2α violated",
    )?;
    let z = -c1 - u * c2 - c2 * c2;
    Ok(ReducedCoords { alpha, z, c1, c2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sorted_eigenvalues(m: &CMatrix) -> Vec<Complex64> {
        let mut eig: Vec<Complex64> = m
            .clone()
            .schur()
            .eigenvalues()
            .expect("complex Schur always yields eigenvalues")
            .iter()
            .copied()
            .collect();
        eig.sort_by(|a, b| {
            a.re.partial_cmp(&b.re)
                .unwrap()
                .then(a.im.partial_cmp(&b.im).unwrap())
        });
        eig
    }

    #[test]
    fn element_spectrum_matches_the_invariants() {
        for (n, d, z, alpha, seed) in [
            (2usize, 0.5, c(0.05, 0.0), c(-0.3, 0.0), 7u64),
            (3, 0.4, c(0.02, 0.01), c(-0.5, 0.2), 8),
            (4, 0.7, c(0.3, -0.1), c(0.2, 0.4), 9),
        ] {
            let m = xnd_element(n, d, z, alpha, seed).unwrap();
            assert!(m.trace().norm() < 1e-10);
            let ([t1, t2], thick) = thin_thick_eigenvalues(n, d, z);
            let mut expected: Vec<Complex64> =
                std::iter::repeat(thick).take(n - 1).chain([t1, t2]).collect();
            expected.sort_by(|a, b| {
                a.re.partial_cmp(&b.re)
                    .unwrap()
                    .then(a.im.partial_cmp(&b.im).unwrap())
            });
            let eig = sorted_eigenvalues(&m);
            for (got, want) in eig.iter().zip(expected.iter()) {
                assert!(
                    (got - want).norm() < 1e-6,
                    "n={n}: spectrum {eig:?} vs {expected:?}"
                );
            }
        }
    }

    #[test]
    fn reduced_coords_round_trip() {
        for (n, d, z, alpha, seed) in [
            (2usize, 0.5, c(0.05, 0.0), c(-0.3, 0.0), 17u64),
            (3, 0.4, c(0.02, 0.01), c(-0.5, 0.2), 18),
            (5, 1.1, c(-0.4, 0.6), c(0.9, -0.7), 19),
        ] {
            let m = xnd_element(n, d, z, alpha, seed).unwrap();
            let coords = reduced_coords(&m, d, 1e-8).unwrap();
            assert!((coords.alpha - alpha).norm() < 1e-9);
            assert!((coords.z - z).norm() < 1e-9, "n={n}: {:?}", coords.z);
            let (c1, c2) = c1_c2(n, alpha, d, z);
            assert!((coords.c1 - c1).norm() < 1e-9);
            assert!((coords.c2 - c2).norm() < 1e-9);
        }
    }

    #[test]
    fn singular_alphas_kill_the_right_coordinate() {
        let (n, d, z) = (3usize, 0.5, c(0.03, 0.0));
        let [a1, a2, a3] = singular_alphas(n, d, z);
        let (_, c2_at_a1) = c1_c2(n, a1, d, z);
        assert!(c2_at_a1.norm() < 1e-12, "c₂(α₁) = {c2_at_a1}");
        for (label, alpha) in [("α₂", a2), ("α₃", a3)] {
            let (c1, _) = c1_c2(n, alpha, d, z);
            assert!(c1.norm() < 1e-12, "c₁({label}) = {c1}");
        }
        // Real ordering for small positive z.
        let u = (n as f64 + 1.0) * d;
        assert!(a1.im.abs() < 1e-12 && a2.im.abs() < 1e-12 && a3.im.abs() < 1e-12);
        assert!(a1.re < a2.re && a2.re < a3.re && a3.re < 0.0);
        assert!((a1.re + u / 2.0).abs() < 1e-12);
        // Leading-order locations for z ≪ d.
        assert!((a2.re - (-u / 2.0 + z.re / (2.0 * u))).abs() < 1e-2 * z.norm());
        assert!((a3.re - (-z.re / (2.0 * u))).abs() < 1e-2 * z.norm());
    }

    #[test]
    fn thin_values_collide_exactly_at_the_critical_invariant() {
        let (n, d) = (3usize, 0.4);
        let zc = zeta_d(n, d);
        let ([t1, t2], _) = thin_thick_eigenvalues(n, d, Complex64::from(zc));
        assert!((t1 - t2).norm() < 1e-12);
        let ([s1, s2], _) = thin_thick_eigenvalues(n, d, Complex64::from(zc * 0.9));
        assert!((s1 - s2).norm() > 1e-3);
    }

    #[test]
    fn tampered_matrix_is_rejected() {
        let (n, d) = (3usize, 0.5);
        let mut m = xnd_element(n, d, c(0.05, 0.0), c(-0.4, 0.1), 31).unwrap();
        m[(0, 2)] = c(0.2, 0.0);
        assert!(matches!(
            reduced_coords(&m, d, 1e-8),
            Err(SliceError::StructureViolation(_))
        ));

        let mut m2 = xnd_element(n, d, c(0.05, 0.0), c(-0.4, 0.1), 31).unwrap();
        m2[(2, 2)] += c(0.3, 0.0);
        assert!(matches!(
            reduced_coords(&m2, d, 1e-8),
            Err(SliceError::StructureViolation(_))
        ));
    }
}
