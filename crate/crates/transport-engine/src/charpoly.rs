//! Characteristic-polynomial coefficients and their exact holomorphic
//! gradients, used as the fiber constraints of the transport system.

use num_complex::Complex64;
use slice_geometry::CMatrix;

/// Coefficients e₁, …, e_n with e_j the j-th elementary symmetric function
/// of the eigenvalues, via Newton's identities on power traces.
pub fn char_coeffs(matrix: &CMatrix) -> Vec<Complex64> {
    let n = matrix.nrows();
    let mut powers = Vec::with_capacity(n);
    let mut current = matrix.clone();
    for _ in 0..n {
        powers.push(current.clone());
        current = &current * matrix;
    }
    let p: Vec<Complex64> = powers.iter().map(|m| m.trace()).collect();
    let mut e = vec![Complex64::from(0.0); n + 1];
    e[0] = Complex64::from(1.0);
    for j in 1..=n {
        let mut acc = Complex64::from(0.0);
        for i in 1..=j {
            let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
            acc += Complex64::from(sign) * e[j - i] * p[i - 1];
        }
        e[j] = acc / Complex64::from(j as f64);
    }
    e[1..].to_vec()
}

/// Coefficients together with their gradients: `grads[j][(p, q)]` is the
/// holomorphic partial of e_{j+1} with respect to the (p, q) entry.
pub fn char_coeffs_with_gradient(matrix: &CMatrix) -> (Vec<Complex64>, Vec<CMatrix>) {
    let n = matrix.nrows();
    let mut powers = Vec::with_capacity(n);
    let mut current = CMatrix::identity(n, n);
    for _ in 0..n {
        powers.push(current.clone());
        current = &current * matrix;
    }
    // tr(Y^i) has gradient i·(Y^{i−1})ᵀ.
    let p: Vec<Complex64> = (1..=n).map(|i| (&powers[i - 1] * matrix).trace()).collect();
    let dp: Vec<CMatrix> = (1..=n)
        .map(|i| powers[i - 1].transpose() * Complex64::from(i as f64))
        .collect();

    let mut e = vec![Complex64::from(0.0); n + 1];
    let mut de = vec![CMatrix::zeros(n, n); n + 1];
    e[0] = Complex64::from(1.0);
    for j in 1..=n {
        let mut acc = Complex64::from(0.0);
        let mut dacc = CMatrix::zeros(n, n);
        for i in 1..=j {
            let sign = Complex64::from(if i % 2 == 1 { 1.0 } else { -1.0 });
            acc += sign * e[j - i] * p[i - 1];
            dacc += (&de[j - i] * p[i - 1] + &dp[i - 1] * e[j - i]) * sign;
        }
        let inv_j = Complex64::from(1.0 / j as f64);
        e[j] = acc * inv_j;
        de[j] = dacc * inv_j;
    }
    (e[1..].to_vec(), de[1..].to_vec())
}
