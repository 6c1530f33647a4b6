use num_complex::Complex64;

use crate::config::BipartiteConfig;
use crate::error::SliceError;
use crate::matrix::{all_finite, CMatrix};

/// An element of the block companion slice: `m` blocks of size n×n sitting
/// in the first block column, with the top block trace-free.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceElement {
    m: usize,
    n: usize,
    blocks: Vec<CMatrix>,
}

impl SliceElement {
    /// Tolerance on `|trace(Y_1)|` for numeric inputs.
    pub const TRACE_TOL: f64 = 1e-12;

    /// Builds a slice element from its blocks `Y_1, …, Y_m` (all n×n,
    /// finite, with `trace(Y_1)` vanishing within [`Self::TRACE_TOL`]).
    pub fn new(n: usize, blocks: Vec<CMatrix>) -> Result<Self, SliceError> {
        if n == 0 || blocks.is_empty() {
            return Err(SliceError::InvalidInput(
                "need n >= 1 and at least one block".into(),
            ));
        }
        for (k, b) in blocks.iter().enumerate() {
            if b.nrows() != n || b.ncols() != n {
                return Err(SliceError::InvalidInput(format!(
                    "block {} is {}x{}, expected {}x{}",
                    k + 1,
                    b.nrows(),
                    b.ncols(),
                    n,
                    n
                )));
            }
            if !all_finite(b) {
                return Err(SliceError::InvalidInput(format!(
                    "block {} has non-finite entries",
                    k + 1
                )));
            }
        }
        let trace = blocks[0].trace();
        if trace.norm() > Self::TRACE_TOL {
            return Err(SliceError::InvalidInput(format!(
                "trace(Y_1) = {trace} exceeds the tolerance {}",
                Self::TRACE_TOL
            )));
        }
        Ok(SliceElement {
            m: blocks.len(),
            n,
            blocks,
        })
    }

    /// The zero element (all blocks zero); assembles to the base nilpotent.
    pub fn zero(m: usize, n: usize) -> Self {
        SliceElement {
            m,
            n,
            blocks: vec![CMatrix::zeros(n, n); m],
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The blocks `Y_1, …, Y_m`.
    pub fn blocks(&self) -> &[CMatrix] {
        &self.blocks
    }

    pub fn block(&self, k: usize) -> &CMatrix {
        &self.blocks[k]
    }
}

/// The distinguished nilpotent (n blocks of size m) together with its
/// standard triple: returns `(N⁺, H, N⁻)` with `[H,N⁺] = 2N⁺`,
/// `[H,N⁻] = −2N⁻`, `[N⁺,N⁻] = H`.
///
/// In block coordinates (m×m blocks of size n×n): `H` is block-diagonal
/// with `(m−1−2k)·I` in block k, `N⁺` has identity blocks on the
/// superdiagonal, and `N⁻` has `(k+1)(m−k−1)·I` in block (k+1, k).
pub fn nilpotent_data(m: usize, n: usize) -> (CMatrix, CMatrix, CMatrix) {
    let size = m * n;
    let mut h = CMatrix::zeros(size, size);
    let mut nplus = CMatrix::zeros(size, size);
    let mut nminus = CMatrix::zeros(size, size);
    for k in 0..m {
        let weight = Complex64::from((m as f64) - 1.0 - 2.0 * k as f64);
        for i in 0..n {
            h[(k * n + i, k * n + i)] = weight;
        }
    }
    for k in 0..m.saturating_sub(1) {
        let coeff = Complex64::from(((k + 1) * (m - k - 1)) as f64);
        for i in 0..n {
            nplus[(k * n + i, (k + 1) * n + i)] = Complex64::from(1.0);
            nminus[((k + 1) * n + i, k * n + i)] = coeff;
        }
    }
    (nplus, h, nminus)
}

/// The mn×mn companion-form matrix of a slice element: blocks `Y_1..Y_m`
/// down the first block column, identity blocks on the superdiagonal.
pub fn assemble(y: &SliceElement) -> CMatrix {
    let (m, n) = (y.m(), y.n());
    let mut phi = CMatrix::zeros(m * n, m * n);
    for (k, block) in y.blocks().iter().enumerate() {
        phi.view_mut((k * n, 0), (n, n)).copy_from(block);
    }
    for k in 0..m.saturating_sub(1) {
        for i in 0..n {
            phi[(k * n + i, (k + 1) * n + i)] = Complex64::from(1.0);
        }
    }
    phi
}

/// The weighted scaling action: block `Y_k` is multiplied by `r^{2k}`.
/// Eigenvalues of the assembled matrix scale by `r²`.
pub fn lambda_action(r: Complex64, y: &SliceElement) -> Result<SliceElement, SliceError> {
    if r.norm() == 0.0 {
        return Err(SliceError::InvalidInput(
            "scaling parameter r must be nonzero".into(),
        ));
    }
    let blocks = y
        .blocks()
        .iter()
        .enumerate()
        .map(|(k, b)| b * r.powu((k + 1) as u32 * 2))
        .collect();
    Ok(SliceElement {
        m: y.m(),
        n: y.n(),
        blocks,
    })
}

/// The degree-m matrix polynomial `A(μ) = μ^m·I − μ^{m−1}·Y_1 − … − Y_m`.
/// Its determinant is the characteristic polynomial of [`assemble`], and
/// `dim ker A(μ)` is the geometric multiplicity of `μ` there.
#[derive(Debug, Clone)]
pub struct MatrixPolynomial {
    m: usize,
    n: usize,
    blocks: Vec<CMatrix>,
}

impl MatrixPolynomial {
    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Evaluates `A(μ)`.
    pub fn eval(&self, mu: Complex64) -> CMatrix {
        let mut a = CMatrix::identity(self.n, self.n) * mu.powu(self.m as u32);
        for (k, block) in self.blocks.iter().enumerate() {
            a -= block * mu.powu((self.m - k - 1) as u32);
        }
        a
    }

    /// `det A(μ)`.
    pub fn det(&self, mu: Complex64) -> Complex64 {
        self.eval(mu).determinant()
    }

    /// Numerical kernel dimension of `A(μ)`: the number of singular values
    /// below `rel_tol` times the largest one (all of them, for the zero
    /// matrix).
    pub fn kernel_dimension(&self, mu: Complex64, rel_tol: f64) -> usize {
        kernel_dimension(&self.eval(mu), rel_tol)
    }
}

/// Singular-value thresholded kernel dimension of an arbitrary matrix.
pub(crate) fn kernel_dimension(a: &CMatrix, rel_tol: f64) -> usize {
    let svd = a.clone().svd(false, false);
    let max = svd
        .singular_values
        .iter()
        .cloned()
        .fold(0.0_f64, f64::max);
    if max == 0.0 {
        return a.ncols();
    }
    svd.singular_values
        .iter()
        .filter(|&&s| s < rel_tol * max)
        .count()
}

/// Packages a slice element as its matrix polynomial.
pub fn matrix_polynomial(y: &SliceElement) -> MatrixPolynomial {
    MatrixPolynomial {
        m: y.m(),
        n: y.n(),
        blocks: y.blocks().to_vec(),
    }
}

/// Embeds a size-(m−1) element as a size-m element with vanishing last
/// block.  The assembled spectrum gains the eigenvalue 0 with multiplicity
/// n (one thin and one thick copy), so the lower configuration must not
/// already contain a value at 0.
pub fn embed_lower(
    lower: &SliceElement,
    lower_config: &BipartiteConfig,
) -> Result<SliceElement, SliceError> {
    let closest = lower_config
        .thin()
        .iter()
        .chain(lower_config.thick())
        .map(|z| z.norm())
        .fold(f64::INFINITY, f64::min);
    if closest <= 1e-9 {
        return Err(SliceError::ZeroCollision { closest });
    }
    let mut blocks = lower.blocks().to_vec();
    blocks.push(CMatrix::zeros(lower.n(), lower.n()));
    Ok(SliceElement {
        m: lower.m() + 1,
        n: lower.n(),
        blocks,
    })
}
