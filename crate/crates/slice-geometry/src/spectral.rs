use num_complex::Complex64;

use crate::config::BipartiteConfig;
use crate::error::SliceError;
use crate::matrix::{CMatrix, CVector};
use crate::slice::{assemble, matrix_polynomial, SliceElement};

/// Default eigenvalue clustering tolerance.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-6;

/// One eigenvalue cluster of an assembled slice element.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralCluster {
    /// Mean of the clustered eigenvalues.
    pub center: Complex64,
    /// Number of eigenvalues in the cluster (algebraic multiplicity).
    pub algebraic: usize,
    /// Thresholded kernel dimension of `A(center)` (geometric multiplicity).
    pub geometric: usize,
}

/// Eigenvalues of the assembled matrix, grouped by single-linkage
/// clustering at `tol`, each cluster annotated with its algebraic and
/// geometric multiplicity.  Clusters are sorted by center (re, then im).
pub fn spectral_clusters(y: &SliceElement, tol: f64) -> Result<Vec<SpectralCluster>, SliceError> {
    let eigenvalues = eigenvalues_of(&assemble(y))?;
    let poly = matrix_polynomial(y);
    // Geometric multiplicity uses a looser relative threshold than the
    // clustering tolerance: cluster centers sit up to ~tol away from the
    // true eigenvalue, which already lifts the smallest singular value of
    // A(center) to that scale.
    let kernel_tol = tol.sqrt().max(1e-8);
    let mut clusters = cluster_points(&eigenvalues, tol)
        .into_iter()
        .map(|members| {
            let center = members.iter().sum::<Complex64>() / (members.len() as f64);
            SpectralCluster {
                center,
                algebraic: members.len(),
                geometric: poly.kernel_dimension(center, kernel_tol),
            }
        })
        .collect::<Vec<_>>();
    clusters.sort_by(|a, b| {
        a.center
            .re
            .partial_cmp(&b.center.re)
            .unwrap()
            .then(a.center.im.partial_cmp(&b.center.im).unwrap())
    });
    Ok(clusters)
}

/// The adjoint-quotient value of a slice element: its thin (multiplicity 1)
/// and thick (multiplicity n−1) eigenvalues, as a recentered configuration.
///
/// Errors, in order of precedence:
/// - `SemisimplicityFail` if any cluster's geometric multiplicity falls
///   short of its algebraic multiplicity (the element is outside the
///   semisimple-on-each-cluster stratum);
/// - `MultiplicityMismatch` if the cluster sizes are not exactly m ones and
///   m copies of n−1, or if the clustering changes under halving `tol`.
///
/// At n = 2 thin and thick both have multiplicity 1, so the assignment of
/// the 2m singleton clusters to the two lists is conventional (first m by
/// (re, im) order become thin).
pub fn chi_pi(y: &SliceElement, tol: f64) -> Result<BipartiteConfig, SliceError> {
    let (m, n) = (y.m(), y.n());
    if n < 2 {
        return Err(SliceError::InvalidInput(
            "the quotient map needs n >= 2 (thick multiplicity n-1 >= 1)".into(),
        ));
    }
    let clusters = spectral_clusters(y, tol)?;

    for c in &clusters {
        if c.geometric < c.algebraic {
            return Err(SliceError::SemisimplicityFail {
                eigenvalue: c.center,
                algebraic: c.algebraic,
                geometric: c.geometric,
            });
        }
    }

    // Stability under tolerance halving: same cluster-size profile, with
    // matching centers.
    let halved = spectral_clusters(y, tol / 2.0)?;
    if !clusterings_agree(&clusters, &halved, tol) {
        return Err(SliceError::MultiplicityMismatch(format!(
            "clustering unstable under tolerance halving ({} vs {} clusters)",
            clusters.len(),
            halved.len()
        )));
    }

    let mut sizes: Vec<usize> = clusters.iter().map(|c| c.algebraic).collect();
    sizes.sort_unstable();
    let mut expected: Vec<usize> = std::iter::repeat(1)
        .take(m)
        .chain(std::iter::repeat(n - 1).take(m))
        .collect();
    expected.sort_unstable();
    if sizes != expected {
        return Err(SliceError::MultiplicityMismatch(format!(
            "cluster sizes {sizes:?}, expected m = {m} thin (size 1) and m thick (size {})",
            n - 1
        )));
    }

    let (thin, thick) = if n == 2 {
        let centers: Vec<Complex64> = clusters.iter().map(|c| c.center).collect();
        (centers[..m].to_vec(), centers[m..].to_vec())
    } else {
        let thin = clusters
            .iter()
            .filter(|c| c.algebraic == 1)
            .map(|c| c.center)
            .collect();
        let thick = clusters
            .iter()
            .filter(|c| c.algebraic == n - 1)
            .map(|c| c.center)
            .collect();
        (thin, thick)
    };
    BipartiteConfig::new(n, thin, thick)
}

/// The rank-one construction sending a vector pair to a traceless matrix:
/// `f(v, w) = v·wᵀ − ((v,w)/n)·I` with the bilinear pairing `(v,w) = Σ v_i w_i`.
/// Its spectrum is the thin value `(n−1)(v,w)/n` and the thick value
/// `−(v,w)/n` with multiplicity n−1; it is invariant under
/// `(v, w) → (ζv, ζ⁻¹w)`.
pub fn git_map(v: &CVector, w: &CVector) -> CMatrix {
    assert_eq!(v.len(), w.len(), "vector lengths differ");
    let n = v.len();
    let dot: Complex64 = v.iter().zip(w.iter()).map(|(a, b)| a * b).sum();
    let mut f = CMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            f[(i, j)] = v[i] * w[j];
        }
        f[(i, i)] -= dot / (n as f64);
    }
    f
}

/// Eigenvalues via complex Schur decomposition.
fn eigenvalues_of(matrix: &CMatrix) -> Result<Vec<Complex64>, SliceError> {
    let schur = matrix.clone().schur();
    let eig = schur.eigenvalues().ok_or_else(|| {
        SliceError::InvalidInput("Schur decomposition produced no eigenvalues".into())
    })?;
    Ok(eig.iter().copied().collect())
}

/// Single-linkage clustering: points at distance ≤ tol land in one cluster.
fn cluster_points(points: &[Complex64], tol: f64) -> Vec<Vec<Complex64>> {
    let k = points.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if (points[i] - points[j]).norm() <= tol {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<Complex64>> = Default::default();
    for i in 0..k {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(points[i]);
    }
    groups.into_values().collect()
}

/// True when the two clusterings have the same size profile and matching
/// centers (greedy nearest match within `tol`).
fn clusterings_agree(a: &[SpectralCluster], b: &[SpectralCluster], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    for ca in a {
        let mut found = false;
        for (j, cb) in b.iter().enumerate() {
            if !used[j] && cb.algebraic == ca.algebraic && (cb.center - ca.center).norm() <= tol {
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return false;
        }
    }
    true
}
