use num_complex::Complex64;
use serde_json::{json, Value};

use crate::error::SliceError;

/// A spectral configuration on the base of the fibration: `m` thin
/// eigenvalues (multiplicity 1) and `m` thick eigenvalues (multiplicity
/// n−1), recentered so that `Σ thin + (n−1)·Σ thick = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteConfig {
    n: usize,
    thin: Vec<Complex64>,
    thick: Vec<Complex64>,
}

impl BipartiteConfig {
    /// Builds a configuration, recentering both lists by the trace average
    /// `T/(mn)` with `T = Σ thin + (n−1)·Σ thick` so the normalization
    /// constraint holds exactly.
    pub fn new(
        n: usize,
        thin: Vec<Complex64>,
        thick: Vec<Complex64>,
    ) -> Result<Self, SliceError> {
        if n < 2 {
            return Err(SliceError::InvalidInput(format!(
                "configuration needs n >= 2, got n = {n}"
            )));
        }
        if thin.is_empty() || thin.len() != thick.len() {
            return Err(SliceError::InvalidInput(format!(
                "need equally many thin and thick values (>= 1), got {} and {}",
                thin.len(),
                thick.len()
            )));
        }
        if thin
            .iter()
            .chain(&thick)
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(SliceError::InvalidInput("non-finite eigenvalue".into()));
        }
        let m = thin.len();
        let trace: Complex64 = thin.iter().sum::<Complex64>()
            + Complex64::from((n - 1) as f64) * thick.iter().sum::<Complex64>();
        let shift = trace / ((m * n) as f64);
        let mut thin: Vec<Complex64> = thin.into_iter().map(|z| z - shift).collect();
        let mut thick: Vec<Complex64> = thick.into_iter().map(|z| z - shift).collect();
        sort_values(&mut thin);
        sort_values(&mut thick);
        Ok(BipartiteConfig { n, thin, thick })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of thin (equivalently thick) values.
    pub fn m(&self) -> usize {
        self.thin.len()
    }

    /// Thin eigenvalues (multiplicity 1), sorted by (re, im).
    pub fn thin(&self) -> &[Complex64] {
        &self.thin
    }

    /// Thick eigenvalues (multiplicity n−1), sorted by (re, im).
    pub fn thick(&self) -> &[Complex64] {
        &self.thick
    }

    /// Residual of `Σ thin + (n−1)·Σ thick`; zero up to rounding by
    /// construction.
    pub fn normalization_residual(&self) -> f64 {
        let t: Complex64 = self.thin.iter().sum::<Complex64>()
            + Complex64::from((self.n - 1) as f64) * self.thick.iter().sum::<Complex64>();
        t.norm()
    }

    /// True when all 2m values are pairwise separated by more than `tol`.
    pub fn is_regular(&self, tol: f64) -> bool {
        let all: Vec<Complex64> = self.thin.iter().chain(&self.thick).copied().collect();
        for i in 0..all.len() {
            for j in (i + 1)..all.len() {
                if (all[i] - all[j]).norm() <= tol {
                    return false;
                }
            }
        }
        true
    }

    /// The full spectrum as a multiset: each thin value once, each thick
    /// value n−1 times.
    pub fn full_spectrum(&self) -> Vec<Complex64> {
        let mut out = self.thin.clone();
        for &mu in &self.thick {
            out.extend(std::iter::repeat(mu).take(self.n - 1));
        }
        out
    }

    /// Scales every eigenvalue by `factor` (the base-side effect of the
    /// weighted rescaling action).
    pub fn scaled(&self, factor: Complex64) -> BipartiteConfig {
        let mut thin: Vec<Complex64> = self.thin.iter().map(|z| z * factor).collect();
        let mut thick: Vec<Complex64> = self.thick.iter().map(|z| z * factor).collect();
        sort_values(&mut thin);
        sort_values(&mut thick);
        BipartiteConfig {
            n: self.n,
            thin,
            thick,
        }
    }

    /// Bottleneck matching distance between two configurations of the same
    /// shape: the smallest possible value, over label matchings, of the
    /// largest pointwise eigenvalue displacement.
    ///
    /// For n = 2 thin and thick values play symmetric roles (both have
    /// multiplicity 1), so the two lists are compared as one combined
    /// multiset; for n ≥ 3 thin is matched against thin and thick against
    /// thick.
    pub fn distance(&self, other: &BipartiteConfig) -> Result<f64, SliceError> {
        if self.n != other.n || self.m() != other.m() {
            return Err(SliceError::InvalidInput(format!(
                "cannot compare configurations of shapes (n={}, m={}) and (n={}, m={})",
                self.n,
                self.m(),
                other.n,
                other.m()
            )));
        }
        if self.n == 2 {
            let a: Vec<Complex64> = self.thin.iter().chain(&self.thick).copied().collect();
            let b: Vec<Complex64> = other.thin.iter().chain(&other.thick).copied().collect();
            Ok(bottleneck_distance(&a, &b))
        } else {
            let thin = bottleneck_distance(&self.thin, &other.thin);
            let thick = bottleneck_distance(&self.thick, &other.thick);
            Ok(thin.max(thick))
        }
    }

    /// Serializes as `{"n": .., "thin": [[re, im], ..], "thick": [..]}`.
    pub fn to_json(&self) -> Value {
        let ser = |vals: &[Complex64]| -> Vec<Value> {
            vals.iter().map(|z| json!([z.re, z.im])).collect()
        };
        json!({ "n": self.n, "thin": ser(&self.thin), "thick": ser(&self.thick) })
    }
}

fn sort_values(values: &mut [Complex64]) {
    values.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
}

/// Minimum over matchings of the maximum displacement, by exhaustive search
/// with pruning; list lengths here are at most 2m ≤ 12.
fn bottleneck_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let k = a.len();
    let dist: Vec<Vec<f64>> = a
        .iter()
        .map(|x| b.iter().map(|y| (x - y).norm()).collect())
        .collect();
    let mut used = vec![false; k];
    let mut best = f64::INFINITY;
    fn go(
        i: usize,
        current_max: f64,
        dist: &[Vec<f64>],
        used: &mut [bool],
        best: &mut f64,
    ) {
        if current_max >= *best {
            return;
        }
        if i == dist.len() {
            *best = current_max;
            return;
        }
        for j in 0..used.len() {
            if !used[j] {
                used[j] = true;
                go(i + 1, current_max.max(dist[i][j]), dist, used, best);
                used[j] = false;
            }
        }
    }
    go(0, 0.0, &dist, &mut used, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn recentering_enforces_normalization() {
        let cfg = BipartiteConfig::new(3, vec![c(1.0, 0.0), c(2.0, 1.0)], vec![c(0.5, 0.0), c(-1.0, 0.0)])
            .unwrap();
        assert!(cfg.normalization_residual() < 1e-12);
        assert_eq!(cfg.m(), 2);
        assert_eq!(cfg.full_spectrum().len(), 6);
    }

    #[test]
    fn already_normalized_input_is_unchanged() {
        // thin (1-n)t, thick t is exactly normalized.
        let t = c(0.4, -0.2);
        let cfg = BipartiteConfig::new(3, vec![-2.0 * t], vec![t]).unwrap();
        assert!((cfg.thin()[0] + 2.0 * t).norm() < 1e-15);
        assert!((cfg.thick()[0] - t).norm() < 1e-15);
    }

    #[test]
    fn distance_is_matching_invariant() {
        let a = BipartiteConfig::new(
            3,
            vec![c(1.0, 0.0), c(-1.0, 0.0)],
            vec![c(0.2, 0.3), c(-0.2, -0.3)],
        )
        .unwrap();
        // Same values provided in a different order.
        let b = BipartiteConfig::new(
            3,
            vec![c(-1.0, 0.0), c(1.0, 0.0)],
            vec![c(-0.2, -0.3), c(0.2, 0.3)],
        )
        .unwrap();
        assert!(a.distance(&b).unwrap() < 1e-15);
    }

    #[test]
    fn distance_detects_displacement() {
        let a = BipartiteConfig::new(3, vec![c(1.0, 0.0)], vec![c(-0.5, 0.0)]).unwrap();
        let b = BipartiteConfig::new(3, vec![c(1.2, 0.0)], vec![c(-0.6, 0.0)]).unwrap();
        let d = a.distance(&b).unwrap();
        assert!(d > 0.05 && d < 0.4, "distance {d}");
    }

    #[test]
    fn n_two_compares_the_combined_multiset() {
        // Thin/thick split is conventional at n=2; swapping the roles must
        // not register as a displacement.
        let a = BipartiteConfig::new(2, vec![c(1.0, 0.0)], vec![c(-1.0, 0.0)]).unwrap();
        let b = BipartiteConfig::new(2, vec![c(-1.0, 0.0)], vec![c(1.0, 0.0)]).unwrap();
        assert!(a.distance(&b).unwrap() < 1e-15);
    }

    #[test]
    fn regularity_detects_collisions() {
        let a = BipartiteConfig::new(3, vec![c(1.0, 0.0)], vec![c(-0.5, 0.0)]).unwrap();
        assert!(a.is_regular(1e-9));
        let b = BipartiteConfig::new(3, vec![c(0.1, 0.0)], vec![c(0.1, 0.0)]).unwrap();
        assert!(!b.is_regular(1e-9));
    }

    #[test]
    fn shape_mismatches_are_rejected() {
        let a = BipartiteConfig::new(3, vec![c(1.0, 0.0)], vec![c(-0.5, 0.0)]).unwrap();
        let b = BipartiteConfig::new(
            3,
            vec![c(1.0, 0.0), c(2.0, 0.0)],
            vec![c(-0.5, 0.0), c(0.5, 0.0)],
        )
        .unwrap();
        assert!(a.distance(&b).is_err());
        assert!(BipartiteConfig::new(1, vec![c(0.0, 0.0)], vec![]).is_err());
    }

    #[test]
    fn scaling_scales_values() {
        let a = BipartiteConfig::new(3, vec![c(1.0, 0.0)], vec![c(-0.5, 0.0)]).unwrap();
        let b = a.scaled(c(2.0, 0.0));
        assert!((b.thin()[0] - c(2.0, 0.0)).norm() < 1e-15);
        assert!((b.thick()[0] - c(-1.0, 0.0)).norm() < 1e-15);
    }
}
