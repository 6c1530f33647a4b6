//! Radial Kähler weight profiles.  The potential is applied entrywise,
//! ψ(Y) = Σ_e p(|Y_e|²), with either the flat profile p(ρ) = ρ or a
//! power profile p(ρ) = ρ^{α/2} (C²-regularized near 0).  The induced
//! entrywise metric density is h(ρ) = p'(ρ) + ρ·p''(ρ).

use num_complex::Complex64;
use slice_geometry::CMatrix;

use crate::error::TransportError;

/// Weight profile for the transport metric and Liouville rescaling.
#[derive(Debug, Clone, PartialEq)]
pub struct KahlerWeights {
    /// Number of companion blocks of the model the profile is tuned for
    /// (the admissible exponent window is m < α < 4).
    pub m: usize,
    /// Homogeneity exponent α of the potential under the scaling action.
    pub alpha: f64,
    /// Flat profile p(ρ) = ρ; ignores α for the metric (h ≡ 1).
    pub standard_metric: bool,
    /// Below this radius the power profile is replaced by its C² quadratic
    /// extension so the metric stays positive down to 0.
    pub rho0: f64,
}

impl KahlerWeights {
    /// The flat (Euclidean) profile.
    pub fn standard() -> KahlerWeights {
        KahlerWeights {
            m: 1,
            alpha: 2.0,
            standard_metric: true,
            rho0: 0.01,
        }
    }

    /// A power profile with exponent α; requires m < α < 4 so that the
    /// potential tames the scaling action while the regularized metric
    /// density h stays positive at the origin.
    pub fn power(m: usize, alpha: f64) -> Result<KahlerWeights, TransportError> {
        if m == 0 {
            return Err(TransportError::InvalidInput("m must be at least 1".into()));
        }
        if !(alpha > m as f64 && alpha < 4.0) {
            return Err(TransportError::InvalidInput(format!(
                "exponent must satisfy m < alpha < 4, got m = {m}, alpha = {alpha}"
            )));
        }
        Ok(KahlerWeights {
            m,
            alpha,
            standard_metric: false,
            rho0: 0.01,
        })
    }

    /// Exponent of p as a function of ρ = |z|² (the entry weight is 2).
    fn e(&self) -> f64 {
        self.alpha / 2.0
    }

    /// Quadratic C² extension coefficients (a, b, c) used below ρ₀.
    fn below(&self) -> (f64, f64, f64) {
        let e = self.e();
        let p = self.rho0.powf(e);
        let p1 = e * self.rho0.powf(e - 1.0);
        let p2 = e * (e - 1.0) * self.rho0.powf(e - 2.0);
        let c = p2 / 2.0;
        let b = p1 - p2 * self.rho0;
        let a = p - b * self.rho0 - c * self.rho0 * self.rho0;
        (a, b, c)
    }

    /// Profile value p(ρ).
    pub fn p(&self, rho: f64) -> f64 {
        if self.standard_metric {
            return rho;
        }
        if rho >= self.rho0 {
            rho.powf(self.e())
        } else {
            let (a, b, c) = self.below();
            a + b * rho + c * rho * rho
        }
    }

    /// First derivative p'(ρ).
    pub fn p_prime(&self, rho: f64) -> f64 {
        if self.standard_metric {
            return 1.0;
        }
        if rho >= self.rho0 {
            self.e() * rho.powf(self.e() - 1.0)
        } else {
            let (_, b, c) = self.below();
            b + 2.0 * c * rho
        }
    }

    /// Metric density h(ρ) = p'(ρ) + ρ·p''(ρ); positive on [0, ∞) for
    /// admissible exponents.
    pub fn h(&self, rho: f64) -> f64 {
        if self.standard_metric {
            return 1.0;
        }
        if rho >= self.rho0 {
            let e = self.e();
            e * e * rho.powf(e - 1.0)
        } else {
            let (_, b, c) = self.below();
            b + 4.0 * c * rho
        }
    }

    /// Potential ψ(Y) = Σ_e p(|Y_e|²).
    pub fn potential(&self, y: &CMatrix) -> f64 {
        y.iter().map(|z| self.p(z.norm_sqr())).sum()
    }

    /// Entrywise metric gradient of ψ: (∇ψ)_e = 2 p'(ρ_e) z_e / h(ρ_e),
    /// the Riesz vector of dψ for the weighted metric.
    pub fn metric_gradient(&self, y: &CMatrix) -> CMatrix {
        CMatrix::from_fn(y.nrows(), y.ncols(), |p, q| {
            let z = y[(p, q)];
            let rho = z.norm_sqr();
            z * Complex64::from(2.0 * self.p_prime(rho) / self.h(rho))
        })
    }

    /// Entrywise Liouville field Z_e = p'(ρ_e) z_e / h(ρ_e); for the flat
    /// profile this is the radial field z itself.
    pub fn liouville_field(&self, y: &CMatrix) -> CMatrix {
        CMatrix::from_fn(y.nrows(), y.ncols(), |p, q| {
            let z = y[(p, q)];
            let rho = z.norm_sqr();
            z * Complex64::from(self.p_prime(rho) / self.h(rho))
        })
    }
}
