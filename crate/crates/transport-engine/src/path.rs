//! Base paths in the parameter plane: piecewise-linear curves with a
//! uniform parametrization on [0, 1].

use num_complex::Complex64;

use crate::error::TransportError;

/// A polyline t: [0, 1] → ℂ with uniformly spaced breakpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct BasePath {
    points: Vec<Complex64>,
}

impl BasePath {
    /// A path through the given breakpoints (at least two, all finite).
    pub fn from_points(points: Vec<Complex64>) -> Result<BasePath, TransportError> {
        if points.len() < 2 {
            return Err(TransportError::InvalidInput(
                "a path needs at least two breakpoints".into(),
            ));
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(TransportError::InvalidInput(
                "path breakpoints must be finite".into(),
            ));
        }
        Ok(BasePath { points })
    }

    /// Straight segment from `from` to `to` with `count` breakpoints.
    pub fn line(from: Complex64, to: Complex64, count: usize) -> Result<BasePath, TransportError> {
        if count < 2 {
            return Err(TransportError::InvalidInput(
                "a line needs at least two breakpoints".into(),
            ));
        }
        let points = (0..count)
            .map(|i| {
                let s = i as f64 / (count - 1) as f64;
                from + (to - from) * Complex64::from(s)
            })
            .collect();
        BasePath::from_points(points)
    }

    /// Closed circle traversed once counterclockwise, starting and ending
    /// at `center + radius`.
    pub fn circle(
        center: Complex64,
        radius: f64,
        count: usize,
    ) -> Result<BasePath, TransportError> {
        if count < 8 {
            return Err(TransportError::InvalidInput(
                "a circle needs at least eight breakpoints".into(),
            ));
        }
        if radius <= 0.0 {
            return Err(TransportError::InvalidInput(
                "circle radius must be positive".into(),
            ));
        }
        let points = (0..count)
            .map(|i| {
                let theta = 2.0 * std::f64::consts::PI * i as f64 / (count - 1) as f64;
                center + Complex64::from_polar(radius, theta)
            })
            .collect();
        BasePath::from_points(points)
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn start(&self) -> Complex64 {
        self.points[0]
    }

    pub fn end(&self) -> Complex64 {
        *self.points.last().unwrap()
    }

    /// Position at parameter s ∈ [0, 1] (clamped), linear between
    /// breakpoints.
    pub fn eval(&self, s: f64) -> Complex64 {
        let (idx, frac) = self.locate(s);
        self.points[idx] + (self.points[idx + 1] - self.points[idx]) * Complex64::from(frac)
    }

    /// Velocity dt/ds at parameter s (piecewise constant).
    pub fn velocity(&self, s: f64) -> Complex64 {
        let (idx, _) = self.locate(s);
        (self.points[idx + 1] - self.points[idx]) * Complex64::from((self.points.len() - 1) as f64)
    }

    fn locate(&self, s: f64) -> (usize, f64) {
        let segments = self.points.len() - 1;
        let clamped = s.clamp(0.0, 1.0);
        let scaled = clamped * segments as f64;
        let idx = (scaled.floor() as usize).min(segments - 1);
        (idx, scaled - idx as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn line_interpolates_endpoints() {
        let path = BasePath::line(c(1.0, 0.0), c(0.0, 2.0), 11).unwrap();
        assert!((path.eval(0.0) - c(1.0, 0.0)).norm() < 1e-15);
        assert!((path.eval(1.0) - c(0.0, 2.0)).norm() < 1e-15);
        assert!((path.eval(0.5) - c(0.5, 1.0)).norm() < 1e-12);
        assert!((path.velocity(0.3) - c(-1.0, 2.0)).norm() < 1e-12);
    }

    #[test]
    fn circle_closes_and_winds_once() {
        let path = BasePath::circle(c(0.5, 0.0), 0.25, 512).unwrap();
        assert!((path.start() - path.end()).norm() < 1e-12);
        assert!((path.eval(0.0) - c(0.75, 0.0)).norm() < 1e-12);
        assert!((path.eval(0.5) - c(0.25, 0.0)).norm() < 1e-4);
        // Winding number around the center is 1.
        let mut total = 0.0;
        let pts = path.points();
        for pair in pts.windows(2) {
            let a = pair[0] - c(0.5, 0.0);
            let b = pair[1] - c(0.5, 0.0);
            total += (b / a).arg();
        }
        assert!((total - 2.0 * std::f64::consts::PI).abs() < 1e-9);
    }

    #[test]
    fn degenerate_paths_are_rejected() {
        assert!(BasePath::from_points(vec![c(0.0, 0.0)]).is_err());
        assert!(BasePath::line(c(0.0, 0.0), c(1.0, 0.0), 1).is_err());
        assert!(BasePath::circle(c(0.0, 0.0), -1.0, 64).is_err());
    }
}
