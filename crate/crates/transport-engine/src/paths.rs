//! Paths in the α-parameter plane of the reduced family: the pair of arcs
//! whose plane intersections model a trefoil diagram, the bent arc joining
//! the two extreme singular parameters, and monodromy of the close
//! eigenvalue pair around its collision value.

use num_complex::Complex64;
use slice_geometry::{singular_alphas, zeta_d};

use crate::error::TransportError;
use crate::moment::{classify_fiber, FiberKind};

/// The two planar arcs of the trefoil picture.  Both start at the largest
/// circle radius (the parameter where the close pair merges with the far
/// eigenvalue collides in the reduced coordinates); the first is a straight
/// segment, the second its image under a triple half-turn twist supported
/// on an annulus.
#[derive(Debug, Clone)]
pub struct TrefoilPaths {
    /// Straight segment from α₁ to α₂.
    pub delta_one: Vec<Complex64>,
    /// Twisted arc from α₁ to α₃.
    pub delta_three: Vec<Complex64>,
    /// The three singular parameter values α₁ < α₂ < α₃ < 0.
    pub alphas: [f64; 3],
    /// Center of the twist annulus, (α₂ + α₃)/2 = −u/4.
    pub twist_center: f64,
}

/// A located intersection of the two arcs together with the fiber type of
/// the family over that parameter.
#[derive(Debug, Clone)]
pub struct PathIntersection {
    pub location: Complex64,
    pub kind: FiberKind,
    pub expected_dim: usize,
}

/// A sample along the bent arc from α₁ to α₃.
#[derive(Debug, Clone)]
pub struct PathSample {
    pub alpha: Complex64,
    pub kind: FiberKind,
    pub expected_dim: usize,
}

/// Fiber classification along the bent arc, plus the real dimension swept
/// by the one-parameter family of generic fibers.
#[derive(Debug, Clone)]
pub struct LambdaPathReport {
    pub samples: Vec<PathSample>,
    pub swept_dimension: usize,
}

/// Eigenvalue tracking around a loop in the z-plane.
#[derive(Debug, Clone)]
pub struct MonodromyReport {
    /// Whether the close eigenvalue pair came back interchanged.
    pub swapped: bool,
    /// Smallest separation of the tracked pair along the loop.
    pub min_pair_gap: f64,
}

fn smootherstep(t: f64) -> f64 {
    let t = t.clamp(0.0, 1.0);
    t * t * t * (t * (6.0 * t - 15.0) + 10.0)
}

/// Checks the family parameters and returns (u, [α₁, α₂, α₃]).
fn checked_alphas(n: usize, d: f64, z: f64) -> Result<(f64, [f64; 3]), TransportError> {
    if n < 2 {
        return Err(TransportError::InvalidInput("need n >= 2".into()));
    }
    if d <= 0.0 {
        return Err(TransportError::InvalidInput("need d > 0".into()));
    }
    if z <= 0.0 || z >= zeta_d(n, d) {
        return Err(TransportError::InvalidInput(format!(
            "need 0 < z < {} for three distinct real singular parameters",
            zeta_d(n, d)
        )));
    }
    let u = (n as f64 + 1.0) * d;
    let alphas = singular_alphas(n, d, Complex64::from(z));
    Ok((u, [alphas[0].re, alphas[1].re, alphas[2].re]))
}

/// Builds the two arcs whose intersection pattern reproduces a trefoil
/// diagram.  The straight segment δ₁ runs from α₁ to α₂; the second arc is
/// the image of δ₁ under three applications of a half-turn twist about
/// o = −u/4 supported between the circles through α₂ and α₁.
pub fn trefoil_paths(n: usize, d: f64, z: f64) -> Result<TrefoilPaths, TransportError> {
    let (u, alphas) = checked_alphas(n, d, z)?;
    let [alpha1, alpha2, alpha3] = alphas;
    let center = -u / 4.0;
    let r_inner = (alpha2 - center).abs();
    let r_outer = (alpha1 - center).abs();
    let count = 3000usize;
    let mut delta_one = Vec::with_capacity(count + 1);
    for k in 0..=count {
        let s = k as f64 / count as f64;
        delta_one.push(Complex64::new(alpha1 + s * (alpha2 - alpha1), 0.0));
    }
    let twist = |x: Complex64| -> Complex64 {
        let o = Complex64::new(center, 0.0);
        let rel = x - o;
        let r = rel.norm();
        // Angle profile: full half-turn inside the inner circle, fading to
        // nothing at the outer circle.
        let eta = 1.0 - smootherstep((r - r_inner) / (r_outer - r_inner));
        o + (Complex64::i() * std::f64::consts::PI * 3.0 * eta).exp() * rel
    };
    let delta_three: Vec<Complex64> = delta_one.iter().map(|&x| twist(x)).collect();
    let end_gap = (delta_three[count] - Complex64::from(alpha3)).norm();
    if end_gap > 1e-9 * u.abs().max(1.0) {
        return Err(TransportError::StepFailure {
            s: 1.0,
            reason: format!("twisted arc misses its endpoint by {end_gap:.3e}"),
        });
    }
    Ok(TrefoilPaths {
        delta_one,
        delta_three,
        alphas,
        twist_center: center,
    })
}

fn orientation(a: Complex64, b: Complex64, c: Complex64) -> f64 {
    (b.re - a.re) * (c.im - a.im) - (b.im - a.im) * (c.re - a.re)
}

fn proper_crossing(
    p1: Complex64,
    p2: Complex64,
    q1: Complex64,
    q2: Complex64,
) -> Option<Complex64> {
    let o1 = orientation(p1, p2, q1);
    let o2 = orientation(p1, p2, q2);
    let o3 = orientation(q1, q2, p1);
    let o4 = orientation(q1, q2, p2);
    if o1 * o2 < 0.0 && o3 * o4 < 0.0 {
        let t = o3 / (o3 - o4);
        Some(q1 + Complex64::from(t) * (q2 - q1))
    } else {
        None
    }
}

/// All intersection points of two polylines: proper segment crossings by a
/// strict orientation test, endpoint coincidences up to 1e−9, merged into
/// clusters so that one geometric intersection is reported once.
pub fn intersection_points(first: &[Complex64], second: &[Complex64]) -> Vec<Complex64> {
    let mut raw: Vec<Complex64> = Vec::new();
    for a in first.windows(2) {
        for b in second.windows(2) {
            if let Some(x) = proper_crossing(a[0], a[1], b[0], b[1]) {
                raw.push(x);
            }
        }
    }
    for &p in [first.first(), first.last()].iter().flatten() {
        for &q in [second.first(), second.last()].iter().flatten() {
            if (p - q).norm() <= 1e-9 {
                raw.push(*p);
            }
        }
    }
    let scale = first
        .iter()
        .chain(second.iter())
        .map(|x| x.norm())
        .fold(0.0f64, f64::max)
        .max(1.0);
    let tol = 1e-6 * scale;
    let mut clusters: Vec<Complex64> = Vec::new();
    for x in raw {
        if !clusters.iter().any(|c| (c - x).norm() <= tol) {
            clusters.push(x);
        }
    }
    clusters.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .expect("finite coordinates")
    });
    clusters
}

fn classify_alpha(n: usize, d: f64, z: f64, alpha: Complex64) -> (FiberKind, usize) {
    let u = Complex64::from((n as f64 + 1.0) * d);
    let c2 = -u - 2.0 * alpha;
    let c1 = -Complex64::from(z) - 2.0 * u * alpha - 4.0 * alpha * alpha;
    let scale = u.norm().max(1.0);
    let kind = classify_fiber(c1, c2, 1e-7 * scale);
    let dim = kind.expected_dim(n);
    (kind, dim)
}

/// Intersection points of the trefoil arcs together with the fiber type of
/// the family over each: the shared endpoint carries a point fiber, the
/// interior crossing a sphere of dimension 2n−3.
pub fn trefoil_intersection_report(
    n: usize,
    d: f64,
    z: f64,
) -> Result<Vec<PathIntersection>, TransportError> {
    let paths = trefoil_paths(n, d, z)?;
    let points = intersection_points(&paths.delta_one, &paths.delta_three);
    Ok(points
        .into_iter()
        .map(|x| {
            let (kind, expected_dim) = classify_alpha(n, d, z, x);
            PathIntersection {
                location: x,
                kind,
                expected_dim,
            }
        })
        .collect())
}

/// Samples the bent arc from α₁ to α₃ that avoids the middle singular
/// parameter by bowing into the upper half-plane.  The two endpoints carry
/// the degenerate fibers (a point and a projective space); every interior
/// sample carries a sphere of dimension 2n−3, so the arc sweeps a family
/// of total real dimension 2n−2.
pub fn lambda_path_samples(
    n: usize,
    d: f64,
    z: f64,
    count: usize,
) -> Result<LambdaPathReport, TransportError> {
    if count < 3 {
        return Err(TransportError::InvalidInput(
            "need at least three samples".into(),
        ));
    }
    let (u, [alpha1, _, alpha3]) = checked_alphas(n, d, z)?;
    let samples = (0..count)
        .map(|k| {
            let s = k as f64 / (count - 1) as f64;
            let alpha = Complex64::new(
                (1.0 - s) * alpha1 + s * alpha3,
                u / 8.0 * s * (1.0 - s),
            );
            let (kind, expected_dim) = classify_alpha(n, d, z, alpha);
            PathSample {
                alpha,
                kind,
                expected_dim,
            }
        })
        .collect();
    Ok(LambdaPathReport {
        samples,
        swept_dimension: 2 * n - 2,
    })
}

/// Tracks the close eigenvalue pair of the reduced family around a circle
/// in the z-plane by nearest-match continuation and reports whether the
/// pair returns interchanged.  Loops encircling the collision value
/// z = ζ_d swap the pair; loops avoiding it do not.
pub fn monodromy_swap(
    n: usize,
    d: f64,
    center: Complex64,
    radius: f64,
    steps: usize,
) -> Result<MonodromyReport, TransportError> {
    if n < 2 || d <= 0.0 {
        return Err(TransportError::InvalidInput("need n >= 2 and d > 0".into()));
    }
    if radius <= 0.0 || steps < 16 {
        return Err(TransportError::InvalidInput(
            "need a positive radius and at least 16 steps".into(),
        ));
    }
    let u = Complex64::from((n as f64 + 1.0) * d);
    let pair_at = |zv: Complex64| -> [Complex64; 2] {
        // Roots of ζ² + uζ + z, shifted by d to give the eigenvalues.
        let disc = (u * u - 4.0 * zv).sqrt();
        let d_c = Complex64::from(d);
        [d_c + (-u - disc) / 2.0, d_c + (-u + disc) / 2.0]
    };
    let z_at = |k: usize| -> Complex64 {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / steps as f64;
        center + Complex64::from(radius) * (Complex64::i() * theta).exp()
    };
    let start = pair_at(z_at(0));
    let mut current = start;
    let mut min_gap = (start[0] - start[1]).norm();
    for k in 1..=steps {
        let fresh = pair_at(z_at(k));
        let keep = (fresh[0] - current[0]).norm() + (fresh[1] - current[1]).norm();
        let swap = (fresh[1] - current[0]).norm() + (fresh[0] - current[1]).norm();
        current = if keep <= swap {
            fresh
        } else {
            [fresh[1], fresh[0]]
        };
        min_gap = min_gap.min((current[0] - current[1]).norm());
    }
    if min_gap <= 1e-9 {
        return Err(TransportError::StepFailure {
            s: 1.0,
            reason: "the tracked pair collided along the loop".into(),
        });
    }
    let direct = (current[0] - start[0]).norm() + (current[1] - start[1]).norm();
    let crossed = (current[0] - start[1]).norm() + (current[1] - start[0]).norm();
    Ok(MonodromyReport {
        swapped: crossed < direct,
        min_pair_gap: min_gap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_two_arcs_intersect_exactly_twice() {
        for n in [2usize, 3] {
            let d = 0.4;
            let z = 0.1 * zeta_d(n, d);
            let report = trefoil_intersection_report(n, d, z).unwrap();
            assert_eq!(report.len(), 2, "n = {n}: {report:?}");
            let kinds: Vec<_> = report.iter().map(|p| p.kind).collect();
            assert!(kinds.contains(&FiberKind::Point));
            assert!(kinds.contains(&FiberKind::Sphere));
            for p in &report {
                match p.kind {
                    FiberKind::Point => assert_eq!(p.expected_dim, 0),
                    FiberKind::Sphere => assert_eq!(p.expected_dim, 2 * n - 3),
                    FiberKind::Projective => panic!("unexpected projective fiber"),
                }
            }
        }
    }

    #[test]
    fn the_twisted_arc_connects_the_outer_singular_parameters() {
        let n = 3;
        let d = 0.5;
        let z = 0.2 * zeta_d(n, d);
        let paths = trefoil_paths(n, d, z).unwrap();
        let [alpha1, alpha2, alpha3] = paths.alphas;
        assert!(alpha1 < alpha2 && alpha2 < alpha3 && alpha3 < 0.0);
        assert!((paths.delta_one[0].re - alpha1).abs() < 1e-12);
        assert!((paths.delta_one.last().unwrap().re - alpha2).abs() < 1e-12);
        assert!((paths.delta_three[0] - Complex64::from(alpha1)).norm() < 1e-12);
        assert!(
            (paths.delta_three.last().unwrap() - Complex64::from(alpha3)).norm() < 1e-9
        );
    }

    #[test]
    fn the_bent_arc_degenerates_only_at_its_endpoints() {
        let n = 3;
        let d = 0.4;
        let z = 0.15 * zeta_d(n, d);
        let report = lambda_path_samples(n, d, z, 101).unwrap();
        assert_eq!(report.samples.first().unwrap().kind, FiberKind::Point);
        assert_eq!(report.samples.last().unwrap().kind, FiberKind::Projective);
        for sample in &report.samples[1..100] {
            assert_eq!(sample.kind, FiberKind::Sphere, "at {}", sample.alpha);
        }
        assert_eq!(report.swept_dimension, 2 * n - 2);
    }

    #[test]
    fn a_loop_around_the_collision_value_swaps_the_pair() {
        for n in [2usize, 3] {
            let d = 0.3;
            let zd = Complex64::from(zeta_d(n, d));
            let around = monodromy_swap(n, d, zd, zeta_d(n, d) / 2.0, 400).unwrap();
            assert!(around.swapped, "n = {n}");
            let control =
                monodromy_swap(n, d, 2.5 * zd, zeta_d(n, d) / 2.0, 400).unwrap();
            assert!(!control.swapped, "n = {n}");
        }
    }
}
