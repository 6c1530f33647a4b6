//! The planar trefoil picture inside the reduced parameter plane: two arcs
//! whose crossings carry the fibers of the local model, the bent arc that
//! sweeps out the generic fiber family, and a measured fiber dimension at
//! the interior crossing.

use sln_workbench::slice_geometry::{c1_c2, zeta_d};
use sln_workbench::transport_engine::{
    lambda_path_samples, moment_fiber, trefoil_intersection_report, trefoil_paths, FiberKind,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (n, d) = (3usize, 0.4f64);
    let z = 0.1 * zeta_d(n, d);
    println!("reduced family at n = {n}, d = {d}, z = {z:.4}");

    let paths = trefoil_paths(n, d, z)?;
    let [a1, a2, a3] = paths.alphas;
    println!("  singular parameters: {a1:.4} < {a2:.4} < {a3:.4}");
    println!("  twist annulus center: {:.4}", paths.twist_center);
    println!(
        "  straight arc: {} points, twisted arc: {} points",
        paths.delta_one.len(),
        paths.delta_three.len()
    );
    println!();

    // The two arcs cross exactly twice: at their shared endpoint (a point
    // fiber) and once in the interior (a sphere fiber).
    let crossings = trefoil_intersection_report(n, d, z)?;
    println!("arc crossings:");
    for c in &crossings {
        println!(
            "  {:+.4} {:+.4}i   {:?} fiber, dimension {}",
            c.location.re, c.location.im, c.kind, c.expected_dim
        );
    }
    assert_eq!(crossings.len(), 2);
    let mut kinds: Vec<FiberKind> = crossings.iter().map(|c| c.kind).collect();
    kinds.sort_by_key(|k| k.expected_dim(n));
    assert_eq!(kinds, [FiberKind::Point, FiberKind::Sphere]);
    println!();

    // Measure the fiber dimension at the interior crossing by rank-probing
    // the constraint Jacobian at a random fiber sample.
    let interior = crossings
        .iter()
        .find(|c| c.kind == FiberKind::Sphere)
        .expect("one interior crossing");
    let (c1, c2) = c1_c2(n, interior.location, d, z.into());
    let fiber = moment_fiber(n, c1, c2, 31)?;
    println!(
        "interior crossing fiber: {:?}, expected dimension {}, measured {}",
        fiber.kind, fiber.expected_dim, fiber.measured_dim
    );
    assert_eq!(fiber.measured_dim, fiber.expected_dim);
    assert_eq!(fiber.expected_dim, 2 * n - 3);
    println!();

    // The bent arc from the smallest to the largest singular parameter
    // degenerates only at its two endpoints; the interior fibers are
    // spheres sweeping a one-parameter family.
    let report = lambda_path_samples(n, d, z, 101)?;
    let first = report.samples.first().expect("at least three samples");
    let last = report.samples.last().expect("at least three samples");
    let interior_spheres = report
        .samples
        .iter()
        .skip(1)
        .take(report.samples.len() - 2)
        .filter(|s| s.kind == FiberKind::Sphere)
        .count();
    println!("bent arc with {} samples:", report.samples.len());
    println!("  start fiber {:?} (dimension {})", first.kind, first.expected_dim);
    println!("  end   fiber {:?} (dimension {})", last.kind, last.expected_dim);
    println!(
        "  interior: {interior_spheres} sphere fibers, swept dimension {}",
        report.swept_dimension
    );
    assert_eq!(first.kind, FiberKind::Point);
    assert_eq!(last.kind, FiberKind::Projective);
    assert_eq!(interior_spheres, report.samples.len() - 2);
    assert_eq!(report.swept_dimension, 2 * n - 2);
    Ok(())
}
