//! Walks through the block companion slice: the distinguished nilpotent and
//! its standard triple, eigenvalue clusters of an assembled element, the
//! quotient map back to a thin/thick configuration, and the numerical
//! transversality certificate for the slice.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sln_workbench::slice_geometry::{
    assemble, chi_pi, git_map, nilpotent_data, random_complex_vector, sample_fiber,
    slice_transversality_check, spectral_clusters, BipartiteConfig, SliceElement,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // The distinguished nilpotent and its standard triple.
    let (m, n) = (3usize, 2usize);
    let (nplus, h, nminus) = nilpotent_data(m, n);
    let r1 = ((&h * &nplus - &nplus * &h) - &nplus * Complex64::from(2.0)).norm();
    let r2 = ((&nplus * &nminus - &nminus * &nplus) - &h).norm();
    println!("standard triple at (m, n) = ({m}, {n}):");
    println!("  [H, N+] - 2N+ residual = {r1:.2e}");
    println!("  [N+, N-] - H  residual = {r2:.2e}");
    let base = assemble(&SliceElement::zero(m, n));
    println!(
        "  zero slice element assembles to N+: gap = {:.2e}",
        (&base - &nplus).norm()
    );
    println!();

    // A point of a regular fiber and its eigenvalue clusters.
    let tau = BipartiteConfig::new(
        3,
        vec![Complex64::new(1.0, 0.0), Complex64::new(-0.3, 0.4)],
        vec![Complex64::new(-0.5, 0.0), Complex64::new(0.2, -0.6)],
    )?;
    let y = sample_fiber(2, 3, &tau, 11)?;
    println!("sampled element over a regular (m, n) = (2, 3) configuration:");
    println!("  center                    alg  geom");
    for c in spectral_clusters(&y, 1e-6)? {
        println!(
            "  {:>10.5} {:+10.5}i   {}    {}",
            c.center.re, c.center.im, c.algebraic, c.geometric
        );
    }
    let recovered = chi_pi(&y, 1e-6)?;
    println!(
        "  quotient map returns the configuration: distance = {:.2e}",
        recovered.distance(&tau)?
    );
    println!();

    // The rank-one construction of single-block elements: a pair of vectors
    // maps to the trace-free matrix v wᵀ − ((v·w)/n)·I, whose spectrum is
    // one thin value (n−1)(v·w)/n and one thick value −(v·w)/n.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let v = random_complex_vector(&mut rng, 3, 1.0);
    let w = random_complex_vector(&mut rng, 3, 1.0);
    let dot: Complex64 = v.iter().zip(w.iter()).map(|(a, b)| a * b).sum();
    let f = git_map(&v, &w);
    let single = SliceElement::new(3, vec![f])?;
    let config = chi_pi(&single, 1e-6)?;
    println!("rank-one element from a vector pair with v·w = {dot:.5}:");
    println!("  predicted thin  {:.5}", dot * 2.0 / 3.0);
    println!("  measured  thin  {:.5}", config.thin()[0]);
    println!("  predicted thick {:.5}", -dot / 3.0);
    println!("  measured  thick {:.5}", config.thick()[0]);
    println!();

    // Transversality of the slice against the conjugation orbit.
    println!("slice-meets-orbit certificates:");
    println!("  m  n  ambient  orbit  slice  min angle  probe cos  transverse");
    for (m, n) in [(2usize, 2usize), (2, 3), (3, 2)] {
        let report = slice_transversality_check(m, n, 25, 7)?;
        println!(
            "  {}  {}  {:>7}  {:>5}  {:>5}  {:>9.4}  {:>9.2e}  {}",
            report.m,
            report.n,
            report.ambient_dim,
            report.orbit_dim,
            report.slice_dim,
            report.min_principal_angle,
            report.probe_max_cos,
            report.is_transverse()
        );
        assert!(report.is_transverse());
    }
    Ok(())
}
