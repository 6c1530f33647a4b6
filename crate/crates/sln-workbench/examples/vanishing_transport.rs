//! Parallel transport over the single-block trace-free family: a radial
//! transport trace with the flat profile, the same path under a power
//! profile with Liouville rescaling, and the contraction ladder that
//! separates vanishing-cycle points from an engineered control point.

use num_complex::Complex64;
use sln_workbench::transport_engine::{
    model_point, naive_transport, non_orbit_control, rescaled_transport, vanishing_cp_samples,
    vanishing_probe, BasePath, KahlerWeights, VanishingVerdict,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Radial transport with the flat profile is exact: the diagonal model
    // point over t = 0.5 rides down to the model point over t = 0.05.
    let n = 3usize;
    let t0 = Complex64::from(0.5);
    let t1 = t0 * Complex64::from(0.1);
    let flat = KahlerWeights::standard();
    let path = BasePath::line(t0, t1, 2)?;
    let outcome = naive_transport(&model_point(n, t0), &path, &flat, 200)?;
    assert!(outcome.completed());
    println!("radial transport, n = {n}, flat profile, 200 steps:");
    println!("  s      Re t    state norm  residual");
    for sample in outcome.trace.iter().step_by(50) {
        println!(
            "  {:.2}   {:.3}   {:>9.5}   {:.1e}",
            sample.s, sample.t.re, sample.state_norm, sample.residual
        );
    }
    let gap = (&outcome.final_state - model_point(n, t1)).norm();
    println!("  deviation from the model point over t = {:.2}: {gap:.1e}", t1.re);
    assert!(gap < 1e-6);
    println!();

    // The same path under an admissible power profile, starting from a
    // fiber point pushed off the diagonal family.  Rescaling subtracts the
    // vertical part of the potential gradient during the run and realigns
    // the fiber scale at the end.
    let power = KahlerWeights::power(1, 2.5)?;
    let off_diagonal = non_orbit_control(n, t0, 0.3)?;
    let plain = naive_transport(&off_diagonal, &path, &power, 120)?;
    let rescaled = rescaled_transport(&off_diagonal, &path, &power, 1.0, 120)?;
    println!("power profile (exponent 2.5) on the same path, off-diagonal start:");
    println!(
        "  plain    : status {:?}, final norm {:.5}",
        plain.status,
        plain.final_state.norm()
    );
    println!(
        "  rescaled : status {:?}, final norm {:.5}",
        rescaled.status,
        rescaled.final_state.norm()
    );
    println!();

    // The contraction ladder: a point of the unitary sweep of the model
    // point collapses onto the cone point as t -> 0; a fiber point pushed
    // off that sweep by a norm margin does not.
    let n = 2usize;
    let t = Complex64::from(0.5);
    let cycle = vanishing_cp_samples(n, t, &flat, 1, 21)?.remove(0);
    let report = vanishing_probe(&cycle, t, &flat, 300)?;
    println!("contraction ladder for a cycle point (n = {n}, t = {:.1}):", t.re);
    println!("  threshold  remaining  initial    final      contracted");
    for rung in &report.rungs {
        println!(
            "  {:.0e}       {:.0e}      {:.5}    {:.6}   {:?}",
            rung.threshold,
            rung.remaining,
            rung.initial_norm,
            rung.final_norm.unwrap_or(f64::NAN),
            rung.contracted
        );
    }
    println!("  verdict: {:?}", report.verdict);
    assert_eq!(report.verdict, VanishingVerdict::Vanishing);

    let control = non_orbit_control(n, t, 0.1)?;
    let control_report = vanishing_probe(&control, t, &flat, 300)?;
    println!(
        "control point with norm margin 0.1: verdict {:?}",
        control_report.verdict
    );
    assert_eq!(control_report.verdict, VanishingVerdict::NonVanishing);
    Ok(())
}
