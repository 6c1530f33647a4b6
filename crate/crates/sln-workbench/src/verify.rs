//! The acceptance matrix: one check per published guarantee of the
//! workbench, each returning a pass/fail outcome with a one-line summary
//! and its elapsed time.  The heavy fuzz checks carry runtime budgets.

use std::time::{Duration, Instant};

use braid_core::{random_braid_with, BraidWord};
use homology_assembly::{check_conjecture_euler, kr_trefoil, LinkExample};
use num_complex::Complex64;
use partition_comb::{
    breakings, catalan, check_schensted, lis_count, spaltenstein_dim, Partition,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skein_poly::{check_skein, kauffman_oracle, sl_n_polynomial, unknot_value};
use slice_geometry::{
    assemble, chi_pi, sample_fiber, BipartiteConfig, CMatrix, DEFAULT_CLUSTER_TOL,
};
use transport_engine::{
    gradient_bound_scan, model_point, moment_fiber, naive_transport, non_orbit_control,
    trefoil_intersection_report, vanishing_probe, BasePath, FiberKind, KahlerWeights,
    VanishingVerdict,
};

/// Result of one acceptance check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl CheckOutcome {
    fn finish(
        name: &'static str,
        started: Instant,
        budget: Option<Duration>,
        result: Result<String, String>,
    ) -> CheckOutcome {
        let elapsed = started.elapsed();
        let (mut passed, details) = match result {
            Ok(details) => (true, details),
            Err(details) => (false, details),
        };
        if let Some(limit) = budget {
            if elapsed > limit {
                passed = false;
            }
        }
        CheckOutcome {
            name,
            passed,
            details,
            elapsed,
            budget,
        }
    }

    pub fn within_budget(&self) -> bool {
        self.budget.map_or(true, |limit| self.elapsed <= limit)
    }

    /// One printable status line.
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let budget = match self.budget {
            Some(limit) => format!(", budget {:.0}s", limit.as_secs_f64()),
            None => String::new(),
        };
        format!(
            "{status}  {:<22} {} ({:.2}s{budget})",
            self.name,
            self.details,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Scaling knobs for the whole matrix.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Reduce fuzz-trial counts for a fast smoke run.
    pub quick: bool,
    /// Root of every random stream in the matrix.
    pub seed: u64,
    /// Overrides the fuzz-trial counts of the braid suites.
    pub trials: Option<usize>,
    /// Overrides the sample count of the gradient-bound scan.
    pub samples: Option<usize>,
    /// Restricts the rank sweep of the Euler-characteristic bridge.
    pub n_values: Option<Vec<usize>>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            quick: false,
            seed: 2024,
            trials: None,
            samples: None,
            n_values: None,
        }
    }
}

impl VerifyOptions {
    fn scaled(&self, full: usize, quick: usize) -> usize {
        if self.quick {
            quick
        } else {
            full
        }
    }

    fn fuzz_trials(&self, full: usize, quick: usize) -> usize {
        self.trials.unwrap_or_else(|| self.scaled(full, quick))
    }
}

/// Crossing-resolution identity on fuzzed (braid, site) pairs; exact.
pub fn skein_identity(options: &VerifyOptions) -> CheckOutcome {
    let started = Instant::now();
    let trials = options.fuzz_trials(200, 40);
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed ^ 0x01);
    let mut checked = 0usize;
    let result = (|| {
        for i in 0..trials {
            let n = [1usize, 2, 3][i % 3];
            let m = rng.gen_range(2..=4usize);
            let len = rng.gen_range(1..=8usize);
            let braid = random_braid_with(&mut rng, m, len).map_err(|e| e.to_string())?;
            let site = rng.gen_range(0..braid.len());
            if !check_skein(&braid, site, n) {
                return Err(format!(
                    "relation failed at site {site} of {braid:?} with n = {n}"
                ));
            }
            checked += 1;
        }
        Ok(format!("{checked}/{trials} fuzzed (braid, site) pairs exact"))
    })();
    CheckOutcome::finish(
        "skein-identity",
        started,
        Some(Duration::from_secs(60)),
        result,
    )
}

/// Invariance of the polynomial under random conjugation/stabilization
/// sequences; exact.
pub fn markov_invariance(options: &VerifyOptions) -> CheckOutcome {
    let started = Instant::now();
    let trials = options.fuzz_trials(100, 20);
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed ^ 0x02);
    let result = (|| {
        for i in 0..trials {
            let n = [2usize, 3][i % 2];
            let m = rng.gen_range(2..=4usize);
            let len = rng.gen_range(0..=6usize);
            let base = random_braid_with(&mut rng, m, len).map_err(|e| e.to_string())?;
            let reference = sl_n_polynomial(&base, n);
            let mut moved = base.clone();
            let moves = rng.gen_range(1..=4usize);
            for _ in 0..moves {
                moved = if rng.gen_bool(0.5) && moved.strands() > 1 {
                    let k = rng.gen_range(1..moved.strands());
                    moved.markov_conjugate(k).map_err(|e| e.to_string())?
                } else {
                    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                    moved.markov_stabilize(sign)
                };
            }
            if sl_n_polynomial(&moved, n) != reference {
                return Err(format!(
                    "polynomial changed after {moves} moves from {base:?} (n = {n})"
                ));
            }
        }
        Ok(format!("{trials} braids with move sequences of length <= 4"))
    })();
    CheckOutcome::finish(
        "markov-invariance",
        started,
        Some(Duration::from_secs(120)),
        result,
    )
}

/// Trivial braids give powers of the unknot value; exact.
pub fn unknot_values(_options: &VerifyOptions) -> CheckOutcome {
    let started = Instant::now();
    let result = (|| {
        for n in 1..=4usize {
            let single = unknot_value(n);
            for m in 1..=3usize {
                let braid = BraidWord::identity(m).map_err(|e| e.to_string())?;
                let got = sl_n_polynomial(&braid, n);
                let expected = single.pow(m as u32);
                if got != expected {
                    return Err(format!("trivial braid on {m} strands at n = {n}: {got}"));
                }
            }
        }
        Ok("12 (n, m) pairs of trivial closures exact".to_string())
    })();
    CheckOutcome::finish("unknot-values", started, None, result)
}

/// The n = 2 specialization against an independent state-sum oracle; exact.
pub fn kauffman_agreement(options: &VerifyOptions) -> CheckOutcome {
    let started = Instant::now();
    let trials = options.fuzz_trials(50, 15);
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed ^ 0x04);
    let result = (|| {
        for _ in 0..trials {
            let m = rng.gen_range(2..=4usize);
            let len = rng.gen_range(1..=8usize);
            let braid = random_braid_with(&mut rng, m, len).map_err(|e| e.to_string())?;
            let engine = sl_n_polynomial(&braid, 2);
            let oracle = kauffman_oracle(&braid).map_err(|e| e.to_string())?;
            if engine != oracle {
                return Err(format!("oracle mismatch on {braid:?}"));
            }
        }
        Ok(format!("{trials} fuzzed braids agree with the state-sum oracle"))
    })();
    CheckOutcome::finish("kauffman-oracle", started, None, result)
}

/// Tableau count equals the increasing-subsequence count; the two-letter
/// column is the Catalan sequence; exact.
pub fn schensted_identity(_options: &VerifyOptions) -> CheckOutcome {
    let started = Instant::now();
    let result = (|| {
        for m in 1..=6usize {
            for n in 1..=4u64 {
                match check_schensted(m, n) {
                    Ok(true) => {}
                    Ok(false) => return Err(format!("identity fails at m = {m}, n = {n}")),
                    Err(e) => return Err(format!("m = {m}, n = {n}: {e}")),
                }
            }
        }
        let expected = [1u64, 2, 5, 14, 42, 132];
        for (m, &want) in (1..=6usize).zip(expected.iter()) {
            let got = lis_count(m, 2).map_err(|e| e.to_string())?;
            if got != want || got != catalan(m as u64) {
                return Err(format!("two-letter count at m = {m}: {got}"));
            }
        }
        Ok("24 identity cases plus the Catalan column exact".to_string())
    })();
    CheckOutcome::finish("schensted-identity", started, None, result)
}

fn repeat_parts(groups: &[(u64, usize)]) -> Partition {
    Partition::new(
        groups
            .iter()
            .flat_map(|&(value, count)| std::iter::repeat(value).take(count)),
    )
}

fn breaking_count(pi: &Partition, sigma: &Partition) -> Result<usize, String> {
    Ok(breakings(pi, sigma).map_err(|e| e.to_string())?.len())
}

/// The five named breaking families have the pinned counts 2, 1, m, 1, 1
/// across their parameter sweeps; exact.
pub fn breaking_families(_options: &VerifyOptions) -> CheckOutcome {
    let started = Instant::now();
    let result = (|| {
        let mut cases = 0usize;
        // Family 1: fixed small instance.
        if breaking_count(
            &repeat_parts(&[(2, 1), (1, 2)]),
            &Partition::rectangle(2, 2),
        )? != 2
        {
            return Err("family 1 count is not 2".into());
        }
        cases += 1;
        for m in 2..=4usize {
            // Families 2 and 3: any n >= 3.
            for n in 3..=5u64 {
                let pi = repeat_parts(&[(1, m), (n - 1, m)]);
                let sigma = repeat_parts(&[(1, m - 1), (n - 1, m - 1), (n, 1)]);
                if breaking_count(&pi, &sigma)? != 1 {
                    return Err(format!("family 2 not unique at m = {m}, n = {n}"));
                }
                let pi3 = repeat_parts(&[(1, m + n as usize - 1), (n - 1, m - 1)]);
                if breaking_count(&pi3, &sigma)? != m {
                    return Err(format!("family 3 count is not m at m = {m}, n = {n}"));
                }
                cases += 2;
            }
            // Families 4 and 5: need n > 3.
            for n in 4..=5u64 {
                let pi = repeat_parts(&[(1, m), (n - 1, m)]);
                let sigma4 = repeat_parts(&[(1, m - 2), (2, 1), (n - 1, m)]);
                if breaking_count(&pi, &sigma4)? != 1 {
                    return Err(format!("family 4 not unique at m = {m}, n = {n}"));
                }
                let sigma5 = repeat_parts(&[(1, m - 2), (n - 1, m - 1), (n + 1, 1)]);
                if breaking_count(&pi, &sigma5)? != 1 {
                    return Err(format!("family 5 not unique at m = {m}, n = {n}"));
                }
                cases += 2;
            }
        }
        Ok(format!("{cases} family instances with pinned counts"))
    })();
    CheckOutcome::finish("breaking-families", started, None, result)
}

/// The rectangular fixed-flag variety has dimension 2m(n−1); exact.
pub fn spaltenstein_dimensions(_options: &VerifyOptions) -> CheckOutcome {
    let started = Instant::now();
    let result = (|| {
        let mut cases = 0usize;
        for m in 1..=6usize {
            for n in 2..=5u64 {
                let shape = Partition::rectangle(m, n);
                let weight = repeat_parts(&[(1, m), (n - 1, m)]);
                let dim = spaltenstein_dim(&shape, &weight).map_err(|e| e.to_string())?;
                let expected = 2 * m as i64 * (n as i64 - 1);
                if dim != expected {
                    return Err(format!(
                        "dimension {dim} instead of {expected} at m = {m}, n = {n}"
                    ));
                }
                cases += 1;
            }
        }
        Ok(format!("{cases} rectangular cases equal 2m(n-1)"))
    })();
    CheckOutcome::finish("spaltenstein-dimension", started, None, result)
}

/// Radial transport of the diagonal model family is exact to 1e−6 and the
/// engineered off-family control fails the contraction ladder.
pub fn model_transport(options: &VerifyOptions) -> CheckOutcome {
    let started = Instant::now();
    let steps = options.scaled(200, 120);
    let weights = KahlerWeights::standard();
    let result = (|| {
        let mut worst: f64 = 0.0;
        for n in [2usize, 3, 4] {
            let t0 = Complex64::from(0.5);
            let t1 = t0 * Complex64::from(0.1);
            let path = BasePath::line(t0, t1, 2).map_err(|e| e.to_string())?;
            let outcome = naive_transport(&model_point(n, t0), &path, &weights, steps)
                .map_err(|e| e.to_string())?;
            if !outcome.completed() {
                return Err(format!("transport did not complete at n = {n}"));
            }
            let deviation = (&outcome.final_state - model_point(n, t1)).norm();
            worst = worst.max(deviation);
            if deviation > 1e-6 {
                return Err(format!("deviation {deviation:.3e} at n = {n}"));
            }
            let control =
                non_orbit_control(n, t0, 0.5).map_err(|e| e.to_string())?;
            let report =
                vanishing_probe(&control, t0, &weights, steps).map_err(|e| e.to_string())?;
            if report.verdict == VanishingVerdict::Vanishing {
                return Err(format!("off-family control contracted at n = {n}"));
            }
        }
        Ok(format!(
            "n in {{2,3,4}}: worst endpoint deviation {worst:.1e}; controls kept their size"
        ))
    })();
    CheckOutcome::finish(
        "model-transport",
        started,
        Some(Duration::from_secs(120)),
        result,
    )
}

/// The empirical gradient-bound constant is positive and stable under
/// doubling the sample count.
pub fn gradient_bound(options: &VerifyOptions) -> CheckOutcome {
    let started = Instant::now();
    let base = options.samples.unwrap_or_else(|| options.scaled(1000, 250));
    let result = (|| {
        let mut summary = Vec::new();
        for n in [3usize, 4] {
            for d in [0.1f64, 0.5] {
                let short = gradient_bound_scan(n, d, 1.0, base, options.seed ^ 0x09)
                    .map_err(|e| e.to_string())?;
                let long = gradient_bound_scan(n, d, 1.0, 2 * base, options.seed ^ 0x09)
                    .map_err(|e| e.to_string())?;
                if short.nu_emp <= 0.0 || long.nu_emp <= 0.0 {
                    return Err(format!("bound not positive at n = {n}, d = {d}"));
                }
                if long.nu_emp * 2.0 < short.nu_emp {
                    return Err(format!(
                        "bound unstable under doubling at n = {n}, d = {d}: \
                         {:.3e} -> {:.3e}",
                        short.nu_emp, long.nu_emp
                    ));
                }
                summary.push(format!("({n},{d}): {:.2e}", long.nu_emp));
            }
        }
        Ok(summary.join("  "))
    })();
    CheckOutcome::finish("gradient-bound", started, None, result)
}

/// Nine-point (c₁, c₂) grid per n: classification and measured tangent
/// dimension match the chart.
pub fn moment_fibers(options: &VerifyOptions) -> CheckOutcome {
    let started = Instant::now();
    let result = (|| {
        let mut cases = 0usize;
        for n in [2usize, 3, 4] {
            for &c1 in &[0.0f64, 0.5, 1.1] {
                for &c2 in &[0.0f64, 0.7, 1.3] {
                    let fiber = moment_fiber(
                        n,
                        Complex64::from(c1),
                        Complex64::from(c2),
                        options.seed ^ 0x0a,
                    )
                    .map_err(|e| e.to_string())?;
                    let expected_kind = if c2 == 0.0 {
                        FiberKind::Point
                    } else if c1 == 0.0 {
                        FiberKind::Projective
                    } else {
                        FiberKind::Sphere
                    };
                    if fiber.kind != expected_kind {
                        return Err(format!(
                            "classification {:?} at n = {n}, c = ({c1}, {c2})",
                            fiber.kind
                        ));
                    }
                    if fiber.measured_dim != fiber.expected_dim {
                        return Err(format!(
                            "measured dimension {} vs {} at n = {n}, c = ({c1}, {c2})",
                            fiber.measured_dim, fiber.expected_dim
                        ));
                    }
                    cases += 1;
                }
            }
        }
        Ok(format!("{cases} grid cells classified and measured"))
    })();
    CheckOutcome::finish("moment-fibers", started, None, result)
}

/// The two planar arcs intersect exactly twice with fiber dimensions
/// 0 and 2n−3 over the crossings.
pub fn trefoil_geometry(_options: &VerifyOptions) -> CheckOutcome {
    let started = Instant::now();
    let result = (|| {
        for n in [2usize, 3] {
            let d = 0.4;
            let u = (n as f64 + 1.0) * d;
            let z = 0.1 * (u / 2.0) * (u / 2.0);
            let report = trefoil_intersection_report(n, d, z).map_err(|e| e.to_string())?;
            if report.len() != 2 {
                return Err(format!("{} intersections at n = {n}", report.len()));
            }
            let mut dims: Vec<usize> = report.iter().map(|p| p.expected_dim).collect();
            dims.sort_unstable();
            if dims != vec![0, 2 * n - 3] {
                return Err(format!("stratum dimensions {dims:?} at n = {n}"));
            }
        }
        Ok("two crossings with stratum dimensions (0, 2n-3) for n in {2,3}".to_string())
    })();
    CheckOutcome::finish("trefoil-geometry", started, None, result)
}

/// The assembled trefoil invariant equals its explicit degree-by-degree
/// list for 2 ≤ n ≤ 6, with the single ℤ/n in degree 3n−1; exact.
pub fn trefoil_homology(_options: &VerifyOptions) -> CheckOutcome {
    let started = Instant::now();
    let result = (|| {
        for n in 2..=6usize {
            // kr_trefoil itself cross-checks the stratum assembly against
            // the case list and errors on any disagreement.
            let g = kr_trefoil(n).map_err(|e| e.to_string())?;
            let n_i = n as i64;
            if g.summand(n_i - 1).free != 1 {
                return Err(format!("missing bottom class at n = {n}"));
            }
            for j in 0..n_i - 1 {
                if g.summand(n_i + 1 + 2 * j).free != 2 {
                    return Err(format!("rank at degree {} (n = {n})", n_i + 1 + 2 * j));
                }
                if g.summand(3 * n_i + 2 * j).free != 1 {
                    return Err(format!("rank at degree {} (n = {n})", 3 * n_i + 2 * j));
                }
            }
            if g.summand(3 * n_i - 1).torsion != vec![n as u64] {
                return Err(format!("torsion at degree {} (n = {n})", 3 * n_i - 1));
            }
        }
        Ok("case list matches the stratum assembly for 2 <= n <= 6".to_string())
    })();
    CheckOutcome::finish("trefoil-homology", started, None, result)
}

/// Euler characteristic of each assembled invariant equals the polynomial
/// at q = −1; exact integers.
pub fn euler_bridge(options: &VerifyOptions) -> CheckOutcome {
    let started = Instant::now();
    let ranks = options
        .n_values
        .clone()
        .unwrap_or_else(|| (1..=4usize).collect());
    let result = (|| {
        let examples = [
            LinkExample::Unknot,
            LinkExample::Unlink(2),
            LinkExample::Unlink(3),
            LinkExample::Trefoil,
        ];
        let mut cases = 0usize;
        for &n in &ranks {
            for example in examples {
                match check_conjecture_euler(example, n) {
                    Ok(true) => cases += 1,
                    Ok(false) => {
                        return Err(format!("bridge fails for {example:?} at n = {n}"))
                    }
                    Err(e) => return Err(format!("{example:?} at n = {n}: {e}")),
                }
            }
        }
        Ok(format!("{cases} (link, n) pairs match at q = -1"))
    })();
    CheckOutcome::finish("euler-bridge", started, None, result)
}

fn random_regular_config(m: usize, n: usize, seed: u64) -> BipartiteConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut draw =
            |_: usize| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let thin: Vec<Complex64> = (0..m).map(&mut draw).collect();
        let thick: Vec<Complex64> = (0..m).map(&mut draw).collect();
        let tau = BipartiteConfig::new(n, thin, thick).expect("valid configuration");
        if tau.is_regular(0.05) {
            return tau;
        }
    }
}

fn projection_smallest_sv(subspace: &CMatrix, n: usize) -> f64 {
    let projected = subspace.rows(0, n).into_owned();
    let singular = projected.singular_values();
    singular.iter().cloned().fold(f64::INFINITY, f64::min)
}

fn kernel_basis(mat: &CMatrix, dim: usize) -> CMatrix {
    let svd = mat.clone().svd(false, true);
    let vt = svd.v_t.expect("svd with right vectors");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| {
        svd.singular_values[a]
            .partial_cmp(&svd.singular_values[b])
            .unwrap()
    });
    let cols = vt.ncols();
    CMatrix::from_fn(cols, dim, |i, j| vt[(order[j], i)].conj())
}

/// The fiber sampler round-trips through the quotient map within 1e−6 and
/// every sampled eigenspace projects injectively to the leading block.
pub fn fiber_sampler(options: &VerifyOptions) -> CheckOutcome {
    let started = Instant::now();
    let seeds = options.scaled(10, 3) as u64;
    let result = (|| {
        let mut worst_dist: f64 = 0.0;
        let mut worst_sv = f64::INFINITY;
        for (m, n) in [(1usize, 3usize), (2, 2), (2, 3)] {
            for seed in 0..seeds {
                let tau = random_regular_config(m, n, 1000 * seed + 17);
                let y = sample_fiber(m, n, &tau, seed).map_err(|e| {
                    format!("(m, n) = ({m}, {n}), seed {seed}: {e}")
                })?;
                let value = chi_pi(&y, DEFAULT_CLUSTER_TOL).map_err(|e| e.to_string())?;
                let dist = value.distance(&tau).map_err(|e| e.to_string())?;
                worst_dist = worst_dist.max(dist);
                if dist > 1e-6 {
                    return Err(format!(
                        "round-trip distance {dist:.3e} at (m, n) = ({m}, {n}), seed {seed}"
                    ));
                }
                let phi = assemble(&y);
                let eye = CMatrix::identity(m * n, m * n);
                for (&eig, dim) in tau
                    .thin()
                    .iter()
                    .map(|e| (e, 1usize))
                    .chain(tau.thick().iter().map(|e| (e, n - 1)))
                {
                    let basis = kernel_basis(&(&phi - &eye * eig), dim);
                    let sv = projection_smallest_sv(&basis, n);
                    worst_sv = worst_sv.min(sv);
                    if sv <= 1e-8 {
                        return Err(format!(
                            "eigenspace projection degenerate ({sv:.3e}) at \
                             (m, n) = ({m}, {n}), seed {seed}"
                        ));
                    }
                }
            }
        }
        Ok(format!(
            "worst round-trip {worst_dist:.1e}, worst projection sv {worst_sv:.1e}"
        ))
    })();
    CheckOutcome::finish("fiber-sampler", started, None, result)
}

/// Every suite name accepted by [`run_suite`], in execution order.
pub const SUITES: &[&str] = &[
    "skein",
    "markov",
    "unknot",
    "kauffman",
    "schensted",
    "breakings",
    "spaltenstein",
    "rex",
    "gradient",
    "moment",
    "trefoil-geometry",
    "trefoil-homology",
    "conjecture-euler",
    "fiber-sampler",
];

/// Runs one named suite (or `all`), returning its outcomes.
pub fn run_suite(suite: &str, options: &VerifyOptions) -> Result<Vec<CheckOutcome>, String> {
    let single = |outcome: CheckOutcome| Ok(vec![outcome]);
    match suite {
        "all" => Ok(run_all(options)),
        "skein" => single(skein_identity(options)),
        "markov" => single(markov_invariance(options)),
        "unknot" => single(unknot_values(options)),
        "kauffman" => single(kauffman_agreement(options)),
        "schensted" => single(schensted_identity(options)),
        "breakings" => single(breaking_families(options)),
        "spaltenstein" => single(spaltenstein_dimensions(options)),
        "rex" => single(model_transport(options)),
        "gradient" => single(gradient_bound(options)),
        "moment" => single(moment_fibers(options)),
        "trefoil-geometry" => single(trefoil_geometry(options)),
        "trefoil-homology" => single(trefoil_homology(options)),
        "conjecture-euler" => single(euler_bridge(options)),
        "fiber-sampler" => single(fiber_sampler(options)),
        other => Err(format!(
            "unknown suite {other:?}; expected one of: all, {}",
            SUITES.join(", ")
        )),
    }
}

/// Runs the full acceptance matrix in order.
pub fn run_all(options: &VerifyOptions) -> Vec<CheckOutcome> {
    vec![
        skein_identity(options),
        markov_invariance(options),
        unknot_values(options),
        kauffman_agreement(options),
        schensted_identity(options),
        breaking_families(options),
        spaltenstein_dimensions(options),
        model_transport(options),
        gradient_bound(options),
        moment_fibers(options),
        trefoil_geometry(options),
        trefoil_homology(options),
        euler_bridge(options),
        fiber_sampler(options),
    ]
}
