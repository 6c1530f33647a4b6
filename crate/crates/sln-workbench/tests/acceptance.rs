//! Acceptance matrix runner: executes every published check, prints one
//! status line per check, and exits nonzero if any fails or overruns its
//! budget.  Run with `cargo test --test acceptance` (add `-- --quick` via
//! the ACCEPTANCE_QUICK environment variable for a reduced smoke run).

use std::time::Instant;

use sln_workbench::verify::{run_all, VerifyOptions};

fn main() {
    let quick = std::env::var("ACCEPTANCE_QUICK").is_ok();
    let options = VerifyOptions {
        quick,
        ..VerifyOptions::default()
    };
    let started = Instant::now();
    let outcomes = run_all(&options);
    let mut failures = 0usize;
    for outcome in &outcomes {
        println!("{}", outcome.line());
        if !outcome.passed {
            failures += 1;
        }
    }
    println!(
        "{} of {} checks passed in {:.1}s{}",
        outcomes.len() - failures,
        outcomes.len(),
        started.elapsed().as_secs_f64(),
        if quick { " (quick mode)" } else { "" }
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
