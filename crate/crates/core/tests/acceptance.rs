//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;
use workbench::suites::{Bounds, SUITES};

fn main() -> ExitCode {
    let bounds = Bounds::default();
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, run)) in SUITES.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = run(&bounds);
        let secs = start.elapsed().as_secs_f64();
        let (ok, detail) = match outcome {
            Ok(r) => {
                let counts: Vec<String> = r.counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let why = r.checks.first_failure().map(|c| {
                    format!("; {} fails: {}", c.name, c.witness.clone().unwrap_or_default())
                });
                (r.passed() && secs < 60.0, format!("{}{}", counts.join(", "), why.unwrap_or_default()))
            }
            Err(e) => (false, format!("error: {e}")),
        };
        let over = if secs >= 60.0 { " (over the 60 s budget)" } else { "" };
        println!(
            "criterion {:>2} {:<22} {} in {secs:.1}s{over}: {detail}",
            i + 1,
            name,
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok {
            failed += 1;
        }
    }
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
