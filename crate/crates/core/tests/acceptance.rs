//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use sbk_core::report::{Report, Verdict};
use sbk_core::suite::acceptance;

fn main() -> ExitCode {
    let seed = std::env::var("SBK_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(42);
    let start = Instant::now();
    let report = Report::new("acceptance", seed, acceptance(seed));
    for c in &report.checks {
        println!("{} {}: {}", c.verdict, c.id, c.claim);
        if c.verdict == Verdict::Fail {
            for d in &c.details {
                println!("    {d}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {} failed, {} skipped in {:.1}s (seed {seed})",
        report.summary.pass,
        report.summary.fail,
        report.summary.skipped,
        start.elapsed().as_secs_f64()
    );
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
