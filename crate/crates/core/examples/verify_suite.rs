//! Runs the identity sweep over a small range and prints a summary per
//! identity, then the first few rows of the CSV report.
//!
//!     cargo run --release --example verify_suite -- 12

use std::collections::BTreeMap;

use sdlab::identities::{reports_to_csv, run_suite, SuiteConfig, SuiteRanges, Summary, Verdict};

fn main() {
    let cap = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(12);
    let cfg = SuiteConfig { ranges: SuiteRanges::capped(cap), seed: 0, ..SuiteConfig::default() };
    let reports = run_suite(&cfg);

    let mut per_id: BTreeMap<&str, (usize, usize, f64)> = BTreeMap::new();
    for r in &reports {
        let e = per_id.entry(&r.id).or_default();
        e.0 += 1;
        if r.verdict == Verdict::ExpectedDiscrepancy {
            e.1 += 1;
        }
        if r.verdict != Verdict::ExpectedDiscrepancy {
            e.2 = e.2.max(r.residual);
        }
    }
    println!("{:<26} {:>6} {:>8} {:>12}", "identity", "checks", "discrep", "max resid");
    for (id, (n, d, worst)) in &per_id {
        println!("{id:<26} {n:>6} {d:>8} {worst:>12.3e}");
    }
    let s = Summary::of(&reports);
    println!("\n{} pass, {} fail, {} expected-discrepancy", s.pass, s.fail, s.expected_discrepancy);

    println!();
    for line in reports_to_csv(&reports).lines().take(4) {
        println!("{line}");
    }
}
