//! A full verification sweep: golden fixtures once, then equinumerosity,
//! round trips, and structural identities per cell, in a worker pool.
//!
//! Run with: cargo run --release --example verification_sweep

use std::time::Duration;

use corelab::harness::{report_csv, report_text, run_sweep, Suite, SweepConfig};

fn main() {
    let cfg = SweepConfig {
        s_range: (2, 8),
        k_range: (1, 4),
        budget: Duration::from_secs(60),
        suites: vec![
            Suite::Golden,
            Suite::Equinumerosity,
            Suite::Roundtrip,
            Suite::Structure,
        ],
        workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let report = run_sweep(&cfg);
    print!("{}", report_text(&report));
    println!("\ncount table:\n{}", report_csv(&report));
    println!("all pass: {}", report.all_pass());
    std::process::exit(if report.all_pass() { 0 } else { 1 });
}
