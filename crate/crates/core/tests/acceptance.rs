//! Runs every acceptance criterion, printing one line per criterion, and
//! exits non-zero if any fails. Built without the libtest harness so the
//! lines show up in plain `cargo test` output.

use std::process::ExitCode;

use powmon_core::verify::{run_all, DEFAULT_SEED};

fn main() -> ExitCode {
    let report = run_all(DEFAULT_SEED);
    for c in &report.criteria {
        println!("{c}");
    }
    let failed: Vec<u32> = report.criteria.iter().filter(|c| !c.passed).map(|c| c.id).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", report.criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
