// Seeded sampling run over all three cases; prints the per-case summary.

use artinian::linalg::FieldSpec;
use artinian::perazzo::{verify_full_perazzo, PerazzoParams, VerificationReport, VerifyMode};

pub fn run_example() -> artinian::Result<VerificationReport> {
    let params = PerazzoParams::new(3, 3)?;
    let report = verify_full_perazzo(&params, FieldSpec::Prime(32003), 30, 7, VerifyMode::Sample)?;
    for (tag, s) in &report.summary.per_case {
        println!("{tag}: {} samples, {} literal, {} mismatches", s.samples, s.literal, s.mismatches);
    }
    for (p, n) in &report.summary.distinct_types {
        println!("  {p} x{n}");
    }
    println!("checks {:?}  ok={}", report.checks, report.ok());
    Ok(report)
}

#[allow(dead_code)]
fn main() {
    let report = run_example().expect("verify_harness example");
    std::process::exit(if report.ok() { 0 } else { 2 });
}
