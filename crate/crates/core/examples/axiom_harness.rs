//! The verification suites hunt for counterexamples to the geometric
//! axioms with seeded randomness: same seed, same verdicts, down to the
//! bytes of the report. This harness runs every suite across three
//! squeeze factors, prints the tallies, and writes the line-delimited
//! record file that the `verify` subcommand would produce.

use halfplane::verify::{run_suites, SuiteConfig, SuiteKind};

fn main() -> halfplane::Result<()> {
    let report_path = std::env::temp_dir().join("halfplane-axiom-report.jsonl");
    let cfg = SuiteConfig::new(7, 200, vec![0.5, 1.0, 2.0])?
        .with_report_path(&report_path);
    println!(
        "running {} suites: seed {}, {} samples, k in {:?}\n",
        SuiteKind::ALL.len(),
        cfg.seed(),
        cfg.samples(),
        cfg.k_values()
    );

    let reports = run_suites(&SuiteKind::ALL, &cfg)?;
    let mut clean = true;
    for r in &reports {
        println!(
            "{:<10} passed={} failed={} ({} records, {:.0?})",
            r.suite_name(),
            r.passed(),
            r.failed(),
            r.records().len(),
            r.wall_time()
        );
        for bad in r.counterexamples().take(3) {
            clean = false;
            println!("  counterexample: {bad:?}");
        }
    }
    assert!(clean, "the axioms hold on this stream");

    let bytes = std::fs::metadata(&report_path).map(|md| md.len()).unwrap_or(0);
    println!("\nreport: {} ({bytes} bytes, one JSON record per check)", report_path.display());

    Ok(())
}
