//! Extended-ideal pipeline against the baseline decomposition on seeded random data.
//!
//! `cargo run --release --example benchmark`

use minset::cli::bench::{run_bench, BenchConfig};
use minset::decompose::BASELINE_CAP;

fn main() -> minset::Result<()> {
    println!("{:>3} {:>4} {:>14} {:>14} {:>8}", "n", "|V|", "extended ns", "baseline ns", "refused");
    for (n, vsize) in [(4, 6), (6, 10), (8, 16), (10, 24)] {
        let cfg = BenchConfig { n, q: 2, vsize, trials: 50, seed: 42, baseline_cap: BASELINE_CAP };
        let report = run_bench(cfg)?;
        assert!(report.all_agree);
        let t = report.timing.expect("timed run");
        let base = t.median_baseline_ns.map_or("-".to_string(), |b| b.to_string());
        println!("{n:>3} {vsize:>4} {:>14} {base:>14} {:>8}", t.median_extended_ns, report.baseline_refused);
    }
    Ok(())
}
