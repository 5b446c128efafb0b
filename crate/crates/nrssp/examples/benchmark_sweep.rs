//! Run a random-family ratio sweep and print the aggregate report plus the
//! first CSV rows.
//!
//!     cargo run --example benchmark_sweep

use nrssp::{run_sweep, GenConfig, SupplyMode, SweepFamily};

fn main() {
    let family = SweepFamily::Random {
        config: GenConfig {
            n_range: (2, 6),
            q_range: (1, 4),
            value_grid: 12,
            enforce_ratio_bound: false,
            supply_mode: SupplyMode::Balanced,
            seed: 1,
        },
        count: 40,
    };

    let report = run_sweep(&family).expect("valid family");

    println!(
        "instances solved: {}",
        report
            .records
            .iter()
            .filter(|e| e.as_solved().is_some())
            .count()
    );
    if let (Some(max), Some(decimal), Some(id)) = (
        &report.max_ratio,
        &report.max_ratio_decimal,
        &report.argmax_instance,
    ) {
        println!("worst ratio:      {max} (≈ {decimal}) on {id}");
    }

    println!("\nfirst CSV rows:");
    for line in report.to_csv_string().lines().take(6) {
        println!("  {line}");
    }
}
