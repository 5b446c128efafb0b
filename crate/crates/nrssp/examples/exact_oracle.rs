//! Compare the heuristic against the brute-force optimum on a small
//! instance and print the exact approximation ratio.
//!
//!     cargo run --example exact_oracle

use nrssp::{approx_solve, approximation_ratio, exact_solve, gen_random, GenConfig, SupplyMode};

fn main() {
    let config = GenConfig {
        n_range: (6, 6),
        q_range: (3, 3),
        value_grid: 10,
        enforce_ratio_bound: false,
        supply_mode: SupplyMode::Balanced,
        seed: 7,
    };
    let instance = gen_random(&config).expect("valid config");

    let approx = approx_solve(&instance).expect("balanced instances are feasible");
    println!("heuristic order    {}", approx.order);
    println!("heuristic objective {}", approx.objective);

    // 6! = 720 orders, each list-scheduled exactly.
    let exact = exact_solve(&instance).expect("within the brute-force cap");
    println!("optimal order      {}", exact.order);
    println!("optimal objective   {}", exact.objective);

    let ratio = approximation_ratio(&instance).expect("same instance");
    println!(
        "ratio               {} (≈ {})",
        ratio,
        ratio.to_decimal_string(6)
    );
    assert!(ratio < "3".parse().unwrap());
}
