//! Build an instance in code and run the approximation pipeline on it:
//! greedy ordering, list scheduling, objective.
//!
//!     cargo run --example quickstart

use nrssp::{approx_solve, Instance, Job, Rational, Supply};

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn main() {
    // Four jobs drawing on a stock that is replenished three times.
    let instance = Instance::new(
        vec![
            Job::new(r("3"), r("2")),
            Job::new(r("1"), r("1/2")),
            Job::new(r("2"), r("3/2")),
            Job::new(r("1/2"), r("1/2")),
        ],
        vec![
            Supply::new(r("0"), r("2")),
            Supply::new(r("2"), r("3/2")),
            Supply::new(r("5"), r("1")),
        ],
    )
    .expect("valid instance");

    let solution = approx_solve(&instance).expect("enough supply overall");

    println!("processing order: {}", solution.order);
    println!("job  start  completion");
    for position in 0..instance.n() {
        let job = solution.order.job_at(position);
        println!(
            "J_{}  {:>6}  {:>6}",
            job + 1,
            solution.schedule.start(&instance, job).to_string(),
            solution.schedule.completion(job).to_string(),
        );
    }
    println!("objective Σ a_j C_j = {}", solution.objective);

    let report = instance
        .check_feasibility(&solution.schedule)
        .expect("dimensions match");
    println!("{report}");
}
