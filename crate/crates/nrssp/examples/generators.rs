//! Instance sources: seeded random generation and the supply-plan
//! transformations, each cross-checked against its closed-form optimum.
//!
//!     cargo run --example generators

use nrssp::{
    exact_solve, gen_random, to_just_in_time, to_sigma_supply, to_unit_processing, GenConfig,
    Rational, Schedule, SupplyMode,
};

fn main() {
    let config = GenConfig {
        n_range: (4, 4),
        q_range: (2, 3),
        value_grid: 8,
        enforce_ratio_bound: true,
        supply_mode: SupplyMode::Balanced,
        seed: 2024,
    };
    let instance = gen_random(&config).expect("valid config");
    println!("random instance (seed {}):", config.seed);
    for (j, job) in instance.jobs().iter().enumerate() {
        println!("  J_{}: p = {}, a = {}", j + 1, job.p, job.a);
    }
    for s in instance.supplies() {
        println!("  supply {} at t = {}", s.b, s.u);
    }

    // Back-to-back just-in-time supplies: the no-idle schedule σ(p) becomes
    // optimal.
    let sigma = to_sigma_supply(&instance);
    let mut prefix = Rational::zero();
    let back_to_back: Vec<Rational> = sigma
        .jobs()
        .iter()
        .map(|job| {
            prefix = &prefix + &job.p;
            prefix.clone()
        })
        .collect();
    let sigma_opt = exact_solve(&sigma).expect("small instance");
    assert_eq!(
        sigma_opt.objective,
        sigma
            .objective(&Schedule::new(back_to_back))
            .expect("dimensions match")
    );
    println!("\nσ-supply optimum:        {}", sigma_opt.objective);

    // Any staircase schedule becomes optimal once supplies arrive exactly at
    // its start times.
    let mut completions = Vec::new();
    let mut previous = Rational::zero();
    for j in 0..instance.n() {
        previous = &(&previous + &Rational::new(1, 2)) + instance.p(j);
        completions.push(previous.clone());
    }
    let staircase = Schedule::new(completions);
    let just_in_time = to_just_in_time(&instance, &staircase).expect("staircase by construction");
    assert_eq!(
        exact_solve(&just_in_time).expect("small instance").objective,
        just_in_time.objective(&staircase).expect("dimensions match")
    );
    println!(
        "just-in-time optimum:    {}",
        just_in_time.objective(&staircase).unwrap()
    );

    // Fully reduced form p = a: the optimum is (Q² + Σ a²)/2.
    let reduced = to_unit_processing(&instance);
    let total: Rational = instance.jobs().iter().map(|job| &job.a).sum();
    let squares: Rational = instance.jobs().iter().map(|job| &job.a * &job.a).sum();
    let closed_form = &(&(&total * &total) + &squares) / &Rational::new(2, 1);
    assert_eq!(
        exact_solve(&reduced).expect("small instance").objective,
        closed_form
    );
    println!("reduced-form optimum:    {closed_form}  (= (Q² + Σa²)/2)");
}
