//! Walk the adversarial 3-job family toward its worst case: as e shrinks,
//! the heuristic-to-optimum ratio climbs toward 3 without ever reaching it.
//!
//!     cargo run --example tight_family

use nrssp::{approximation_ratio, gen_tight, order_jobs, Rational};

fn main() {
    println!("{:>10}  {:>24}  {:>14}", "e", "exact ratio", "decimal");
    for denominator in [11u32, 20, 50, 100, 1000, 10000, 100000] {
        let e = Rational::new(1, denominator as i64);
        let instance = gen_tight(&e).expect("e in (0, 1/10)");
        assert_eq!(order_jobs(&instance).one_based(), vec![3, 2, 1]);
        let ratio = approximation_ratio(&instance).expect("feasible by construction");
        println!(
            "{:>10}  {:>24}  {:>14}",
            e.to_string(),
            ratio.to_string(),
            ratio.to_decimal_string(10)
        );
    }
    println!("\nthe supremum 3 is approached but never attained");
}
