//! Check schedules against the three feasibility rules and print the
//! violation witnesses: negative starts, machine overlap, and the resource
//! balance at every start time.
//!
//!     cargo run --example feasibility_report

use nrssp::{Instance, Job, Rational, Schedule, Supply};

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn main() {
    let instance = Instance::new(
        vec![Job::new(r("1"), r("1")), Job::new(r("1"), r("1"))],
        vec![Supply::new(r("0"), r("1")), Supply::new(r("3"), r("1"))],
    )
    .expect("valid instance");

    let cases = [
        ("waits for the second delivery", vec![r("1"), r("4")]),
        ("second job starts too early", vec![r("1"), r("3")]),
        ("jobs overlap on the machine", vec![r("1"), r("3/2")]),
        ("first job starts before time zero", vec![r("1/2"), r("4")]),
    ];

    for (label, completions) in cases {
        let schedule = Schedule::new(completions);
        let report = instance
            .check_feasibility(&schedule)
            .expect("dimensions match");
        println!("{label}:\n{report}\n");
    }
}
