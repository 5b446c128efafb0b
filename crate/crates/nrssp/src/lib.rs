//! # nrssp
//!
//! Solvers, generators, and verification tools for single-machine scheduling
//! with one non-renewable resource under the total weighted completion time
//! criterion, in the case where each job's weight equals its resource
//! requirement — `1|nr=1, a_j=w_j|Σ w_j C_j` in Graham notation.
//!
//! A machine processes `n` jobs, one at a time, without preemption. Job `j`
//! needs `p_j` time units and irreversibly draws `a_j` units of a stock
//! resource at the moment it starts. The stock is replenished by `q` fixed
//! supplies: amount `b_i` arrives at time `u_i`. A schedule is feasible when
//! no job starts before its requirement is covered by the supplies delivered
//! so far and the processing intervals do not overlap. The goal is to
//! minimize `Σ a_j C_j` over completion times `C`.
//!
//! The problem is strongly NP-hard, so the crate pairs a fast heuristic with
//! an exact reference:
//!
//! - [`approx`] — the approximation pipeline: a reverse-greedy job ordering
//!   ([`order_jobs`]) followed by earliest-start list scheduling
//!   ([`list_schedule`]). The heuristic objective is always within a factor
//!   of 3 of the optimum, and that bound is asymptotically attained.
//! - [`oracle`] — brute-force exact optimum over all processing orders
//!   ([`exact_solve`]), plus the exact [`approximation_ratio`].
//! - [`gen`] — instance sources: the adversarial 3-job family whose ratio
//!   approaches 3 ([`gen_tight`]), seeded random instances ([`gen_random`]),
//!   and supply-plan transformations used as test fixtures.
//! - [`mod@bench`] — sweep runner producing per-instance and aggregate ratio
//!   reports in CSV or JSON.
//! - [`model`] — the exact data model: instances, schedules, permutations,
//!   the feasibility predicate with violation witnesses, and order
//!   statistics.
//! - [`io`] — JSON file formats for instances and schedules.
//!
//! All quantities are arbitrary-precision [`Rational`]s; every comparison in
//! the core is exact.
//!
//! ## Quick start
//!
//! ```
//! use nrssp::{approx_solve, Instance, Job, Supply, Rational};
//!
//! let instance = Instance::new(
//!     vec![
//!         Job::new(Rational::new(1, 2), Rational::new(1, 4)),
//!         Job::new(Rational::from_integer(1), Rational::new(1, 2)),
//!     ],
//!     vec![Supply::new(Rational::zero(), Rational::new(3, 4))],
//! )
//! .unwrap();
//!
//! let solution = approx_solve(&instance).unwrap();
//! assert!(instance.check_feasibility(&solution.schedule).unwrap().feasible);
//! ```
//!
//! The `examples/` directory holds one runnable example per capability; a
//! thin `nrssp` binary exposes the same operations on files.

// Errors carry exact rational witnesses, so the Err variant is wide.
#![allow(clippy::result_large_err)]

pub mod approx;
pub mod bench;
pub mod error;
pub mod gen;
pub mod io;
pub mod model;
pub mod oracle;
pub mod rational;

pub use approx::{
    approx_solve, list_schedule, order_jobs, verify_order_class, OrderClassReport,
    OrderClassViolation, Solution,
};
pub use bench::{run_sweep, BenchEntry, BenchRecord, BenchReport, SweepFamily};
pub use error::{Error, Result};
pub use gen::{
    gen_random, gen_tight, to_just_in_time, to_sigma_supply, to_unit_processing, GenConfig,
    SupplyMode,
};
pub use model::{
    FeasibilityReport, FeasibilityViolation, Instance, Job, OrderStats, Permutation, Schedule,
    Supply,
};
pub use oracle::{
    approximation_ratio, exact_solve, exact_solve_with_cap, sort_jobs_by_optimal_completion,
    DEFAULT_PERMUTATION_CAP,
};
pub use rational::{ParseRationalError, Rational};
