//! Exact optimum by exhaustive search over processing orders.
//!
//! For a fixed order, the earliest-start schedule built by the list
//! scheduler is componentwise minimal among feasible schedules processing in
//! that order, and weights are positive; the optimum over all schedules is
//! therefore the minimum over all `n!` orders of the list schedule. That is
//! desk-scale ground truth, not a scalable method — calls are refused above
//! a configurable job cap.

use rayon::prelude::*;

use crate::approx::{approx_solve, earliest_completions, Solution, SupplyProfile};
use crate::error::{Error, Result};
use crate::model::{Instance, Permutation, Schedule};
use crate::rational::Rational;

/// Job cap for [`exact_solve`]: 10! orders, about a minute of desk time.
pub const DEFAULT_PERMUTATION_CAP: usize = 10;

/// [`exact_solve_with_cap`] at the default cap.
pub fn exact_solve(instance: &Instance) -> Result<Solution> {
    exact_solve_with_cap(instance, DEFAULT_PERMUTATION_CAP)
}

/// Enumerates every processing order, schedules each, and returns the
/// minimum objective together with the lexicographically smallest order
/// attaining it. Deterministic regardless of how the search is partitioned
/// across threads.
pub fn exact_solve_with_cap(instance: &Instance, cap: usize) -> Result<Solution> {
    let n = instance.n();
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    let profile = SupplyProfile::new(instance);
    let required = instance.total_requirement();
    if required > *profile.total() {
        return Err(Error::Infeasible {
            required,
            available: profile.total().clone(),
        });
    }

    // Parallelize over the first job; each branch walks the remaining
    // (n-1)! suffixes in place. The reduction key (objective, order) is
    // totally ordered, so the result does not depend on enumeration order.
    let best = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut suffix: Vec<usize> = (0..n).filter(|&j| j != first).collect();
            let mut order = Vec::with_capacity(n);
            let mut best: Option<(Rational, Vec<usize>)> = None;
            loop {
                order.clear();
                order.push(first);
                order.extend_from_slice(&suffix);
                let completions = earliest_completions(instance, &profile, &order);
                let objective: Rational = order
                    .iter()
                    .map(|&j| instance.a(j) * &completions[j])
                    .sum();
                let better = match &best {
                    None => true,
                    Some((obj, ord)) => {
                        objective < *obj || (objective == *obj && order < *ord)
                    }
                };
                if better {
                    best = Some((objective, order.clone()));
                }
                if !next_permutation(&mut suffix) {
                    break;
                }
            }
            best.expect("at least one order per branch")
        })
        .reduce_with(|a, b| if b.0 < a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a })
        .expect("at least one job");

    let (objective, order) = best;
    let schedule = Schedule::new(earliest_completions(instance, &profile, &order));
    Ok(Solution {
        order: Permutation::new(order).expect("enumerated orders are bijections"),
        schedule,
        objective,
    })
}

/// Advances `items` to the next lexicographic permutation; false at the last.
fn next_permutation(items: &mut [usize]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

/// Exact heuristic-to-optimum objective ratio.
pub fn approximation_ratio(instance: &Instance) -> Result<Rational> {
    let approx = approx_solve(instance)?;
    let exact = exact_solve(instance)?;
    Ok(approx.objective / exact.objective)
}

/// Relabels jobs by increasing optimal completion time (ties by job index,
/// which cannot occur on one machine with positive processing times).
/// Returns the relabeled instance and the order used, as positions into the
/// original job list.
pub fn sort_jobs_by_optimal_completion(instance: &Instance) -> Result<(Instance, Permutation)> {
    let exact = exact_solve(instance)?;
    let mut by_completion: Vec<usize> = (0..instance.n()).collect();
    by_completion.sort_by(|&i, &j| {
        exact
            .schedule
            .completion(i)
            .cmp(exact.schedule.completion(j))
            .then(i.cmp(&j))
    });
    let order = Permutation::new(by_completion)?;
    let relabeled = instance.relabel_jobs(&order)?;
    Ok((relabeled, order))
}
