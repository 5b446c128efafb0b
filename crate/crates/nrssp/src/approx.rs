//! The approximation pipeline: reverse-greedy job ordering followed by
//! earliest-start list scheduling.
//!
//! The ordering pass builds the processing order back to front. At each step
//! it considers the jobs whose requirement fits inside the total requirement
//! already placed behind them (`N'`). If no job fits, the smallest
//! requirement goes last-remaining; otherwise the job with the smallest
//! requirement-to-processing ratio `r_j = a_j / p_j` does. Ties are broken
//! by the smallest job index, which makes the output deterministic.
//!
//! Every order produced this way belongs to the class `O(a, p)` checked by
//! [`verify_order_class`]:
//!
//! 1. the last job has the minimum requirement;
//! 2. a job whose requirement exceeds the total requirement behind it is
//!    preceded only by jobs with requirement at least as large;
//! 3. a job whose requirement fits behind it is preceded, among jobs that
//!    also fit, only by jobs with ratio at least as large.
//!
//! List scheduling then starts each job at the earliest time that respects
//! the previous completion and the cumulative supply. For any order in
//! `O(a, p)` the resulting objective is strictly below three times the
//! optimum.

use crate::error::{Error, Result};
use crate::model::{Instance, Permutation, Schedule};
use crate::rational::Rational;

/// An (order, schedule, objective) triple produced by a solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub order: Permutation,
    pub schedule: Schedule,
    pub objective: Rational,
}

/// Builds a processing order in `O(a, p)` by reverse greedy selection.
pub fn order_jobs(instance: &Instance) -> Permutation {
    let n = instance.n();
    let ratios: Vec<Rational> = (0..n).map(|j| instance.a(j) / instance.p(j)).collect();

    let mut order = vec![usize::MAX; n];
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut placed_requirement = Rational::zero();

    for position in (0..n).rev() {
        // Ascending scan with strict improvement keeps the smallest index on ties.
        let mut fitting: Option<usize> = None;
        let mut smallest: usize = remaining[0];
        for &j in &remaining {
            if instance.a(j) < instance.a(smallest) {
                smallest = j;
            }
            if *instance.a(j) <= placed_requirement
                && fitting.is_none_or(|best| ratios[j] < ratios[best])
            {
                fitting = Some(j);
            }
        }
        let pick = fitting.unwrap_or(smallest);
        order[position] = pick;
        placed_requirement = placed_requirement + instance.a(pick);
        remaining.retain(|&j| j != pick);
    }

    Permutation::new(order).expect("construction yields a bijection")
}

/// Cumulative supply as a searchable step function.
pub(crate) struct SupplyProfile {
    times: Vec<Rational>,
    cumulative: Vec<Rational>,
}

impl SupplyProfile {
    pub(crate) fn new(instance: &Instance) -> Self {
        let mut cumulative = Vec::with_capacity(instance.q());
        let mut total = Rational::zero();
        for s in instance.supplies() {
            total = total + &s.b;
            cumulative.push(total.clone());
        }
        SupplyProfile {
            times: instance.supplies().iter().map(|s| s.u.clone()).collect(),
            cumulative,
        }
    }

    pub(crate) fn total(&self) -> &Rational {
        self.cumulative.last().expect("at least one supply")
    }
}

/// Earliest-start completions for a fixed order, one entry per job.
///
/// Callers must have checked that the total requirement fits the total
/// supply. Prefix requirements grow along the order, so the supply cursor
/// only ever moves forward.
pub(crate) fn earliest_completions(
    instance: &Instance,
    profile: &SupplyProfile,
    order: &[usize],
) -> Vec<Rational> {
    let mut completions = vec![Rational::zero(); instance.n()];
    let mut prefix_requirement = Rational::zero();
    let mut cursor = 0usize;
    let mut previous = Rational::zero();

    for (position, &job) in order.iter().enumerate() {
        prefix_requirement = prefix_requirement + instance.a(job);
        while profile.cumulative[cursor] < prefix_requirement {
            cursor += 1;
        }
        let covered_at = &profile.times[cursor];
        let start = if position == 0 || *covered_at > previous {
            covered_at.clone()
        } else {
            previous.clone()
        };
        let completion = &start + instance.p(job);
        previous = completion.clone();
        completions[job] = completion;
    }
    completions
}

/// Schedules the jobs in the given order, each at the earliest feasible
/// start: no earlier than the previous completion and no earlier than the
/// first time the cumulative supply covers the prefix requirement.
///
/// Accepts arbitrary permutations, not only members of `O(a, p)`; the output
/// always passes the feasibility check. Fails when the total requirement
/// exceeds the total supply.
pub fn list_schedule(instance: &Instance, order: &Permutation) -> Result<Schedule> {
    order.check_for(instance)?;
    let profile = SupplyProfile::new(instance);
    let required = instance.total_requirement();
    if required > *profile.total() {
        return Err(Error::Infeasible {
            required,
            available: profile.total().clone(),
        });
    }
    Ok(Schedule::new(earliest_completions(
        instance,
        &profile,
        order.as_slice(),
    )))
}

/// Runs the whole pipeline: order, schedule, objective.
pub fn approx_solve(instance: &Instance) -> Result<Solution> {
    let order = order_jobs(instance);
    let schedule = list_schedule(instance, &order)?;
    let objective = instance.objective(&schedule)?;
    Ok(Solution {
        order,
        schedule,
        objective,
    })
}

/// One broken membership condition of the order class `O(a, p)`.
///
/// Positions are zero-based in the data and rendered one-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderClassViolation {
    /// Condition (i): the last job's requirement is not the minimum.
    LastNotMinimum {
        last_job: usize,
        last_requirement: Rational,
        min_requirement: Rational,
    },
    /// Condition (ii): a job bigger than its tail is preceded by a smaller one.
    LargeJobPrecedence {
        position_j: usize,
        position_i: usize,
        requirement_j: Rational,
        requirement_i: Rational,
    },
    /// Condition (iii): a job fitting its tail is preceded by a fitting job
    /// of strictly smaller ratio.
    RatioPrecedence {
        position_j: usize,
        position_i: usize,
        ratio_j: Rational,
        ratio_i: Rational,
    },
}

impl OrderClassViolation {
    /// Which membership condition is broken: `"i"`, `"ii"`, or `"iii"`.
    pub fn condition(&self) -> &'static str {
        match self {
            OrderClassViolation::LastNotMinimum { .. } => "i",
            OrderClassViolation::LargeJobPrecedence { .. } => "ii",
            OrderClassViolation::RatioPrecedence { .. } => "iii",
        }
    }
}

impl std::fmt::Display for OrderClassViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OrderClassViolation::LastNotMinimum {
                last_job,
                last_requirement,
                min_requirement,
            } => write!(
                f,
                "condition i: job {} is last with requirement {}, but the minimum is {}",
                last_job + 1,
                last_requirement,
                min_requirement
            ),
            OrderClassViolation::LargeJobPrecedence {
                position_j,
                position_i,
                requirement_j,
                requirement_i,
            } => write!(
                f,
                "condition ii: position {} holds requirement {} exceeding its tail, \
                 but position {} holds only {}",
                position_j + 1,
                requirement_j,
                position_i + 1,
                requirement_i
            ),
            OrderClassViolation::RatioPrecedence {
                position_j,
                position_i,
                ratio_j,
                ratio_i,
            } => write!(
                f,
                "condition iii: position {} has ratio {} but earlier fitting position {} \
                 has smaller ratio {}",
                position_j + 1,
                ratio_j,
                position_i + 1,
                ratio_i
            ),
        }
    }
}

/// Verdict of [`verify_order_class`] with every violation found, in scan
/// order (condition (i) first, then positions left to right).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderClassReport {
    pub member: bool,
    pub violations: Vec<OrderClassViolation>,
}

impl std::fmt::Display for OrderClassReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.member {
            write!(f, "in O(a,p): true")
        } else {
            write!(
                f,
                "in O(a,p): false (condition {})",
                self.violations[0].condition()
            )?;
            for v in &self.violations {
                write!(f, "\n  {v}")?;
            }
            Ok(())
        }
    }
}

/// Checks membership of an order in the class `O(a, p)`.
pub fn verify_order_class(instance: &Instance, order: &Permutation) -> Result<OrderClassReport> {
    order.check_for(instance)?;
    let n = instance.n();
    let ratios: Vec<Rational> = (0..n).map(|j| instance.a(j) / instance.p(j)).collect();
    let a_at = |position: usize| instance.a(order.job_at(position));

    let mut violations = Vec::new();

    let min_requirement = (0..n)
        .map(|j| instance.a(j).clone())
        .min()
        .expect("at least one job");
    if *a_at(n - 1) != min_requirement {
        violations.push(OrderClassViolation::LastNotMinimum {
            last_job: order.job_at(n - 1),
            last_requirement: a_at(n - 1).clone(),
            min_requirement,
        });
    }

    // Tail sums over positions: tail[j] = sum of requirements after position j.
    let mut tail = vec![Rational::zero(); n + 1];
    for j in (0..n).rev() {
        tail[j] = &tail[j + 1] + a_at(j);
    }

    for j in 0..n.saturating_sub(1) {
        if *a_at(j) > tail[j + 1] {
            for i in 0..j {
                if a_at(i) < a_at(j) {
                    violations.push(OrderClassViolation::LargeJobPrecedence {
                        position_j: j,
                        position_i: i,
                        requirement_j: a_at(j).clone(),
                        requirement_i: a_at(i).clone(),
                    });
                }
            }
        } else {
            for i in 0..j {
                if *a_at(i) <= tail[j + 1] && ratios[order.job_at(i)] < ratios[order.job_at(j)] {
                    violations.push(OrderClassViolation::RatioPrecedence {
                        position_j: j,
                        position_i: i,
                        ratio_j: ratios[order.job_at(j)].clone(),
                        ratio_i: ratios[order.job_at(i)].clone(),
                    });
                }
            }
        }
    }

    Ok(OrderClassReport {
        member: violations.is_empty(),
        violations,
    })
}
