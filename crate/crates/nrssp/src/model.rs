//! Exact data model: instances, schedules, permutations, the feasibility
//! predicate, and the order statistics used by the tail-sum inequalities.
//!
//! Indexing convention: jobs and supplies are stored zero-based throughout
//! the crate. File formats and diagnostic messages are one-based, matching
//! the usual `J_1 … J_n` naming; conversion happens only at those edges.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// One job: processing time `p` and resource requirement `a`.
///
/// The requirement doubles as the job's objective weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Job {
    pub p: Rational,
    pub a: Rational,
}

impl Job {
    pub fn new(p: Rational, a: Rational) -> Self {
        Job { p, a }
    }
}

/// One supply: amount `b` arrives at time `u`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Supply {
    pub u: Rational,
    pub b: Rational,
}

impl Supply {
    pub fn new(u: Rational, b: Rational) -> Self {
        Supply { u, b }
    }
}

/// A problem instance: `n` jobs and a supply plan of `q` deliveries.
///
/// Invariants, checked at construction:
/// - at least one job and one supply,
/// - `p_j > 0`, `a_j > 0`, `b_i > 0`,
/// - `u_1 >= 0` and supply times strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    jobs: Vec<Job>,
    supplies: Vec<Supply>,
}

impl Instance {
    pub fn new(jobs: Vec<Job>, supplies: Vec<Supply>) -> Result<Self> {
        if jobs.is_empty() {
            return Err(Error::InvalidInstance("no jobs".into()));
        }
        if supplies.is_empty() {
            return Err(Error::InvalidInstance("no supplies".into()));
        }
        for (j, job) in jobs.iter().enumerate() {
            if !job.p.is_positive() {
                return Err(Error::InvalidInstance(format!(
                    "processing time of job {} is {}, must be positive",
                    j + 1,
                    job.p
                )));
            }
            if !job.a.is_positive() {
                return Err(Error::InvalidInstance(format!(
                    "resource requirement of job {} is {}, must be positive",
                    j + 1,
                    job.a
                )));
            }
        }
        if supplies[0].u.is_negative() {
            return Err(Error::InvalidInstance(format!(
                "first supply time is {}, must be nonnegative",
                supplies[0].u
            )));
        }
        for (i, supply) in supplies.iter().enumerate() {
            if !supply.b.is_positive() {
                return Err(Error::InvalidInstance(format!(
                    "amount of supply {} is {}, must be positive",
                    i + 1,
                    supply.b
                )));
            }
            if i + 1 < supplies.len() && supplies[i + 1].u <= supply.u {
                return Err(Error::InvalidInstance(format!(
                    "supply times must be strictly increasing, but u_{} = {} and u_{} = {}",
                    i + 1,
                    supply.u,
                    i + 2,
                    supplies[i + 1].u
                )));
            }
        }
        Ok(Instance { jobs, supplies })
    }

    pub fn n(&self) -> usize {
        self.jobs.len()
    }

    pub fn q(&self) -> usize {
        self.supplies.len()
    }

    pub fn jobs(&self) -> &[Job] {
        &self.jobs
    }

    pub fn supplies(&self) -> &[Supply] {
        &self.supplies
    }

    pub fn p(&self, job: usize) -> &Rational {
        &self.jobs[job].p
    }

    pub fn a(&self, job: usize) -> &Rational {
        &self.jobs[job].a
    }

    pub fn total_requirement(&self) -> Rational {
        self.jobs.iter().map(|j| &j.a).sum()
    }

    pub fn total_supply(&self) -> Rational {
        self.supplies.iter().map(|s| &s.b).sum()
    }

    /// Total supply amount delivered no later than `T`; zero for `T < u_1`.
    pub fn cumulative_supply(&self, time: &Rational) -> Rational {
        self.supplies
            .iter()
            .take_while(|s| s.u <= *time)
            .map(|s| &s.b)
            .sum()
    }

    /// The objective `Σ_j a_j C_j`.
    pub fn objective(&self, schedule: &Schedule) -> Result<Rational> {
        if schedule.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                actual: schedule.len(),
            });
        }
        Ok(self
            .jobs
            .iter()
            .zip(schedule.completions())
            .map(|(job, c)| &job.a * c)
            .sum())
    }

    /// Decides feasibility of a schedule and reports every violated rule.
    ///
    /// A schedule is feasible when (a) every start `s_j = C_j - p_j` is
    /// nonnegative, (b) the open processing intervals `(s_j, C_j)` are
    /// pairwise disjoint, and (c) at every time `T >= 0` the requirement of
    /// jobs started so far is covered by the supplies delivered so far.
    ///
    /// The demand side of (c) is a right-continuous step function jumping
    /// only at start times, so the balance is checked exactly at those
    /// finitely many points.
    pub fn check_feasibility(&self, schedule: &Schedule) -> Result<FeasibilityReport> {
        if schedule.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                actual: schedule.len(),
            });
        }
        let mut violations = Vec::new();

        let starts: Vec<Rational> = (0..self.n())
            .map(|j| schedule.completion(j) - self.p(j))
            .collect();
        for (j, start) in starts.iter().enumerate() {
            if start.is_negative() {
                violations.push(FeasibilityViolation::NegativeStart {
                    job: j,
                    start: start.clone(),
                });
            }
        }

        let mut by_start: Vec<usize> = (0..self.n()).collect();
        by_start.sort_by(|&i, &j| starts[i].cmp(&starts[j]).then(i.cmp(&j)));
        for w in by_start.windows(2) {
            let (first, second) = (w[0], w[1]);
            if *schedule.completion(first) > starts[second] {
                violations.push(FeasibilityViolation::MachineOverlap {
                    job_a: first,
                    job_b: second,
                    completion_a: schedule.completion(first).clone(),
                    start_b: starts[second].clone(),
                });
            }
        }

        let mut checked: Option<&Rational> = None;
        for j in &by_start {
            let at = &starts[*j];
            if at.is_negative() || checked == Some(at) {
                continue;
            }
            checked = Some(at);
            let demand: Rational = starts
                .iter()
                .zip(self.jobs.iter())
                .filter(|(s, _)| *s <= at)
                .map(|(_, job)| &job.a)
                .sum();
            let supply = self.cumulative_supply(at);
            if demand > supply {
                violations.push(FeasibilityViolation::ResourceBalance {
                    time: at.clone(),
                    demand,
                    supply,
                });
            }
        }

        Ok(FeasibilityReport {
            feasible: violations.is_empty(),
            violations,
        })
    }

    /// Rebalances the supply plan so that `Σ b = Σ a`, trimming the excess
    /// from the last supply backwards and dropping supplies that reach zero.
    ///
    /// Equivalent to keeping only the first `Σ a` units of supply in time
    /// order, so any schedule is feasible for the output iff it is feasible
    /// for the input.
    pub fn normalize(&self) -> Result<Instance> {
        let required = self.total_requirement();
        let available = self.total_supply();
        if available < required {
            return Err(Error::Infeasible {
                required,
                available,
            });
        }
        let mut excess = available - required;
        let mut supplies = self.supplies.clone();
        while excess.is_positive() {
            let last = supplies.last_mut().expect("total requirement is positive");
            if last.b > excess {
                last.b = &last.b - &excess;
                break;
            }
            excess = excess - last.b.clone();
            supplies.pop();
        }
        Instance::new(self.jobs.clone(), supplies)
    }

    /// Scales every requirement and every supply amount by `c > 0`.
    ///
    /// Both sides of the resource balance scale together, so feasibility of
    /// any schedule is unchanged; choosing `c = 1/max_j a_j/p_j` brings the
    /// instance into the `max r <= 1` regime.
    pub fn scale_resources(&self, c: &Rational) -> Result<Instance> {
        if !c.is_positive() {
            return Err(Error::NonPositiveScale(c.clone()));
        }
        let jobs = self
            .jobs
            .iter()
            .map(|job| Job::new(job.p.clone(), &job.a * c))
            .collect();
        let supplies = self
            .supplies
            .iter()
            .map(|s| Supply::new(s.u.clone(), &s.b * c))
            .collect();
        Instance::new(jobs, supplies)
    }

    /// The largest requirement-to-processing ratio `max_j a_j / p_j`.
    pub fn max_ratio(&self) -> Rational {
        self.jobs
            .iter()
            .map(|job| &job.a / &job.p)
            .max()
            .expect("instance has at least one job")
    }

    /// Requirement ratios and tail sums for a processing order; see
    /// [`OrderStats`].
    pub fn order_stats(&self, order: &Permutation) -> Result<OrderStats> {
        order.check_for(self)?;
        let n = self.n();

        let ratios: Vec<Rational> = self.jobs.iter().map(|job| &job.a / &job.p).collect();

        let tail = |a_at: &dyn Fn(usize) -> Rational| -> Vec<Rational> {
            let mut tails = vec![Rational::zero(); n + 1];
            for j in (0..n).rev() {
                tails[j] = &tails[j + 1] + &a_at(j);
            }
            tails
        };
        let tail_natural = tail(&|j| self.jobs[j].a.clone());
        let tail_ordered = tail(&|k| self.jobs[order.job_at(k)].a.clone());

        // lambda[j] is the unique position k with
        //   tail_ordered[k+1] < tail_natural[j] <= tail_ordered[k];
        // it exists because the ordered tails are strictly decreasing from
        // the shared total down to zero. The k's are nondecreasing as j
        // grows, so a single backward-moving cursor finds them all.
        let mut lambda = vec![0usize; n + 1];
        let mut k = n;
        for j in (0..n).rev() {
            while tail_ordered[k] < tail_natural[j] {
                k -= 1;
            }
            lambda[j] = k;
        }
        // Position n+1 in one-based terms: both tails are zero there.
        lambda[n] = n;

        Ok(OrderStats {
            ratios,
            tail_natural,
            tail_ordered,
            lambda,
        })
    }

    /// Reindexes jobs so that new job `k` is old job `order[k]`. The supply
    /// plan is unchanged.
    pub fn relabel_jobs(&self, order: &Permutation) -> Result<Instance> {
        order.check_for(self)?;
        let jobs = order.iter().map(|j| self.jobs[j].clone()).collect();
        Instance::new(jobs, self.supplies.clone())
    }
}

/// Completion times, indexed by job (not by processing position).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule(Vec<Rational>);

impl Schedule {
    pub fn new(completions: Vec<Rational>) -> Self {
        Schedule(completions)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn completion(&self, job: usize) -> &Rational {
        &self.0[job]
    }

    pub fn completions(&self) -> &[Rational] {
        &self.0
    }

    /// Start time `C_j - p_j` of a job under this schedule.
    pub fn start(&self, instance: &Instance, job: usize) -> Rational {
        &self.0[job] - instance.p(job)
    }
}

/// A processing order: position `k` holds the zero-based index of the job
/// processed `k`-th.
///
/// Serializes as the one-based index array used in files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let one_based = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_one_based(&one_based).map_err(serde::de::Error::custom)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Builds from zero-based job indices, validating bijectivity.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &j in &order {
            if j >= n {
                return Err(Error::InvalidPermutation(format!(
                    "job index {} out of range for {} jobs",
                    j + 1,
                    n
                )));
            }
            if seen[j] {
                return Err(Error::InvalidPermutation(format!(
                    "job index {} appears more than once",
                    j + 1
                )));
            }
            seen[j] = true;
        }
        Ok(Permutation(order))
    }

    /// Builds from the one-based indices used in files and messages.
    pub fn from_one_based(order: &[usize]) -> Result<Self> {
        let zero_based = order
            .iter()
            .map(|&j| {
                j.checked_sub(1).ok_or_else(|| {
                    Error::InvalidPermutation("job indices are one-based, got 0".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(zero_based)
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&j| j + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The job processed at (zero-based) position `k`.
    pub fn job_at(&self, position: usize) -> usize {
        self.0[position]
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub(crate) fn check_for(&self, instance: &Instance) -> Result<()> {
        if self.len() != instance.n() {
            return Err(Error::DimensionMismatch {
                expected: instance.n(),
                actual: self.len(),
            });
        }
        Ok(())
    }
}

impl std::fmt::Display for Permutation {
    /// One-based, parenthesized: `(3, 2, 1)`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, j) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", j + 1)?;
        }
        write!(f, ")")
    }
}

/// Requirement ratios and tail sums for one instance/order pair.
///
/// With one-based position `k` and job `j`:
/// - `ratios[j-1]` is `r_j = a_j / p_j`;
/// - `tail_natural[j-1]` is `A*_j = Σ_{k=j}^n a_k` (so `tail_natural[n] = 0`);
/// - `tail_ordered[k-1]` is `A^o_k = Σ_{i=k}^n a_{o(i)}`;
/// - `lambda[j-1]` is the zero-based position of `λ_j`, the last position
///   whose ordered tail still covers `A*_j`:
///   `A^o_{λ_j + 1} < A*_j <= A^o_{λ_j}`, with `λ_{n+1} = n+1` by convention
///   so that `A^o_{λ_{n+1}} = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderStats {
    pub ratios: Vec<Rational>,
    pub tail_natural: Vec<Rational>,
    pub tail_ordered: Vec<Rational>,
    pub lambda: Vec<usize>,
}

/// One broken feasibility rule, with the witnessing values.
///
/// Job indices are zero-based in the data and rendered one-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum FeasibilityViolation {
    /// `C_j - p_j < 0`.
    NegativeStart { job: usize, start: Rational },
    /// The processing intervals of two jobs intersect.
    MachineOverlap {
        job_a: usize,
        job_b: usize,
        completion_a: Rational,
        start_b: Rational,
    },
    /// Requirement of the jobs started by `time` exceeds the supply delivered.
    ResourceBalance {
        time: Rational,
        demand: Rational,
        supply: Rational,
    },
}

impl std::fmt::Display for FeasibilityViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FeasibilityViolation::NegativeStart { job, start } => {
                write!(f, "negative start: job {} starts at {}", job + 1, start)
            }
            FeasibilityViolation::MachineOverlap {
                job_a,
                job_b,
                completion_a,
                start_b,
            } => write!(
                f,
                "overlap: job {} starts at {} before job {} completes at {}",
                job_b + 1,
                start_b,
                job_a + 1,
                completion_a
            ),
            FeasibilityViolation::ResourceBalance {
                time,
                demand,
                supply,
            } => write!(
                f,
                "resource balance violated at T = {}: demand {} > supply {}",
                time, demand, supply
            ),
        }
    }
}

/// Verdict of [`Instance::check_feasibility`] with all violation witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibilityReport {
    pub feasible: bool,
    pub violations: Vec<FeasibilityViolation>,
}

impl std::fmt::Display for FeasibilityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "feasible: {}", self.feasible)?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}
