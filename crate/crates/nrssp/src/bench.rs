//! Sweep runner producing per-instance and aggregate approximation-ratio
//! reports over the tight family or seeded random families.
//!
//! Ratios are stored exactly; the `ratio_decimal` fields are renderings at
//! twelve significant digits. Instances inside one sweep may be solved in
//! parallel — reports are assembled in instance-id order, so apart from the
//! informational wall-time fields the output is deterministic.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::approx::approx_solve;
use crate::error::{Error, Result};
use crate::gen::{gen_random, gen_tight, GenConfig, GENERATOR_NAME};
use crate::model::{Instance, Permutation};
use crate::oracle::exact_solve;
use crate::rational::Rational;

/// Significant digits used for decimal renderings in reports.
pub const RATIO_DECIMAL_DIGITS: usize = 12;

/// Which instance family a sweep runs over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum SweepFamily {
    /// The 3-job adversarial family, one instance per epsilon.
    Tight { epsilons: Vec<Rational> },
    /// Seeded random instances; instance `i` uses `config.seed + i`.
    Random { config: GenConfig, count: usize },
}

/// Solved instance: objectives, exact ratio, orders, and wall times.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRecord {
    pub instance_id: String,
    pub n: usize,
    pub q: usize,
    pub f_approx: Rational,
    pub f_exact: Rational,
    pub ratio: Rational,
    pub ratio_decimal: String,
    pub order_approx: Permutation,
    pub order_exact: Permutation,
    /// Measured, informational; excluded from determinism guarantees.
    pub wall_time_approx_secs: f64,
    pub wall_time_exact_secs: f64,
}

/// One sweep entry; refusals are recorded, never silently dropped.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum BenchEntry {
    Solved(Box<BenchRecord>),
    Skipped {
        instance_id: String,
        n: usize,
        q: usize,
        reason: String,
    },
}

impl BenchEntry {
    pub fn instance_id(&self) -> &str {
        match self {
            BenchEntry::Solved(record) => &record.instance_id,
            BenchEntry::Skipped { instance_id, .. } => instance_id,
        }
    }

    pub fn as_solved(&self) -> Option<&BenchRecord> {
        match self {
            BenchEntry::Solved(record) => Some(record),
            BenchEntry::Skipped { .. } => None,
        }
    }
}

/// Aggregate report over a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    #[serde(flatten)]
    pub family: SweepFamily,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    pub records: Vec<BenchEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_ratio: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_ratio_decimal: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub argmax_instance: Option<String>,
}

/// Runs the heuristic and the exact oracle over every instance of the
/// family. Oracle refusals (job count above the brute-force cap) and
/// infeasible instances become skipped entries.
pub fn run_sweep(family: &SweepFamily) -> Result<BenchReport> {
    let Materialized {
        instances,
        generator,
    } = materialize(family)?;

    let mut records: Vec<BenchEntry> = instances
        .into_par_iter()
        .map(|(instance_id, instance)| solve_entry(instance_id, &instance))
        .collect();
    records.sort_by(|x, y| x.instance_id().cmp(y.instance_id()));

    let best = records
        .iter()
        .filter_map(BenchEntry::as_solved)
        .max_by(|x, y| x.ratio.cmp(&y.ratio));
    let (max_ratio, max_ratio_decimal, argmax_instance) = match best {
        Some(record) => (
            Some(record.ratio.clone()),
            Some(record.ratio_decimal.clone()),
            Some(record.instance_id.clone()),
        ),
        None => (None, None, None),
    };

    Ok(BenchReport {
        family: family.clone(),
        generator,
        records,
        max_ratio,
        max_ratio_decimal,
        argmax_instance,
    })
}

struct Materialized {
    instances: Vec<(String, Instance)>,
    generator: Option<String>,
}

fn materialize(family: &SweepFamily) -> Result<Materialized> {
    match family {
        SweepFamily::Tight { epsilons } => {
            let instances = epsilons
                .iter()
                .enumerate()
                .map(|(i, e)| Ok((format!("tight-{i:04}-e={e}"), gen_tight(e)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Materialized {
                instances,
                generator: None,
            })
        }
        SweepFamily::Random { config, count } => {
            let instances = (0..*count)
                .map(|i| {
                    let seed = config.seed.wrapping_add(i as u64);
                    Ok((
                        format!("random-{i:04}-seed={seed}"),
                        gen_random(&config.with_seed(seed))?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Materialized {
                instances,
                generator: Some(GENERATOR_NAME.to_string()),
            })
        }
    }
}

fn solve_entry(instance_id: String, instance: &Instance) -> BenchEntry {
    let skipped = |reason: String| BenchEntry::Skipped {
        instance_id: instance_id.clone(),
        n: instance.n(),
        q: instance.q(),
        reason,
    };

    let approx_started = Instant::now();
    let approx = match approx_solve(instance) {
        Ok(solution) => solution,
        Err(err @ Error::Infeasible { .. }) => return skipped(err.to_string()),
        Err(err) => return skipped(format!("heuristic failed: {err}")),
    };
    let wall_time_approx_secs = approx_started.elapsed().as_secs_f64();

    let exact_started = Instant::now();
    let exact = match exact_solve(instance) {
        Ok(solution) => solution,
        Err(err @ (Error::OracleCapExceeded { .. } | Error::Infeasible { .. })) => {
            return skipped(err.to_string())
        }
        Err(err) => return skipped(format!("oracle failed: {err}")),
    };
    let wall_time_exact_secs = exact_started.elapsed().as_secs_f64();

    let ratio = &approx.objective / &exact.objective;
    BenchEntry::Solved(Box::new(BenchRecord {
        instance_id,
        n: instance.n(),
        q: instance.q(),
        f_approx: approx.objective,
        f_exact: exact.objective,
        ratio_decimal: ratio.to_decimal_string(RATIO_DECIMAL_DIGITS),
        ratio,
        order_approx: approx.order,
        order_exact: exact.order,
        wall_time_approx_secs,
        wall_time_exact_secs,
    }))
}

impl BenchReport {
    /// CSV rendering. Columns: `instance_id,n,q,f_approx,f_exact,ratio_exact,
    /// ratio_decimal,order_approx,order_exact`. Skipped entries keep their
    /// id, n, and q and leave the solve-dependent columns empty (the JSON
    /// report carries the reason). Wall times are deliberately excluded so
    /// that repeated runs are byte-identical.
    pub fn to_csv_string(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record([
                "instance_id",
                "n",
                "q",
                "f_approx",
                "f_exact",
                "ratio_exact",
                "ratio_decimal",
                "order_approx",
                "order_exact",
            ])
            .expect("writing to memory");
        for entry in &self.records {
            let row: [String; 9] = match entry {
                BenchEntry::Solved(r) => [
                    r.instance_id.clone(),
                    r.n.to_string(),
                    r.q.to_string(),
                    r.f_approx.to_string(),
                    r.f_exact.to_string(),
                    r.ratio.to_string(),
                    r.ratio_decimal.clone(),
                    dash_joined(&r.order_approx),
                    dash_joined(&r.order_exact),
                ],
                BenchEntry::Skipped {
                    instance_id, n, q, ..
                } => [
                    instance_id.clone(),
                    n.to_string(),
                    q.to_string(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                ],
            };
            writer.write_record(&row).expect("writing to memory");
        }
        String::from_utf8(writer.into_inner().expect("writing to memory"))
            .expect("csv output is utf-8")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

fn dash_joined(order: &Permutation) -> String {
    order
        .one_based()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join("-")
}
