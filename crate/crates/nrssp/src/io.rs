//! JSON file formats for instances, schedules, and processing orders.
//!
//! All rationals travel as strings in the literal grammar of
//! [`crate::rational`], so files are exact and round-trip bit-for-bit.
//! Job indices are one-based in every file, matching `J_1 … J_n`.
//!
//! Instance file:
//!
//! ```json
//! {
//!   "jobs":     [ {"p": "1/20", "a": "19/20"}, … ],
//!   "supplies": [ {"u": "0",    "b": "19/20"}, … ]
//! }
//! ```
//!
//! Jobs are listed in index order, supplies in strictly increasing `u`.
//! Unknown keys are rejected.
//!
//! Schedule file:
//!
//! ```json
//! { "order": [3, 2, 1], "completion": ["23/20", "22/20", "21/20"], "objective": "659/200" }
//! ```
//!
//! `completion[j-1]` is the completion time of job `j` (index order, not
//! processing order). An order file is the bare JSON array of one-based
//! indices.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::approx::Solution;
use crate::error::Error;
use crate::model::{Instance, Job, Permutation, Schedule, Supply};
use crate::rational::Rational;

/// Errors from reading or writing the file formats.
#[derive(Debug, thiserror::Error)]
pub enum FileError {
    /// Syntax or schema problem; the message carries line and column.
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    /// Well-formed file, invalid data (model invariant violated).
    #[error("{0}")]
    Model(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceDoc {
    jobs: Vec<Job>,
    supplies: Vec<Supply>,
}

pub fn parse_instance_json(text: &str) -> Result<Instance, FileError> {
    let doc: InstanceDoc = serde_json::from_str(text)?;
    Ok(Instance::new(doc.jobs, doc.supplies)?)
}

pub fn instance_to_json(instance: &Instance) -> String {
    let doc = InstanceDoc {
        jobs: instance.jobs().to_vec(),
        supplies: instance.supplies().to_vec(),
    };
    serde_json::to_string_pretty(&doc).expect("instance serialization cannot fail")
}

pub fn read_instance(path: &Path) -> Result<Instance, FileError> {
    parse_instance_json(&fs::read_to_string(path)?)
}

pub fn write_instance(path: &Path, instance: &Instance) -> Result<(), FileError> {
    Ok(fs::write(path, instance_to_json(instance) + "\n")?)
}

/// Schedule document: processing order, per-job completion times, objective.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleDoc {
    pub order: Permutation,
    pub completion: Vec<Rational>,
    pub objective: Rational,
}

impl ScheduleDoc {
    pub fn from_solution(solution: &Solution) -> Self {
        ScheduleDoc {
            order: solution.order.clone(),
            completion: solution.schedule.completions().to_vec(),
            objective: solution.objective.clone(),
        }
    }

    pub fn schedule(&self) -> Schedule {
        Schedule::new(self.completion.clone())
    }
}

pub fn parse_schedule_json(text: &str) -> Result<ScheduleDoc, FileError> {
    Ok(serde_json::from_str(text)?)
}

pub fn schedule_to_json(doc: &ScheduleDoc) -> String {
    serde_json::to_string_pretty(doc).expect("schedule serialization cannot fail")
}

pub fn read_schedule(path: &Path) -> Result<ScheduleDoc, FileError> {
    parse_schedule_json(&fs::read_to_string(path)?)
}

pub fn write_schedule(path: &Path, doc: &ScheduleDoc) -> Result<(), FileError> {
    Ok(fs::write(path, schedule_to_json(doc) + "\n")?)
}

/// Parses a bare JSON array of one-based job indices.
pub fn parse_order_json(text: &str) -> Result<Permutation, FileError> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_order(path: &Path) -> Result<Permutation, FileError> {
    parse_order_json(&fs::read_to_string(path)?)
}
