//! Cross-checks between the computation paths, invariance checks on seeded
//! diagrams, and the classification of conductances over an envelope of
//! vectors.

mod classify;
mod random;
mod suites;

pub use classify::{
    classify_vector, enumerate_classify, explain, summarize, ClassState, ClassificationSummary,
    Collision, EnumerationRecord, Explanation,
};
pub use random::{random_tree, sample_rng, Tree};
pub use suites::{
    additivity_reports, cancellation_reports, classical_report, closed_form_instances,
    closed_form_report, elementary_table_reports, envelope_vectors, equivalence_reports,
    invariance_reports, ratio_reports, run_additivity_suite, run_classical_suite,
    run_closed_form_suite, run_elementary_bracket_suite, run_equivalence_suite,
    run_invariance_suite, run_ratio_suite, InvarianceOptions,
};

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::arith::ArithError;
use crate::conductance::ConductanceError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// A side had no value (0/0, undefined divisor, violated precondition).
    Indeterminate,
    /// A value left `Q(i)`.
    Finding,
}

impl CheckStatus {
    pub fn name(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Indeterminate => "indeterminate",
            CheckStatus::Finding => "finding",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One checked instance. Failing reports always carry both sides.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CheckReport {
    pub check: String,
    pub instance: String,
    pub status: CheckStatus,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub notes: String,
}

impl CheckReport {
    pub fn new(check: &str, instance: impl ToString, status: CheckStatus) -> Self {
        Self {
            check: check.into(),
            instance: instance.to_string(),
            status,
            lhs: None,
            rhs: None,
            notes: String::new(),
        }
    }

    pub fn sides(mut self, lhs: impl ToString, rhs: impl ToString) -> Self {
        self.lhs = Some(lhs.to_string());
        self.rhs = Some(rhs.to_string());
        self
    }

    pub fn note(mut self, notes: impl ToString) -> Self {
        self.notes = notes.to_string();
        self
    }

    /// Compares two computed values: equal is a pass, different a failure;
    /// a missing value is indeterminate unless it left `Q(i)`.
    pub fn compare<T: PartialEq + fmt::Display>(
        check: &str,
        instance: impl ToString,
        lhs: &Result<T, ConductanceError>,
        rhs: &Result<T, ConductanceError>,
    ) -> Self {
        let show = |r: &Result<T, ConductanceError>| match r {
            Ok(v) => v.to_string(),
            Err(e) => alloc::format!("error: {e}"),
        };
        let status = match (lhs, rhs) {
            (Ok(a), Ok(b)) if a == b => CheckStatus::Pass,
            (Ok(_), Ok(_)) => CheckStatus::Fail,
            (Err(e), _) | (_, Err(e)) if is_not_gaussian(e) => CheckStatus::Finding,
            _ => CheckStatus::Indeterminate,
        };
        Self::new(check, instance, status).sides(show(lhs), show(rhs))
    }
}

pub(crate) fn is_not_gaussian(e: &ConductanceError) -> bool {
    matches!(e, ConductanceError::Arith(ArithError::NotGaussian { .. }))
}

/// Vectors of length `1..=n_max` with every twist count in `[-a_max, a_max]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Envelope {
    pub n_max: usize,
    pub a_max: i64,
}

impl Envelope {
    pub fn new(n_max: usize, a_max: i64) -> Self {
        Self { n_max, a_max }
    }
}

/// Tally of a list of reports.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteSummary {
    pub pass: usize,
    pub fail: usize,
    pub indeterminate: usize,
    pub finding: usize,
}

impl SuiteSummary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let mut s = Self::default();
        for r in reports {
            match r.status {
                CheckStatus::Pass => s.pass += 1,
                CheckStatus::Fail => s.fail += 1,
                CheckStatus::Indeterminate => s.indeterminate += 1,
                CheckStatus::Finding => s.finding += 1,
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.indeterminate + self.finding
    }

    /// No failures and no findings.
    pub fn clean(&self) -> bool {
        self.fail == 0 && self.finding == 0
    }
}

/// Reports that are not passes, in sorted order.
pub fn non_passing(reports: &[CheckReport]) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = reports
        .iter()
        .filter(|r| r.status != CheckStatus::Pass)
        .cloned()
        .collect();
    out.sort();
    out
}
