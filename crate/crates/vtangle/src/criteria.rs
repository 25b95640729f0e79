//! The ten acceptance criteria, each a suite of check reports with its own
//! pass rule and time budget.

use std::time::{Duration, Instant};

use vtangle_core::verify::{
    cancellation_reports, elementary_table_reports, run_elementary_bracket_suite, CheckReport,
    CheckStatus, Envelope, InvarianceOptions, SuiteSummary,
};

use crate::parallel;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcceptanceConfig {
    pub seed: u64,
    pub elementary_n: i64,
    pub closed_form_range: i64,
    pub equivalence: Envelope,
    pub classical: Envelope,
    pub invariance_samples: u64,
    pub additivity_pairs: usize,
    pub ratio_samples: u64,
}

impl Default for AcceptanceConfig {
    fn default() -> Self {
        Self {
            seed: 2024,
            elementary_n: 6,
            closed_form_range: 3,
            equivalence: Envelope::new(3, 3),
            classical: Envelope::new(4, 4),
            invariance_samples: 200,
            additivity_pairs: 100,
            ratio_samples: 100,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub summary: SuiteSummary,
    pub passed: bool,
    /// Reports other than passes, sorted.
    pub non_passing: Vec<CheckReport>,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl CriterionOutcome {
    pub fn within_budget(&self) -> bool {
        self.budget.is_none_or(|b| self.elapsed <= b)
    }
}

struct Suite {
    id: u8,
    title: &'static str,
    budget: Option<u64>,
    reports: Vec<CheckReport>,
    elapsed: Duration,
    /// Extra condition beyond "no failure, no finding", with its description.
    extra: (bool, String),
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn exact(reports: &[CheckReport]) -> (bool, String) {
    let s = SuiteSummary::of(reports);
    (
        s.indeterminate == 0 && s.total() > 0,
        format!("{} checks, none indeterminate expected", s.total()),
    )
}

fn finish(s: Suite) -> CriterionOutcome {
    let summary = SuiteSummary::of(&s.reports);
    let mut non_passing: Vec<CheckReport> = s
        .reports
        .iter()
        .filter(|r| r.status != CheckStatus::Pass)
        .cloned()
        .collect();
    non_passing.sort();
    CriterionOutcome {
        id: s.id,
        title: s.title,
        passed: summary.clean() && s.extra.0,
        summary,
        non_passing,
        detail: s.extra.1,
        elapsed: s.elapsed,
        budget: s.budget.map(Duration::from_secs),
    }
}

/// Runs criteria 1 to 10 in order. Criterion 9 collects the findings of
/// criteria 1 to 8.
pub fn run_criteria(cfg: &AcceptanceConfig) -> Vec<CriterionOutcome> {
    let mut suites = Vec::new();

    let (reports, elapsed) = timed(|| elementary_table_reports(cfg.elementary_n));
    let extra = exact(&reports);
    suites.push(Suite {
        id: 1,
        title: "elementary conductance table",
        budget: Some(1),
        reports,
        elapsed,
        extra,
    });

    let (reports, elapsed) = timed(|| run_elementary_bracket_suite(cfg.elementary_n));
    let extra = exact(&reports);
    suites.push(Suite {
        id: 2,
        title: "elementary bracket closed forms",
        budget: Some(1),
        reports,
        elapsed,
        extra,
    });

    let (reports, elapsed) = timed(|| parallel::closed_form_suite(cfg.closed_form_range));
    let s = SuiteSummary::of(&reports);
    let extra = (
        s.total() > 0,
        format!(
            "{} instances, {} indeterminate listed",
            s.total(),
            s.indeterminate
        ),
    );
    suites.push(Suite {
        id: 3,
        title: "closed-form golden suite",
        budget: Some(30),
        reports,
        elapsed,
        extra,
    });

    let (reports, elapsed) = timed(|| parallel::equivalence_suite(cfg.equivalence));
    let s = SuiteSummary::of(&reports);
    let extra = (
        s.total() > 0,
        format!(
            "{} comparisons, {} indeterminate listed",
            s.total(),
            s.indeterminate
        ),
    );
    suites.push(Suite {
        id: 4,
        title: "agreement of all computation paths",
        budget: Some(60),
        reports,
        elapsed,
        extra,
    });

    let (reports, elapsed) = timed(|| parallel::classical_suite(cfg.classical));
    let extra = exact(&reports);
    suites.push(Suite {
        id: 5,
        title: "classical consistency",
        budget: Some(60),
        reports,
        elapsed,
        extra,
    });

    let opts = InvarianceOptions::default();
    let (reports, elapsed) =
        timed(|| parallel::invariance_suite(cfg.invariance_samples, cfg.seed, opts));
    let extra = (
        true,
        format!("{} diagrams, seed {}", cfg.invariance_samples, cfg.seed),
    );
    suites.push(Suite {
        id: 6,
        title: "flype, kink and virtualization invariance",
        budget: Some(120),
        reports,
        elapsed,
        extra,
    });

    let ((reports, qualified), elapsed) =
        timed(|| parallel::additivity_suite(cfg.additivity_pairs, cfg.seed));
    let extra = (
        qualified == cfg.additivity_pairs,
        format!(
            "{qualified} qualifying pairs of {} required, seed {}",
            cfg.additivity_pairs, cfg.seed
        ),
    );
    suites.push(Suite {
        id: 7,
        title: "additivity with correction",
        budget: None,
        reports,
        elapsed,
        extra,
    });

    let (reports, elapsed) = timed(|| parallel::ratio_suite(cfg.ratio_samples, cfg.seed));
    let s = SuiteSummary::of(&reports);
    let extra = (
        true,
        format!(
            "{} diagrams, {} projective cases listed",
            cfg.ratio_samples, s.indeterminate
        ),
    );
    suites.push(Suite {
        id: 8,
        title: "ratio identity",
        budget: None,
        reports,
        elapsed,
        extra,
    });

    let findings: Vec<CheckReport> = suites
        .iter()
        .flat_map(|s| {
            s.reports
                .iter()
                .filter(|r| r.status == CheckStatus::Finding)
                .cloned()
        })
        .collect();
    let checked: usize = suites.iter().map(|s| s.reports.len()).sum();
    let extra = (
        true,
        format!("{checked} checks scanned, {} findings", findings.len()),
    );
    let nine = Suite {
        id: 9,
        title: "values stay in Q(i)",
        budget: None,
        reports: findings,
        elapsed: Duration::ZERO,
        extra,
    };

    let (reports, elapsed) = timed(cancellation_reports);
    let extra = exact(&reports);
    let ten = Suite {
        id: 10,
        title: "virtual cancellation family",
        budget: None,
        reports,
        elapsed,
        extra,
    };

    suites.push(nine);
    suites.push(ten);
    suites.into_iter().map(finish).collect()
}
