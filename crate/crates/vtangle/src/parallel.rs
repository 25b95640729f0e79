//! Rayon drivers for the state sum and the verification suites. Results come
//! back in the same order as the serial versions in `vtangle_core::verify`.

use rayon::prelude::*;

use vtangle_core::bracket::{StateCounts, StateSum};
use vtangle_core::conductance::{conductance_from_bracket, ConductanceError};
use vtangle_core::verify::{
    additivity_reports, classical_report, classify_vector, closed_form_instances,
    closed_form_report, envelope_vectors, equivalence_reports, invariance_reports, ratio_reports,
    summarize, CheckReport, ClassificationSummary, EnumerationRecord, Envelope, InvarianceOptions,
};
use vtangle_core::{build_basic, BracketTriple, ExtGauss, TangleDiagram, TangleVector};

/// Below this many classical crossings the state sum runs on one thread.
const SPLIT_THRESHOLD: usize = 14;

pub fn par_bracket(t: &TangleDiagram) -> BracketTriple {
    let sum = StateSum::new(t);
    if sum.classical_count() < SPLIT_THRESHOLD {
        return sum.bracket();
    }
    let total = sum.state_count();
    let chunks = 256u64.min(total);
    let step = total / chunks;
    (0..chunks)
        .into_par_iter()
        .map(|k| {
            let end = if k + 1 == chunks {
                total
            } else {
                (k + 1) * step
            };
            sum.count_range(k * step..end)
        })
        .reduce_with(|mut a, b| {
            a.merge(&b);
            a
        })
        .unwrap_or_else(|| StateCounts::empty(&sum))
        .into_triple()
}

pub fn par_conductance_state_sum(v: &TangleVector) -> Result<ExtGauss, ConductanceError> {
    conductance_from_bracket(&par_bracket(&build_basic(v)))
}

pub fn equivalence_suite(env: Envelope) -> Vec<CheckReport> {
    envelope_vectors(env)
        .par_iter()
        .flat_map_iter(equivalence_reports)
        .collect()
}

pub fn classical_suite(env: Envelope) -> Vec<CheckReport> {
    envelope_vectors(env)
        .par_iter()
        .filter(|v| v.is_classical())
        .map(classical_report)
        .collect()
}

pub fn closed_form_suite(r: i64) -> Vec<CheckReport> {
    closed_form_instances(r)
        .par_iter()
        .map(|(p, v)| closed_form_report(p, v))
        .collect()
}

pub fn invariance_suite(samples: u64, seed: u64, opts: InvarianceOptions) -> Vec<CheckReport> {
    (0..samples)
        .into_par_iter()
        .flat_map_iter(|i| invariance_reports(seed, i, opts))
        .collect()
}

pub fn ratio_suite(samples: u64, seed: u64) -> Vec<CheckReport> {
    (0..samples)
        .into_par_iter()
        .flat_map_iter(|i| ratio_reports(seed, i))
        .collect()
}

/// Same draws as `run_additivity_suite`: pairs are taken in index order until
/// `pairs` of them meet the precondition. Returns the reports and the number
/// of qualifying pairs.
pub fn additivity_suite(pairs: usize, seed: u64) -> (Vec<CheckReport>, usize) {
    let limit = 100 * pairs as u64 + 100;
    let batch = (pairs as u64).max(16);
    let mut out = Vec::new();
    let mut qualified = 0;
    let mut start = 0u64;
    while qualified < pairs && start < limit {
        let end = (start + batch).min(limit);
        let results: Vec<(Vec<CheckReport>, bool)> = (start..end)
            .into_par_iter()
            .map(|i| additivity_reports(seed, i))
            .collect();
        for (reports, ok) in results {
            if qualified == pairs {
                break;
            }
            out.extend(reports);
            qualified += usize::from(ok);
        }
        start = end;
    }
    (out, qualified)
}

pub fn enumerate(env: Envelope) -> (Vec<EnumerationRecord>, ClassificationSummary) {
    let mut records: Vec<EnumerationRecord> = envelope_vectors(env)
        .par_iter()
        .map(classify_vector)
        .collect();
    let summary = summarize(&mut records);
    (records, summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use vtangle_core::bracket;
    use vtangle_core::diagram::Entry;
    use vtangle_core::verify::{run_additivity_suite, run_equivalence_suite};

    #[test]
    fn split_state_sum_matches_serial() {
        let v = TangleVector::new(vec![
            Entry::classical(5),
            Entry::virt(-4),
            Entry::classical(6),
        ])
        .unwrap();
        let t = build_basic(&v);
        assert!(t.classical_count() >= SPLIT_THRESHOLD);
        assert_eq!(par_bracket(&t), bracket(&t));
    }

    #[test]
    fn suites_match_serial_order() {
        let env = Envelope::new(2, 2);
        assert_eq!(equivalence_suite(env), run_equivalence_suite(env));
        let (reports, qualified) = additivity_suite(20, 9);
        assert_eq!(reports, run_additivity_suite(20, 9));
        assert_eq!(qualified, 20);
    }
}
