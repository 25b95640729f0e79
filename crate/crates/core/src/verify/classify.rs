//! Conductance classification over an envelope, with a small rewriting
//! system that recognizes virtual vectors equivalent to classical ones.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::suites::envelope_vectors;
use super::Envelope;
use crate::arith::ExtGauss;
use crate::conductance::{conductance_state_sum, ConductanceError};
use crate::diagram::{Axis, TangleVector, Twist};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationRecord {
    pub vector: TangleVector,
    pub conductance: Result<ExtGauss, ConductanceError>,
    pub is_real: bool,
    /// Index of the conductance value among all distinct values, in sorted
    /// order; `None` when there is no value.
    pub bucket: Option<usize>,
}

pub fn classify_vector(v: &TangleVector) -> EnumerationRecord {
    let conductance = conductance_state_sum(v);
    let is_real = conductance.as_ref().is_ok_and(ExtGauss::is_real);
    EnumerationRecord {
        vector: v.clone(),
        conductance,
        is_real,
        bucket: None,
    }
}

/// What the rewriting reduced a prefix to. `q` is a classical fraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassState {
    /// A classical rational tangle with fraction `q`.
    Classical(ExtGauss),
    /// Classical tangle `q` followed by `+ X`.
    PlusX(ExtGauss),
    /// Classical tangle `q` followed by `* X`.
    StarX(ExtGauss),
    Unknown,
}

fn is_integer(q: &ExtGauss) -> bool {
    q.finite()
        .is_some_and(|g| g.is_real() && g.re().is_integer())
}

fn normalize(s: ClassState) -> ClassState {
    match s {
        ClassState::PlusX(q) if q.is_infinite() => ClassState::Classical(q),
        ClassState::StarX(q) if q.is_zero() => ClassState::Classical(q),
        s => s,
    }
}

fn add(q: &ExtGauss, c: i64) -> ExtGauss {
    q.add(&c.into()).expect("finite summand")
}

/// `1 / (1/q + d)`.
fn stack(q: &ExtGauss, d: i64) -> ExtGauss {
    add(&q.invert(), d).invert()
}

fn step(state: ClassState, count: i64, virtual_end: bool, axis: Axis) -> ClassState {
    use ClassState::*;
    let state = match (state, axis) {
        // a lone virtual crossing is both [0] + X and [inf] * X
        (StarX(q), Axis::Horizontal) if q.is_infinite() => PlusX(ExtGauss::zero()),
        (PlusX(q), Axis::Vertical) if q.is_zero() => StarX(ExtGauss::Infinity),
        (s, _) => s,
    };
    let next = match (state, axis) {
        (Unknown, _) => Unknown,
        (Classical(q), Axis::Horizontal) if q.is_infinite() => Classical(q),
        (Classical(q), Axis::Horizontal) => {
            let r = add(&q, count);
            if virtual_end {
                PlusX(r)
            } else {
                Classical(r)
            }
        }
        (PlusX(q), Axis::Horizontal) => {
            let r = add(&q, count);
            if virtual_end {
                Classical(r)
            } else {
                PlusX(r)
            }
        }
        (StarX(_), Axis::Horizontal) => Unknown,
        (Classical(q), Axis::Vertical) if q.is_zero() => Classical(q),
        (Classical(q), Axis::Vertical) => {
            let r = stack(&q, count);
            if virtual_end {
                StarX(r)
            } else {
                Classical(r)
            }
        }
        (StarX(q), Axis::Vertical) => {
            let r = stack(&q, count);
            if virtual_end {
                Classical(r)
            } else {
                StarX(r)
            }
        }
        // ([a] + X) * X is 1/[-a] + X
        (PlusX(q), Axis::Vertical) if count == 0 && virtual_end && is_integer(&q) => {
            PlusX(q.invert().neg())
        }
        (PlusX(_), Axis::Vertical) => Unknown,
    };
    normalize(next)
}

/// Reduces `v` with known equivalences: virtual crossings commute past twist
/// regions, pairs of them cancel, `[0] * T` and `[inf] + T` absorb `T`, and
/// `([a] + X) * X` becomes `1/[-a] + X`, so `(a^1, 0^1, c^1)` is
/// `(inf, -a, c)`. Returns the final state and a trace of the rewriting.
pub fn explain(v: &TangleVector) -> (ClassState, String) {
    let n = v.normalized();
    let entries = n.entries();
    let mut trace = String::new();
    let mut state = ClassState::Unknown;
    for (idx, e) in entries.iter().enumerate() {
        let axis = n.axis(idx);
        state = match (idx, e.twist) {
            (0, Twist::Infinity) => ClassState::Classical(ExtGauss::Infinity),
            (0, Twist::Finite(a)) => {
                let q = ExtGauss::from(a);
                normalize(if e.virtual_end {
                    ClassState::PlusX(q)
                } else {
                    ClassState::Classical(q)
                })
            }
            (_, Twist::Finite(a)) => step(state, a, e.virtual_end, axis),
            (_, Twist::Infinity) => ClassState::Unknown,
        };
        if idx > 0 {
            trace.push_str(" -> ");
        }
        trace.push_str(&state_text(&state));
    }
    (state, trace)
}

fn state_text(s: &ClassState) -> String {
    match s {
        ClassState::Classical(q) => format!("[{}]", fraction_text(q)),
        ClassState::PlusX(q) => format!("[{}]+X", fraction_text(q)),
        ClassState::StarX(q) => format!("[{}]*X", fraction_text(q)),
        ClassState::Unknown => "?".into(),
    }
}

fn fraction_text(q: &ExtGauss) -> String {
    match q.finite() {
        None => "inf".into(),
        Some(g) => g.re().to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Explanation {
    /// Rewrites to a classical tangle whose fraction equals the conductance.
    Explained {
        fraction: ExtGauss,
        trace: String,
    },
    Unexplained {
        reason: String,
    },
}

/// Distinct vectors sharing one conductance value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collision {
    pub bucket: usize,
    pub value: ExtGauss,
    pub vectors: Vec<TangleVector>,
    pub all_classical: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ClassificationSummary {
    pub records: usize,
    pub buckets: usize,
    pub collisions: Vec<Collision>,
    /// Real conductance with at least one virtual crossing.
    pub real_virtual: Vec<(TangleVector, ExtGauss, Explanation)>,
    /// Vectors whose rewriting reached a classical tangle with a fraction
    /// other than their conductance.
    pub inconsistent: Vec<(TangleVector, ExtGauss, String)>,
    /// Vectors without a conductance value.
    pub errors: Vec<(TangleVector, String)>,
}

impl ClassificationSummary {
    pub fn unexplained(&self) -> impl Iterator<Item = &(TangleVector, ExtGauss, Explanation)> {
        self.real_virtual
            .iter()
            .filter(|(_, _, e)| matches!(e, Explanation::Unexplained { .. }))
    }

    /// Nothing left to report beyond informational collisions.
    pub fn clean(&self) -> bool {
        self.unexplained().next().is_none()
            && self.inconsistent.is_empty()
            && self.errors.is_empty()
    }
}

/// Assigns bucket ids (by sorted conductance value) and builds the summary.
pub fn summarize(records: &mut [EnumerationRecord]) -> ClassificationSummary {
    let mut buckets: BTreeMap<ExtGauss, Vec<usize>> = BTreeMap::new();
    for (i, r) in records.iter().enumerate() {
        if let Ok(c) = &r.conductance {
            buckets.entry(c.clone()).or_default().push(i);
        }
    }
    let mut summary = ClassificationSummary {
        records: records.len(),
        buckets: buckets.len(),
        ..Default::default()
    };
    for (id, (value, members)) in buckets.into_iter().enumerate() {
        for &i in &members {
            records[i].bucket = Some(id);
        }
        if members.len() > 1 {
            let vectors: Vec<TangleVector> =
                members.iter().map(|&i| records[i].vector.clone()).collect();
            let all_classical = vectors.iter().all(TangleVector::is_classical);
            summary.collisions.push(Collision {
                bucket: id,
                value,
                vectors,
                all_classical,
            });
        }
    }
    for r in records.iter() {
        let c = match &r.conductance {
            Ok(c) => c,
            Err(e) => {
                summary.errors.push((r.vector.clone(), e.to_string()));
                continue;
            }
        };
        if r.vector.is_classical() {
            continue;
        }
        let (state, trace) = explain(&r.vector);
        if let ClassState::Classical(q) = &state {
            if q != c {
                summary
                    .inconsistent
                    .push((r.vector.clone(), c.clone(), trace.clone()));
            }
        }
        if !r.is_real {
            continue;
        }
        let explanation = match state {
            ClassState::Classical(q) if &q == c => Explanation::Explained { fraction: q, trace },
            _ => Explanation::Unexplained { reason: trace },
        };
        summary
            .real_virtual
            .push((r.vector.clone(), c.clone(), explanation));
    }
    summary
}

pub fn enumerate_classify(env: Envelope) -> (Vec<EnumerationRecord>, ClassificationSummary) {
    let mut records: Vec<EnumerationRecord> =
        envelope_vectors(env).iter().map(classify_vector).collect();
    let summary = summarize(&mut records);
    (records, summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Entry;

    fn cancelling_vector(a: i64, c: i64) -> TangleVector {
        TangleVector::new(alloc::vec![Entry::virt(a), Entry::virt(0), Entry::virt(c)]).unwrap()
    }

    #[test]
    fn cancelling_vector_is_explained() {
        let v = cancelling_vector(1, 2);
        let (state, _) = explain(&v);
        assert_eq!(state, ClassState::Classical(ExtGauss::one()));
        let r = classify_vector(&v);
        assert!(r.is_real);
        let mut records = alloc::vec![r];
        let s = summarize(&mut records);
        assert_eq!(s.real_virtual.len(), 1);
        assert!(matches!(s.real_virtual[0].2, Explanation::Explained { .. }));
        assert!(s.clean());
    }

    #[test]
    fn virtual_pairs_cancel() {
        let v: TangleVector = "2v,3,1v".parse().unwrap();
        assert_eq!(explain(&v).0, ClassState::Unknown);
        let v: TangleVector = "0v,3v".parse().unwrap();
        // X * 1/[3]*X is 1/[3]
        assert_eq!(
            explain(&v).0,
            ClassState::Classical(ExtGauss::from_ratio((1, 3), (0, 1)))
        );
        let v: TangleVector = "2v,0v".parse().unwrap();
        assert_eq!(
            explain(&v).0,
            ClassState::PlusX(ExtGauss::from_ratio((-1, 2), (0, 1)))
        );
    }

    #[test]
    fn classical_envelope_has_no_candidates() {
        let mut records: Vec<EnumerationRecord> = envelope_vectors(Envelope::new(2, 2))
            .iter()
            .filter(|v| v.is_classical())
            .map(classify_vector)
            .collect();
        let s = summarize(&mut records);
        assert!(s.real_virtual.is_empty());
        assert!(records.iter().all(|r| r.is_real));
        // [1] and 1/[1] share the value 1
        assert!(s
            .collisions
            .iter()
            .any(|c| c.value == ExtGauss::one() && c.all_classical));
    }

    #[test]
    fn small_envelope_is_clean() {
        let (_, s) = enumerate_classify(Envelope::new(2, 2));
        assert!(s.clean(), "{:?}", s);
    }
}
