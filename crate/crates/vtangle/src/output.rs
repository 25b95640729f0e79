//! Documents emitted by the command line, in JSON, CSV or plain text.

use serde::Serialize;

use vtangle_core::verify::{
    CheckReport, ClassificationSummary, EnumerationRecord, Envelope, Explanation, SuiteSummary,
};
use vtangle_core::{BracketTriple, ExtGauss};

use crate::criteria::CriterionOutcome;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BracketDoc {
    pub f: String,
    pub g: String,
    pub h: String,
}

impl From<&BracketTriple> for BracketDoc {
    fn from(b: &BracketTriple) -> Self {
        Self {
            f: b.f.to_string(),
            g: b.g.to_string(),
            h: b.h.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BracketOutput {
    pub vector: String,
    pub bracket: BracketDoc,
}

#[derive(Clone, Debug, Serialize)]
pub struct PathDoc {
    pub provenance: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConductanceOutput {
    pub vector: String,
    #[serde(rename = "C")]
    pub c: String,
    /// Paths that produced the value.
    pub provenance: Vec<&'static str>,
    pub paths: Vec<PathDoc>,
    pub bracket: BracketDoc,
}

#[derive(Clone, Debug, Serialize)]
pub struct FractionOutput {
    pub vector: String,
    pub fraction: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorOutput {
    pub error: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub paths: Vec<PathDoc>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDoc {
    pub check: String,
    pub instance: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub notes: String,
}

impl From<&CheckReport> for ReportDoc {
    fn from(r: &CheckReport) -> Self {
        Self {
            check: r.check.clone(),
            instance: r.instance.clone(),
            status: r.status.name(),
            lhs: r.lhs.clone(),
            rhs: r.rhs.clone(),
            notes: r.notes.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TallyDoc {
    pub pass: usize,
    pub fail: usize,
    pub indeterminate: usize,
    pub finding: usize,
}

impl From<&SuiteSummary> for TallyDoc {
    fn from(s: &SuiteSummary) -> Self {
        Self {
            pass: s.pass,
            fail: s.fail,
            indeterminate: s.indeterminate,
            finding: s.finding,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionDoc {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub tally: TallyDoc,
    pub detail: String,
    pub non_passing: Vec<ReportDoc>,
}

impl From<&CriterionOutcome> for CriterionDoc {
    fn from(o: &CriterionOutcome) -> Self {
        Self {
            id: o.id,
            title: o.title,
            passed: o.passed,
            tally: (&o.summary).into(),
            detail: o.detail.clone(),
            non_passing: o.non_passing.iter().map(ReportDoc::from).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EnvelopeDoc {
    pub n_max: usize,
    pub a_max: i64,
}

impl From<Envelope> for EnvelopeDoc {
    fn from(e: Envelope) -> Self {
        Self {
            n_max: e.n_max,
            a_max: e.a_max,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyOutput {
    pub seed: u64,
    pub envelope: EnvelopeDoc,
    pub passed: bool,
    pub criteria: Vec<CriterionDoc>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RecordDoc {
    pub vector: String,
    #[serde(rename = "C")]
    pub c: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub is_real: bool,
    pub bucket: Option<usize>,
}

impl From<&EnumerationRecord> for RecordDoc {
    fn from(r: &EnumerationRecord) -> Self {
        let (c, error) = match &r.conductance {
            Ok(c) => (Some(c.to_string()), None),
            Err(e) => (None, Some(e.to_string())),
        };
        Self {
            vector: r.vector.to_string(),
            c,
            error,
            is_real: r.is_real,
            bucket: r.bucket,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CollisionDoc {
    pub bucket: usize,
    #[serde(rename = "C")]
    pub c: String,
    pub vectors: Vec<String>,
    pub all_classical: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RealVirtualDoc {
    pub vector: String,
    #[serde(rename = "C")]
    pub c: String,
    pub explained: bool,
    pub trace: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FindingDoc {
    pub kind: &'static str,
    pub vector: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerateOutput {
    pub envelope: EnvelopeDoc,
    pub records: usize,
    pub buckets: usize,
    pub real_virtual: Vec<RealVirtualDoc>,
    pub collisions: Vec<CollisionDoc>,
    pub findings: Vec<FindingDoc>,
    pub entries: Vec<RecordDoc>,
}

impl EnumerateOutput {
    pub fn new(env: Envelope, records: &[EnumerationRecord], s: &ClassificationSummary) -> Self {
        let real_virtual = s
            .real_virtual
            .iter()
            .map(|(v, c, e)| {
                let (explained, trace) = match e {
                    Explanation::Explained { trace, .. } => (true, trace.clone()),
                    Explanation::Unexplained { reason } => (false, reason.clone()),
                };
                RealVirtualDoc {
                    vector: v.to_string(),
                    c: c.to_string(),
                    explained,
                    trace,
                }
            })
            .collect();
        let collisions = s
            .collisions
            .iter()
            .map(|c| CollisionDoc {
                bucket: c.bucket,
                c: c.value.to_string(),
                vectors: c.vectors.iter().map(ToString::to_string).collect(),
                all_classical: c.all_classical,
            })
            .collect();
        let mut findings: Vec<FindingDoc> = s
            .unexplained()
            .map(|(v, c, e)| FindingDoc {
                kind: "unexplained-real-virtual",
                vector: v.to_string(),
                detail: match e {
                    Explanation::Unexplained { reason } => format!("C = {c}; rewriting: {reason}"),
                    Explanation::Explained { trace, .. } => trace.clone(),
                },
            })
            .collect();
        findings.extend(s.inconsistent.iter().map(|(v, c, trace)| FindingDoc {
            kind: "inconsistent-rewriting",
            vector: v.to_string(),
            detail: format!("C = {c}; rewriting: {trace}"),
        }));
        findings.extend(s.errors.iter().map(|(v, e)| FindingDoc {
            kind: "no-conductance",
            vector: v.to_string(),
            detail: e.clone(),
        }));
        Self {
            envelope: env.into(),
            records: s.records,
            buckets: s.buckets,
            real_virtual,
            collisions,
            findings,
            entries: records.iter().map(RecordDoc::from).collect(),
        }
    }
}

/// `(real, imaginary)` columns for CSV; infinity is `inf` with an empty
/// imaginary part.
pub fn csv_parts(c: &ExtGauss) -> (String, String) {
    match c.finite() {
        Some(g) => (g.re().to_string(), g.im().to_string()),
        None => ("inf".into(), String::new()),
    }
}

pub fn enumeration_csv(records: &[EnumerationRecord]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["vector", "C-real", "C-imag", "is-real", "bucket-id"])?;
    for r in records {
        let (re, im) = match &r.conductance {
            Ok(c) => csv_parts(c),
            Err(_) => (String::new(), String::new()),
        };
        let bucket = r.bucket.map(|b| b.to_string()).unwrap_or_default();
        w.write_record([r.vector.to_string(), re, im, r.is_real.to_string(), bucket])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv of UTF-8 fields"))
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable document");
    s.push('\n');
    s
}
