//! Argument parsing and the subcommands.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use vtangle_core::conductance::{
    classical_fraction_of, closed_form, conductance_from_bracket, conductance_recursive,
    continued_fraction_c, ConductanceError, Provenance,
};
use vtangle_core::diagram::{parse_vector, VectorError};
use vtangle_core::verify::Envelope;
use vtangle_core::{build_basic, ExtGauss, TangleVector};

use crate::criteria::{run_criteria, AcceptanceConfig};
use crate::output::{
    enumeration_csv, to_json, BracketDoc, BracketOutput, ConductanceOutput, CriterionDoc,
    EnumerateOutput, ErrorOutput, FractionOutput, PathDoc, VerifyOutput,
};
use crate::parallel::{enumerate, par_bracket};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_COMPUTE: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;
pub const EXIT_FINDING: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "vtangle",
    version,
    about = "Brackets and conductances of virtual rational tangles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format; csv is only available for `enumerate`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bracket triple (f, g, h) of the basic tangle of a vector.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        vector: String,
    },
    /// Conductance of a vector; by default every path, which must agree.
    Conductance {
        #[arg(allow_hyphen_values = true)]
        vector: String,
        #[arg(long, value_enum, default_value_t = PathChoice::All)]
        path: PathChoice,
    },
    /// Classical fraction of a classical vector.
    Fraction {
        #[arg(allow_hyphen_values = true)]
        vector: String,
    },
    /// Run the acceptance criteria.
    Verify {
        /// Envelope `n_max,a_max` for the path-agreement criterion; the
        /// classical criterion uses one more in each bound.
        #[arg(long, value_parser = parse_envelope, default_value = "3,3")]
        envelope: Envelope,
        #[arg(long, default_value_t = AcceptanceConfig::default().seed)]
        seed: u64,
    },
    /// Conductance of every vector in an envelope, with a findings report.
    Enumerate {
        #[arg(long, value_parser = parse_envelope, default_value = "3,3")]
        envelope: Envelope,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PathChoice {
    All,
    StateSum,
    Recursion,
    ContinuedFraction,
    ClosedForm,
    ClassicalFraction,
}

pub fn parse_envelope(s: &str) -> Result<Envelope, String> {
    let (n, a) = s.split_once(',').ok_or("expected n_max,a_max")?;
    let n_max = n
        .trim()
        .parse::<usize>()
        .map_err(|e| format!("n_max: {e}"))?;
    let a_max = a.trim().parse::<i64>().map_err(|e| format!("a_max: {e}"))?;
    if a_max < 0 {
        return Err("a_max must be nonnegative".into());
    }
    Ok(Envelope::new(n_max, a_max))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid vector: {0}")]
    Vector(#[from] VectorError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(#[from] ConductanceError),
    #[error("computation paths disagree")]
    Disagreement(Vec<PathDoc>),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Vector(_) | CliError::Usage(_) => EXIT_PARSE,
            CliError::Compute(_) => EXIT_COMPUTE,
            CliError::Disagreement(_) => EXIT_VERIFY,
            CliError::Csv(_) => EXIT_IO,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Vector(_) => "parse",
            CliError::Usage(_) => "usage",
            CliError::Compute(_) => "computation",
            CliError::Disagreement(_) => "disagreement",
            CliError::Csv(_) => "io",
        }
    }

    /// The document printed in place of a result.
    pub fn document(&self, format: Format) -> String {
        match format {
            Format::Text | Format::Csv => {
                let mut s = format!("error: {self}\n");
                if let CliError::Disagreement(paths) = self {
                    for p in paths {
                        s.push_str(&path_line(p));
                    }
                }
                s
            }
            Format::Json => {
                let paths = match self {
                    CliError::Disagreement(p) => p.clone(),
                    _ => Vec::new(),
                };
                to_json(&ErrorOutput {
                    error: self.kind(),
                    message: self.to_string(),
                    paths,
                })
            }
        }
    }
}

fn path_line(p: &PathDoc) -> String {
    match (&p.value, &p.error) {
        (Some(v), _) => format!("{}: {v}\n", p.provenance),
        (_, Some(e)) => format!("{}: error: {e}\n", p.provenance),
        _ => format!("{}\n", p.provenance),
    }
}

/// Exit status and the document to emit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub document: String,
}

impl Outcome {
    fn ok(document: String) -> Self {
        Self {
            code: EXIT_OK,
            document,
        }
    }
}

fn vector(text: &str) -> Result<TangleVector, CliError> {
    Ok(parse_vector(text)?)
}

fn no_csv(format: Format, command: &str) -> Result<(), CliError> {
    if format == Format::Csv {
        return Err(CliError::Usage(format!(
            "csv output is only available for enumerate, not {command}"
        )));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Bracket { vector: text } => {
            no_csv(format, "bracket")?;
            let v = vector(text)?;
            let b = par_bracket(&build_basic(&v));
            Ok(Outcome::ok(match format {
                Format::Json => to_json(&BracketOutput {
                    vector: v.to_string(),
                    bracket: (&b).into(),
                }),
                _ => format!("{b}\n"),
            }))
        }
        Command::Conductance { vector: text, path } => {
            no_csv(format, "conductance")?;
            let v = vector(text)?;
            conductance(&v, *path, format)
        }
        Command::Fraction { vector: text } => {
            no_csv(format, "fraction")?;
            let v = vector(text)?;
            if !v.is_classical() {
                return Err(CliError::Usage(
                    "fraction needs a classical vector (no virtual crossings)".into(),
                ));
            }
            let q = classical_fraction_of(&v)?;
            let fraction = match q.finite() {
                Some(g) => g.re().to_string(),
                None => "inf".into(),
            };
            Ok(Outcome::ok(match format {
                Format::Json => to_json(&FractionOutput {
                    vector: v.to_string(),
                    fraction,
                }),
                _ => format!("{fraction}\n"),
            }))
        }
        Command::Verify { envelope, seed } => {
            no_csv(format, "verify")?;
            Ok(verify(*envelope, *seed, format))
        }
        Command::Enumerate { envelope } => {
            let (records, summary) = enumerate(*envelope);
            let doc = EnumerateOutput::new(*envelope, &records, &summary);
            let code = if doc.findings.is_empty() {
                EXIT_OK
            } else {
                EXIT_FINDING
            };
            let document = match format {
                Format::Json => to_json(&doc),
                Format::Csv => enumeration_csv(&records)?,
                Format::Text => {
                    let mut s = format!(
                        "{} vectors, {} distinct values, {} shared values, {} real virtual values, {} findings\n",
                        doc.records,
                        doc.buckets,
                        doc.collisions.len(),
                        doc.real_virtual.len(),
                        doc.findings.len()
                    );
                    for f in &doc.findings {
                        s.push_str(&format!("finding {} {}: {}\n", f.kind, f.vector, f.detail));
                    }
                    s
                }
            };
            Ok(Outcome { code, document })
        }
    }
}

fn conductance(v: &TangleVector, choice: PathChoice, format: Format) -> Result<Outcome, CliError> {
    let b = par_bracket(&build_basic(v));
    let wanted = |p: PathChoice| choice == PathChoice::All || choice == p;
    let mut paths: Vec<(Provenance, Result<ExtGauss, ConductanceError>)> = Vec::new();
    if wanted(PathChoice::StateSum) {
        paths.push((Provenance::StateSum, conductance_from_bracket(&b)));
    }
    if wanted(PathChoice::Recursion) {
        paths.push((Provenance::Recursion, conductance_recursive(v)));
    }
    if wanted(PathChoice::ContinuedFraction) {
        paths.push((Provenance::ContinuedFraction, continued_fraction_c(v)));
    }
    let short = v.normalized().len() <= 3;
    if choice == PathChoice::ClosedForm || (choice == PathChoice::All && short) {
        paths.push((Provenance::ClosedForm, closed_form(v)));
    }
    if choice == PathChoice::ClassicalFraction || (choice == PathChoice::All && v.is_classical()) {
        if !v.is_classical() {
            return Err(CliError::Usage(
                "the classical fraction needs a classical vector".into(),
            ));
        }
        paths.push((Provenance::ClassicalFraction, classical_fraction_of(v)));
    }

    let docs: Vec<PathDoc> = paths
        .iter()
        .map(|(p, r)| PathDoc {
            provenance: p.name(),
            value: r.as_ref().ok().map(ToString::to_string),
            error: r.as_ref().err().map(ToString::to_string),
        })
        .collect();
    let values: Vec<(&Provenance, &ExtGauss)> = paths
        .iter()
        .filter_map(|(p, r)| r.as_ref().ok().map(|x| (p, x)))
        .collect();
    let Some(&(_, first)) = values.first() else {
        let (_, err) = paths.into_iter().next().expect("at least one path");
        return Err(err.expect_err("no path produced a value").into());
    };
    if values.iter().any(|(_, x)| *x != first) {
        return Err(CliError::Disagreement(docs));
    }
    let c = first.to_string();
    Ok(Outcome::ok(match format {
        Format::Json => to_json(&ConductanceOutput {
            vector: v.to_string(),
            c,
            provenance: values.iter().map(|(p, _)| p.name()).collect(),
            paths: docs,
            bracket: BracketDoc::from(&b),
        }),
        _ => format!("{c}\n"),
    }))
}

fn verify(envelope: Envelope, seed: u64, format: Format) -> Outcome {
    let cfg = AcceptanceConfig {
        seed,
        equivalence: envelope,
        classical: Envelope::new(envelope.n_max + 1, envelope.a_max + 1),
        ..Default::default()
    };
    let outcomes = run_criteria(&cfg);
    let passed = outcomes.iter().all(|o| o.passed);
    let failed = outcomes
        .iter()
        .any(|o| o.summary.fail > 0 || (!o.passed && o.summary.finding == 0));
    let code = match (passed, failed) {
        (true, _) => EXIT_OK,
        (false, true) => EXIT_VERIFY,
        (false, false) => EXIT_FINDING,
    };
    let document = match format {
        Format::Text => {
            let mut s = String::new();
            for o in &outcomes {
                let status = if o.passed { "PASS" } else { "FAIL" };
                s.push_str(&format!(
                    "criterion {:>2} {status} {}: {}\n",
                    o.id, o.title, o.detail
                ));
            }
            s
        }
        _ => to_json(&VerifyOutput {
            seed,
            envelope: envelope.into(),
            passed,
            criteria: outcomes.iter().map(CriterionDoc::from).collect(),
        }),
    };
    Outcome { code, document }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Outcome, CliError> {
        let cli =
            Cli::try_parse_from(std::iter::once("vtangle").chain(args.iter().copied())).unwrap();
        run(&cli)
    }

    #[test]
    fn envelope_flag() {
        assert_eq!(parse_envelope("3,2").unwrap(), Envelope::new(3, 2));
        assert!(parse_envelope("3").is_err());
        assert!(parse_envelope("3,-1").is_err());
    }

    #[test]
    fn text_examples() {
        let out = run_args(&["conductance", "2,3,1v", "--format", "text"]).unwrap();
        assert_eq!(out.document, "9/7 + 1/1*i\n");
        let out = run_args(&["fraction", "2,3,1", "--format", "text"]).unwrap();
        assert_eq!(out.document, "9/7\n");
        let out = run_args(&["conductance", "0", "--format", "text"]).unwrap();
        assert_eq!(out.document, "0/1 + 0/1*i\n");
    }

    #[test]
    fn negative_first_entry_is_a_vector() {
        let out = run_args(&["conductance", "-2", "--format", "text"]).unwrap();
        assert_eq!(out.document, "-2/1 + 0/1*i\n");
    }

    #[test]
    fn error_codes() {
        assert_eq!(
            run_args(&["conductance", "1,0,2"]).unwrap_err().exit_code(),
            EXIT_PARSE
        );
        assert_eq!(
            run_args(&["fraction", "2v"]).unwrap_err().exit_code(),
            EXIT_PARSE
        );
        assert_eq!(
            run_args(&["bracket", "2", "--format", "csv"])
                .unwrap_err()
                .exit_code(),
            EXIT_PARSE
        );
        // only the closed form is asked for, and it degenerates
        let err = run_args(&["conductance", "0v,0v", "--path", "closed-form"]).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_COMPUTE);
    }

    #[test]
    fn degenerate_closed_form_does_not_block_agreement() {
        let out = run_args(&["conductance", "0v,0v", "--format", "text"]).unwrap();
        assert_eq!(out.document, "inf\n");
    }
}
