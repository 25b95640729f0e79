use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::random::{random_tree, sample_rng};
use super::{is_not_gaussian, CheckReport, CheckStatus, Envelope};
use crate::arith::{ExtGauss, LaurentPoly};
use crate::bracket::{bracket, bracket_elementary, BracketTriple};
use crate::conductance::{
    additivity_identity, all_paths, classical_fraction_of, closed_form, conductance_from_bracket,
    conductance_of_diagram, conductance_state_sum, ratio_identity, star_identity, ConductanceError,
};
use crate::diagram::{
    elementary, flype_pair, insert_kink, virtualize_crossing, Axis, Endpoint, Entry, FlypeKind,
    TangleVector,
};

/// Every valid vector in the envelope, shortest first. An `inf` first entry
/// counts towards the length.
pub fn envelope_vectors(env: Envelope) -> Vec<TangleVector> {
    let mut choices: Vec<Entry> = Vec::new();
    for a in -env.a_max..=env.a_max {
        choices.push(Entry::classical(a));
        choices.push(Entry::virt(a));
    }
    let mut out = Vec::new();
    let mut current: Vec<Vec<Entry>> = vec![Vec::new()];
    for len in 1..=env.n_max {
        let mut next = Vec::new();
        for prefix in &current {
            let firsts: Vec<Entry> = if len == 1 {
                core::iter::once(Entry::infinity())
                    .chain(choices.iter().copied())
                    .collect()
            } else {
                choices.clone()
            };
            for e in firsts {
                let mut p = prefix.clone();
                p.push(e);
                next.push(p);
            }
        }
        for entries in &next {
            if let Ok(v) = TangleVector::new(entries.clone()) {
                out.push(v);
            }
        }
        current = next;
    }
    out
}

/// State sum against every other path for one vector.
pub fn equivalence_reports(v: &TangleVector) -> Vec<CheckReport> {
    let mut paths = all_paths(v).into_iter();
    let (_, reference) = paths.next().expect("state sum comes first");
    let mut out = Vec::new();
    if let Err(e) = &reference {
        let status = if is_not_gaussian(e) {
            CheckStatus::Finding
        } else {
            CheckStatus::Indeterminate
        };
        out.push(CheckReport::new("equivalence/state-sum", v, status).note(e));
    }
    for (prov, value) in paths {
        let check = format!("equivalence/{}", prov.name());
        out.push(CheckReport::compare(&check, v, &value, &reference));
    }
    out
}

pub fn run_equivalence_suite(env: Envelope) -> Vec<CheckReport> {
    envelope_vectors(env)
        .iter()
        .flat_map(equivalence_reports)
        .collect()
}

/// `C([n]) = n`, `C([n^1]) = n+i`, `C(1/[n]) = 1/n`, `C(1/[n^1]) = 1/(n-i)`.
pub fn elementary_table_reports(n_max: i64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in (-n_max..=n_max).filter(|&n| n != 0) {
        let cases = [
            (false, Axis::Horizontal, ExtGauss::from_i64(n, 0)),
            (true, Axis::Horizontal, ExtGauss::from_i64(n, 1)),
            (false, Axis::Vertical, ExtGauss::from_i64(n, 0).invert()),
            (true, Axis::Vertical, ExtGauss::from_i64(n, -1).invert()),
        ];
        for (v, axis, expected) in cases {
            let name = match axis {
                Axis::Horizontal => format!("[{n}{}]", if v { "v" } else { "" }),
                Axis::Vertical => format!("1/[{n}{}]", if v { "v" } else { "" }),
            };
            let got = conductance_of_diagram(&elementary(n, v, axis));
            out.push(CheckReport::compare(
                "elementary-conductance",
                name,
                &got,
                &Ok(expected),
            ));
        }
    }
    out
}

/// State-sum brackets of elementary tangles against their closed forms.
pub fn run_elementary_bracket_suite(n_max: i64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in -n_max..=n_max {
        for v in [false, true] {
            for axis in [Axis::Horizontal, Axis::Vertical] {
                let name = format!("n={n} virtual={v} {axis}");
                let got: Result<BracketTriple, ConductanceError> =
                    Ok(bracket(&elementary(n, v, axis)));
                let want = Ok(bracket_elementary(n, v, axis));
                out.push(CheckReport::compare(
                    "elementary-bracket",
                    name,
                    &got,
                    &want,
                ));
            }
        }
    }
    out
}

/// `(pattern, vector)` for every displayed closed form over `[-r, r]`,
/// plus the `inf`-first limits. Invalid vectors are left out.
pub fn closed_form_instances(r: i64) -> Vec<(String, TangleVector)> {
    let mut out = Vec::new();
    let mut push = |pattern: String, entries: Vec<Entry>| {
        if let Ok(v) = TangleVector::new(entries) {
            out.push((pattern, v));
        }
    };
    let range = || -r..=r;
    let sup = |e: bool| if e { "1" } else { "0" };
    for a in range() {
        for ea in [false, true] {
            push(format!("C(a{})", sup(ea)), vec![Entry::new(a, ea)]);
        }
    }
    for a in range() {
        for b in range() {
            for ea in [false, true] {
                for eb in [false, true] {
                    push(
                        format!("C(a{},b{})", sup(ea), sup(eb)),
                        vec![Entry::new(a, ea), Entry::new(b, eb)],
                    );
                }
            }
        }
    }
    for a in range() {
        for b in range() {
            for c in range() {
                for ea in [false, true] {
                    for eb in [false, true] {
                        let entries =
                            vec![Entry::new(a, ea), Entry::new(b, eb), Entry::classical(c)];
                        push("C(a,b,c0)".into(), entries);
                        let entries = vec![Entry::new(a, ea), Entry::new(b, eb), Entry::virt(c)];
                        push(format!("C(a{},b{},c1)", sup(ea), sup(eb)), entries);
                    }
                }
            }
        }
    }
    for b in range() {
        for eb in [false, true] {
            push(
                format!("C(inf,b{})", sup(eb)),
                vec![Entry::infinity(), Entry::new(b, eb)],
            );
            for c in range() {
                for ec in [false, true] {
                    push(
                        format!("C(inf,b{},c{})", sup(eb), sup(ec)),
                        vec![Entry::infinity(), Entry::new(b, eb), Entry::new(c, ec)],
                    );
                }
            }
        }
    }
    out
}

pub fn closed_form_report(pattern: &str, v: &TangleVector) -> CheckReport {
    let check = format!("closed-form/{pattern}");
    CheckReport::compare(&check, v, &closed_form(v), &conductance_state_sum(v))
}

pub fn run_closed_form_suite(r: i64) -> Vec<CheckReport> {
    closed_form_instances(r)
        .iter()
        .map(|(p, v)| closed_form_report(p, v))
        .collect()
}

/// State-sum conductance of a classical vector against its fraction.
pub fn classical_report(v: &TangleVector) -> CheckReport {
    CheckReport::compare(
        "classical-fraction",
        v,
        &conductance_state_sum(v),
        &classical_fraction_of(v),
    )
}

pub fn run_classical_suite(env: Envelope) -> Vec<CheckReport> {
    envelope_vectors(env)
        .iter()
        .filter(|v| v.is_classical())
        .map(classical_report)
        .collect()
}

/// `C(a^1, 0^1, c^1) = C(inf, (-a)^0, c^0)` for `a` in 1..=3, `c` in -2..=2.
pub fn cancellation_reports() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for a in 1..=3 {
        for c in -2..=2 {
            let lhs = TangleVector::new(vec![Entry::virt(a), Entry::virt(0), Entry::virt(c)])
                .expect("valid");
            let rhs = TangleVector::new(vec![
                Entry::infinity(),
                Entry::classical(-a),
                Entry::classical(c),
            ])
            .expect("valid");
            let name = format!("({lhs}) vs ({rhs})");
            out.push(CheckReport::compare(
                "virtual-cancellation",
                name,
                &conductance_state_sum(&lhs),
                &conductance_state_sum(&rhs),
            ));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvarianceOptions {
    pub max_classical: usize,
    /// Negative control: expect `+A^3` instead of `-A^3` for a positive kink,
    /// so every kink check must fail.
    pub corrupt_kink_factor: bool,
}

impl Default for InvarianceOptions {
    fn default() -> Self {
        Self {
            max_classical: 10,
            corrupt_kink_factor: false,
        }
    }
}

fn bracket_check(
    check: &str,
    instance: &str,
    lhs: BracketTriple,
    rhs: BracketTriple,
) -> CheckReport {
    CheckReport::compare::<BracketTriple>(check, instance, &Ok(lhs), &Ok(rhs))
}

/// Flype, kink and virtualization checks for sample `index` of a seeded run.
pub fn invariance_reports(seed: u64, index: u64, opts: InvarianceOptions) -> Vec<CheckReport> {
    let mut rng = sample_rng(seed, index);
    let tree = random_tree(&mut rng, opts.max_classical, true);
    let t = tree.build();
    let name = format!("#{index} {tree}");
    let base = bracket(&t);
    let mut out = Vec::new();

    for (kind, check) in [
        (FlypeKind::ClassicalLeft, "flype/classical-left"),
        (FlypeKind::ClassicalRight, "flype/classical-right"),
        (FlypeKind::Virtual, "flype/virtual"),
    ] {
        let (d1, d2) = flype_pair(&t, kind);
        out.push(bracket_check(check, &name, bracket(&d1), bracket(&d2)));
    }

    let endpoint = Endpoint::ALL[rng.random_range(0..4)];
    let sign = if opts.corrupt_kink_factor { 1 } else { -1 };
    for (positive, exp, check, c_check) in [
        (true, 3, "kink/positive", "kink/conductance-positive"),
        (false, -3, "kink/negative", "kink/conductance-negative"),
    ] {
        let kinked = insert_kink(&t, endpoint, positive);
        let factor = LaurentPoly::monomial(sign.into(), exp);
        let instance = format!("{name} at {endpoint:?}");
        out.push(bracket_check(
            check,
            &instance,
            bracket(&kinked),
            base.scale(&factor),
        ));
        out.push(CheckReport::compare(
            c_check,
            &instance,
            &conductance_of_diagram(&kinked),
            &conductance_from_bracket(&base),
        ));
    }

    let classical = t.classical_indices();
    if classical.is_empty() {
        out.push(
            CheckReport::new("virtualization", &name, CheckStatus::Pass)
                .note("no classical crossing"),
        );
    } else {
        let idx = classical[rng.random_range(0..classical.len())];
        let once = virtualize_crossing(&t, idx).expect("classical index");
        let twice = virtualize_crossing(&once, idx).expect("classical index");
        let instance = format!("{name} crossing {idx}");
        out.push(bracket_check(
            "virtualization",
            &instance,
            bracket(&once),
            base.clone(),
        ));
        out.push(bracket_check(
            "virtualization/twice",
            &instance,
            bracket(&twice),
            base.clone(),
        ));
    }
    out
}

pub fn run_invariance_suite(samples: u64, seed: u64, opts: InvarianceOptions) -> Vec<CheckReport> {
    (0..samples)
        .flat_map(|i| invariance_reports(seed, i, opts))
        .collect()
}

/// Additivity with correction, the classical special case and the star
/// identity for pair `index`. The flag reports whether the pair met the
/// precondition (nonvanishing denominators at `sqrt(i)`).
pub fn additivity_reports(seed: u64, index: u64) -> (Vec<CheckReport>, bool) {
    let mut rng = sample_rng(seed, index);
    let left_virtual = rng.random_bool(0.7);
    let right_virtual = rng.random_bool(0.7);
    let ta = random_tree(&mut rng, 5, left_virtual);
    let sa = random_tree(&mut rng, 5, right_virtual);
    let name = format!("#{index} T={ta} S={sa}");
    let (t, s) = (bracket(&ta.build()), bracket(&sa.build()));
    let mut out = Vec::new();
    let check = match additivity_identity(&t, &s) {
        Ok(c) => c,
        Err(e) => {
            let status = if is_not_gaussian(&e) {
                CheckStatus::Finding
            } else {
                CheckStatus::Indeterminate
            };
            out.push(
                CheckReport::new("additivity", &name, status).note(format!("precondition: {e}")),
            );
            return (out, false);
        }
    };
    let status = match check.holds() {
        Ok(true) => CheckStatus::Pass,
        Ok(false) => CheckStatus::Fail,
        Err(_) => CheckStatus::Indeterminate,
    };
    let rhs = match check.rhs.sub(&check.correction) {
        Ok(x) => x.to_string(),
        Err(e) => format!("error: {e}"),
    };
    out.push(
        CheckReport::new("additivity", &name, status)
            .sides(&check.lhs, rhs)
            .note(format!("correction {}", check.correction)),
    );
    if t.is_classical() || s.is_classical() {
        let status = if check.correction.is_zero() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        out.push(
            CheckReport::new("additivity/classical-side", &name, status)
                .sides(&check.correction, ExtGauss::zero()),
        );
    }
    match star_identity(&t, &s) {
        Ok((l, r)) => out.push(CheckReport::compare::<ExtGauss>(
            "star-identity",
            &name,
            &Ok(l),
            &Ok(r),
        )),
        Err(e) => {
            let status = if is_not_gaussian(&e) {
                CheckStatus::Finding
            } else {
                CheckStatus::Indeterminate
            };
            out.push(CheckReport::new("star-identity", &name, status).note(e));
        }
    }
    (out, true)
}

/// Draws pairs until `pairs` of them meet the precondition; pairs that miss
/// it stay in the report as indeterminate.
pub fn run_additivity_suite(pairs: usize, seed: u64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let mut qualified = 0;
    let mut index = 0u64;
    while qualified < pairs && index < 100 * pairs as u64 + 100 {
        let (reports, ok) = additivity_reports(seed, index);
        out.extend(reports);
        qualified += usize::from(ok);
        index += 1;
    }
    out
}

/// `C(T) = -i C(T + X) C(T * X)` for sample `index`.
pub fn ratio_reports(seed: u64, index: u64) -> Vec<CheckReport> {
    let mut rng = sample_rng(seed, index);
    let tree = random_tree(&mut rng, 10, true);
    let name = format!("#{index} {tree}");
    match ratio_identity(&tree.build()) {
        Err(e) => {
            let status = if is_not_gaussian(&e) {
                CheckStatus::Finding
            } else {
                CheckStatus::Indeterminate
            };
            vec![CheckReport::new("ratio", &name, status).note(e)]
        }
        Ok(r) => {
            let report = match r.product() {
                Ok(p) => {
                    let status = if p == r.c {
                        CheckStatus::Pass
                    } else {
                        CheckStatus::Fail
                    };
                    CheckReport::new("ratio", &name, status).sides(&r.c, p)
                }
                Err(e) => CheckReport::new("ratio", &name, CheckStatus::Indeterminate)
                    .sides(&r.c, format!("error: {e}"))
                    .note(format!("C(T+X) = {}, C(T*X) = {}", r.c_east, r.c_south)),
            };
            vec![report]
        }
    }
}

pub fn run_ratio_suite(samples: u64, seed: u64) -> Vec<CheckReport> {
    (0..samples).flat_map(|i| ratio_reports(seed, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::SuiteSummary;

    #[test]
    fn envelope_sizes() {
        assert!(envelope_vectors(Envelope::new(0, 3)).is_empty());
        // 7 counts x 2 bits, plus inf
        assert_eq!(envelope_vectors(Envelope::new(1, 3)).len(), 15);
        let two = envelope_vectors(Envelope::new(2, 1));
        // length 1: 7; length 2: 7 firsts x 6 seconds
        assert_eq!(two.len(), 7 + 7 * 6);
    }

    #[test]
    fn small_envelope_agrees() {
        let reports = run_equivalence_suite(Envelope::new(2, 2));
        let s = SuiteSummary::of(&reports);
        assert!(s.clean(), "{:?}", super::super::non_passing(&reports));
    }

    #[test]
    fn negative_control_fails() {
        let opts = InvarianceOptions {
            corrupt_kink_factor: true,
            ..Default::default()
        };
        let reports = invariance_reports(1, 0, opts);
        assert!(reports
            .iter()
            .any(|r| r.check.starts_with("kink/p") && r.status == CheckStatus::Fail));
        let reports = invariance_reports(1, 0, InvarianceOptions::default());
        assert!(
            reports.iter().all(|r| r.status == CheckStatus::Pass),
            "{reports:?}"
        );
    }

    #[test]
    fn cancellation_family_passes() {
        assert!(cancellation_reports()
            .iter()
            .all(|r| r.status == CheckStatus::Pass));
    }
}
