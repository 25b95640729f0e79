use vtangle_core::conductance::{
    all_paths, classical_fraction_of, closed_form, conductance_recursive, conductance_state_sum,
    continued_fraction_c,
};
use vtangle_core::diagram::{parse_vector, Entry, Twist, VectorError};
use vtangle_core::verify::{
    cancellation_reports, enumerate_classify, run_equivalence_suite, CheckStatus, Envelope,
    SuiteSummary,
};
use vtangle_core::{ExtGauss, TangleVector};

fn v(s: &str) -> TangleVector {
    s.parse().unwrap()
}

fn q(re: (i64, i64), im: (i64, i64)) -> ExtGauss {
    ExtGauss::from_ratio(re, im)
}

#[test]
fn parsing() {
    let parsed = parse_vector("2,-3v,1").unwrap();
    assert_eq!(
        parsed.entries(),
        &[Entry::classical(2), Entry::virt(-3), Entry::classical(1)]
    );
    assert_eq!(
        parse_vector("inf,2").unwrap().entries()[0].twist,
        Twist::Infinity
    );
    assert!(matches!(
        parse_vector("1,0,2"),
        Err(VectorError::TrivialInterior { position: 2, .. })
    ));
    assert!(matches!(
        parse_vector("2,x"),
        Err(VectorError::Syntax { offset: 2, .. })
    ));
}

#[test]
fn conductance_examples() {
    let cases = [
        ("3", q((3, 1), (0, 1))),
        ("1v,1v", q((1, 1), (1, 1))),
        ("2,3,1v", q((9, 7), (1, 1))),
        ("2v", q((2, 1), (1, 1))),
        ("1v,0v,2v", q((1, 1), (0, 1))),
        ("2,3", q((2, 7), (0, 1))),
        ("1v,1", q((3, 5), (1, 5))),
        ("1,1v,0v", q((-2, 5), (4, 5))),
        ("0", ExtGauss::zero()),
    ];
    for (text, expected) in cases {
        let vector = v(text);
        assert_eq!(conductance_state_sum(&vector).unwrap(), expected, "{text}");
        assert_eq!(conductance_recursive(&vector).unwrap(), expected, "{text}");
        assert_eq!(continued_fraction_c(&vector).unwrap(), expected, "{text}");
        if vector.len() <= 3 {
            assert_eq!(closed_form(&vector).unwrap(), expected, "{text}");
        }
    }
}

#[test]
fn classical_fractions() {
    assert_eq!(
        classical_fraction_of(&v("2,3,1")).unwrap(),
        q((9, 7), (0, 1))
    );
    assert_eq!(
        classical_fraction_of(&v("inf,2")).unwrap(),
        q((1, 2), (0, 1))
    );
    assert_eq!(classical_fraction_of(&v("-4")).unwrap(), q((-4, 1), (0, 1)));
}

#[test]
fn all_paths_start_with_the_state_sum() {
    let paths = all_paths(&v("2,3,1v"));
    assert_eq!(paths[0].0.name(), "state-sum");
    assert!(paths
        .iter()
        .all(|(_, r)| r.as_ref().unwrap() == &q((9, 7), (1, 1))));
}

#[test]
fn elementary_envelope() {
    let reports = run_equivalence_suite(Envelope::new(1, 6));
    let s = SuiteSummary::of(&reports);
    assert_eq!(s.fail + s.finding, 0);
    assert!(run_equivalence_suite(Envelope::new(0, 3)).is_empty());
}

#[test]
fn cancellation_family() {
    let reports = cancellation_reports();
    assert_eq!(reports.len(), 15);
    assert!(reports.iter().all(|r| r.status == CheckStatus::Pass));
}

#[test]
fn enumeration_is_deterministic() {
    let (a, sa) = enumerate_classify(Envelope::new(2, 2));
    let (b, sb) = enumerate_classify(Envelope::new(2, 2));
    assert_eq!(a, b);
    assert_eq!(sa, sb);
    assert!(sa.clean());
}
