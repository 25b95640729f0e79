use num_bigint::BigInt;
use proptest::prelude::*;

use vtangle_core::conductance::{
    classical_fraction_of, conductance_recursive, conductance_state_sum, continued_fraction_c,
};
use vtangle_core::diagram::{build_basic, insert_kink, Endpoint, Entry, TangleVector, Twist};
use vtangle_core::verify::{random_tree, sample_rng};
use vtangle_core::{bracket, Cyc8, ExtGauss, LaurentPoly};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-5i64..=5, -6i64..=6), 0..6).prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(c, e)| (e, BigInt::from(c))))
    })
}

fn cyc8() -> impl Strategy<Value = Cyc8> {
    prop::array::uniform4(-4i64..=4).prop_map(Cyc8::from_i64)
}

fn gauss() -> impl Strategy<Value = ExtGauss> {
    prop_oneof![
        1 => Just(ExtGauss::Infinity),
        8 => (-5i64..=5, 1i64..=4, -5i64..=5, 1i64..=4)
            .prop_map(|(a, b, c, d)| ExtGauss::from_ratio((a, b), (c, d))),
    ]
}

/// Valid vectors of length 1..=3 with small counts, classical or not.
fn vector(allow_virtual: bool) -> impl Strategy<Value = TangleVector> {
    prop::collection::vec((-3i64..=3, any::<bool>()), 1..=3).prop_filter_map(
        "invalid vector",
        move |raw| {
            let entries = raw
                .into_iter()
                .map(|(a, v)| {
                    if allow_virtual && v {
                        Entry::virt(a)
                    } else {
                        Entry::classical(a)
                    }
                })
                .collect();
            TangleVector::new(entries).ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn laurent_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn laurent_text_round_trip(p in poly()) {
        let back: LaurentPoly = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn evaluation_is_a_ring_map(p in poly(), q in poly()) {
        prop_assert_eq!((&p + &q).eval_at_zeta8(), p.eval_at_zeta8() + q.eval_at_zeta8());
        prop_assert_eq!((&p * &q).eval_at_zeta8(), p.eval_at_zeta8() * q.eval_at_zeta8());
    }

    #[test]
    fn loop_factor_vanishes_at_zeta8(p in poly()) {
        prop_assert!((&p * &LaurentPoly::loop_factor()).eval_at_zeta8().is_zero());
    }

    #[test]
    fn cyc8_division_inverts_multiplication(x in cyc8(), y in cyc8()) {
        prop_assume!(!y.is_zero());
        let q = x.checked_div(&y).unwrap();
        prop_assert_eq!(&q * &y, x);
    }

    #[test]
    fn ext_gauss_invert_is_an_involution(z in gauss()) {
        prop_assert_eq!(z.invert().invert(), z.clone());
        if let (false, false) = (z.is_zero(), z.is_infinite()) {
            prop_assert_eq!(z.mul(&z.invert()).unwrap(), ExtGauss::one());
        }
    }

    #[test]
    fn vector_text_round_trip(v in vector(true)) {
        let back: TangleVector = v.to_string().parse().unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn classical_vectors_have_classical_brackets(v in vector(false)) {
        let b = bracket(&build_basic(&v));
        prop_assert!(b.is_classical());
        let c = conductance_state_sum(&v).unwrap();
        prop_assert!(c.is_real());
        prop_assert_eq!(c, classical_fraction_of(&v).unwrap());
    }

    #[test]
    fn computation_paths_agree(v in vector(true)) {
        let oracle = conductance_state_sum(&v);
        for other in [conductance_recursive(&v), continued_fraction_c(&v)] {
            if let (Ok(a), Ok(b)) = (&oracle, &other) {
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn bracket_composes(seed in any::<u64>()) {
        let t = random_tree(&mut sample_rng(seed, 0), 5, true).build();
        let s = random_tree(&mut sample_rng(seed, 1), 5, true).build();
        let (bt, bs) = (bracket(&t), bracket(&s));
        prop_assert_eq!(bracket(&t.plus(&s)), bt.plus(&bs));
        prop_assert_eq!(bracket(&t.star(&s)), bt.star(&bs));
    }

    #[test]
    fn half_turn_keeps_the_bracket(seed in any::<u64>()) {
        let t = random_tree(&mut sample_rng(seed, 0), 8, true).build();
        prop_assert_eq!(bracket(&t.rotate_pi()), bracket(&t));
    }

    #[test]
    fn kinks_scale_by_minus_a_cubed(seed in any::<u64>(), corner in 0usize..4, positive in any::<bool>()) {
        let t = random_tree(&mut sample_rng(seed, 0), 6, true).build();
        let e = if positive { 3 } else { -3 };
        let expected = bracket(&t).scale(&LaurentPoly::monomial(BigInt::from(-1), e));
        prop_assert_eq!(bracket(&insert_kink(&t, Endpoint::ALL[corner], positive)), expected);
    }
}

#[test]
fn infinity_vectors_parse() {
    let v: TangleVector = "inf,2".parse().unwrap();
    assert_eq!(v.entries()[0].twist, Twist::Infinity);
}
