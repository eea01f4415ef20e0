use proptest::prelude::*;

use irrlab::ideal::{principal_ideal, principal_poset};
use irrlab::irreducible::{
    classify_ring, has_only_harmless_zds, is_f_irreducible, is_f_irreducible_refinement,
};
use irrlab::ring::{build, check_axioms, check_derived, is_local, make_product};
use irrlab::verify::{check_proposition, PropId, Verdict};
use irrlab::{FiniteRing, RingSpec};

fn cyclic() -> impl Strategy<Value = RingSpec> {
    (2u64..=12).prop_map(RingSpec::Cyclic)
}

fn quotient() -> impl Strategy<Value = RingSpec> {
    (2u64..=4, 1usize..=3)
        .prop_filter("order at most 64", |&(n, d)| n.pow(d as u32) <= 64)
        .prop_flat_map(|(n, d)| {
            proptest::collection::vec(0..n, d).prop_map(move |mut low| {
                low.push(1);
                RingSpec::Quotient { n, modulus: low }
            })
        })
}

fn leaf() -> impl Strategy<Value = RingSpec> {
    prop_oneof![cyclic(), quotient()]
}

fn order(spec: &RingSpec) -> u64 {
    match spec {
        RingSpec::Cyclic(n) => *n,
        RingSpec::Product(c) => c.iter().map(order).product(),
        RingSpec::Quotient { n, modulus } => n.pow(modulus.len() as u32 - 1),
    }
}

/// Rings of order at most 64: leaves and products of two or three leaves.
fn small_spec() -> impl Strategy<Value = RingSpec> {
    prop_oneof![
        leaf(),
        proptest::collection::vec(leaf(), 2..=3).prop_map(RingSpec::Product),
    ]
    .prop_filter("order at most 64", |s| order(s) <= 64)
}

fn ring(spec: &RingSpec) -> FiniteRing {
    build(spec).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spec_round_trips(spec in small_spec()) {
        prop_assert_eq!(RingSpec::parse(&spec.to_string()).unwrap(), spec);
    }

    #[test]
    fn constructed_rings_satisfy_axioms(spec in small_spec()) {
        let r = ring(&spec);
        prop_assert_eq!(r.order() as u64, order(&spec));
        prop_assert!(check_axioms(&r).is_ok());
        prop_assert!(check_derived(&r).is_ok());
    }

    #[test]
    fn ideal_membership_matches_inclusion(spec in small_spec()) {
        let r = ring(&spec);
        let ideals: Vec<_> = r.elements().map(|x| principal_ideal(&r, x)).collect();
        for x in r.elements() {
            prop_assert!(ideals[x.index()].contains(x) && ideals[x.index()].contains(r.zero()));
            prop_assert_eq!(ideals[x.index()].len() == r.order(), r.is_unit(x));
            for s in r.elements() {
                let included = ideals[x.index()].elements.iter().all(|&e| ideals[s.index()].contains(e));
                prop_assert_eq!(ideals[s.index()].contains(x), included);
            }
        }
        let poset = principal_poset(&r);
        prop_assert!(poset.ideals.len() <= r.order());
        if r.derived().zero_divisors.is_empty() {
            prop_assert_eq!(poset.ideals.len(), 2);
        }
    }

    #[test]
    fn record_invariants(spec in small_spec()) {
        let r = ring(&spec);
        for c in classify_ring(&r) {
            prop_assert!(!c.is_harmless_zd || c.is_zero_divisor);
            prop_assert!(!c.b_irr || c.is_nonzero_non_unit());
            prop_assert!(!c.f_irr || !c.is_unit);
            if c.is_unit {
                prop_assert!(c.irr && !c.b_irr && !c.f_irr);
            }
        }
    }

    #[test]
    fn universal_propositions_hold(spec in small_spec()) {
        let r = ring(&spec);
        for id in [PropId::P1, PropId::P2, PropId::P3, PropId::P4, PropId::C1] {
            let report = check_proposition(id, &r).unwrap();
            prop_assert_ne!(report.verdict, Verdict::CounterexamplesFound, "{} on {}", id, spec);
        }
        if spec.is_product() {
            let report = check_proposition(PropId::P5, &r).unwrap();
            prop_assert_eq!(report.verdict, Verdict::Holds);
            for id in [PropId::P6, PropId::P7] {
                let report = check_proposition(id, &r).unwrap();
                prop_assert_ne!(report.restricted_verdict, Some(Verdict::CounterexamplesFound));
            }
        }
    }

    #[test]
    fn local_rings_have_only_harmless_zero_divisors(spec in small_spec()) {
        let r = ring(&spec);
        if is_local(&r) {
            prop_assert!(r.derived().zero_divisors.is_subset(&r.derived().one_minus_units));
            prop_assert!(has_only_harmless_zds(&r));
        }
    }

    #[test]
    fn refinement_oracle_matches_binary_test(spec in small_spec().prop_filter("order at most 12", |s| order(s) <= 12)) {
        let r = ring(&spec);
        for x in r.elements().filter(|&x| !r.is_unit(x)) {
            prop_assert_eq!(
                is_f_irreducible_refinement(&r, x, 3).unwrap(),
                is_f_irreducible(&r, x),
                "{} in {}", r.label(x), spec
            );
        }
    }

    #[test]
    fn one_factor_product_keeps_tables(spec in leaf()) {
        let r = ring(&spec);
        let p = make_product(std::slice::from_ref(&r)).unwrap();
        for a in r.elements() {
            for b in r.elements() {
                prop_assert_eq!(p.add(a, b), r.add(a, b));
                prop_assert_eq!(p.mul(a, b), r.mul(a, b));
            }
        }
    }
}
