mod common;

use common::TupleRing;
use irrlab::irreducible::{classify_ring, has_only_harmless_zds};
use irrlab::pattern::{find_counterexamples, Pattern};
use irrlab::ring::build;
use irrlab::verify::builtin_catalog;
use irrlab::{ElementId, RingSpec};

fn moduli(spec: &RingSpec) -> Option<Vec<usize>> {
    match spec {
        RingSpec::Cyclic(n) => Some(vec![*n as usize]),
        RingSpec::Product(children) => children
            .iter()
            .map(|c| match c {
                RingSpec::Cyclic(n) => Some(*n as usize),
                _ => None,
            })
            .collect(),
        RingSpec::Quotient { .. } => None,
    }
}

#[test]
fn classification_matches_tuple_oracle_on_catalog() {
    let mut checked = 0;
    for spec in builtin_catalog() {
        let Some(moduli) = moduli(&spec) else {
            continue;
        };
        let ring = build(&spec).unwrap();
        let oracle = TupleRing::new(&moduli);
        let expected = oracle.all_flags();
        for record in classify_ring(&ring) {
            let i = record.element.index();
            assert_eq!(
                (record.irr, record.b_irr, record.f_irr),
                expected[i],
                "{spec} element {}",
                ring.label(record.element)
            );
            let tuple = &oracle
                .elements
                .iter()
                .find(|e| oracle.index(e) == i)
                .unwrap();
            assert_eq!(record.is_unit, oracle.is_unit(tuple));
            assert_eq!(record.is_zero_divisor, oracle.is_zero_divisor(tuple));
        }
        checked += 1;
    }
    assert_eq!(checked, 29 + 15);
}

// Frozen from an independent brute-force enumeration over integer tuples.
#[test]
fn frozen_b_irreducible_but_reducible_elements() {
    let pattern = Pattern::parse("b_irr and not irr").unwrap();
    let labels = |text: &str| {
        let ring = build(&RingSpec::parse(text).unwrap()).unwrap();
        find_counterexamples(&ring, &pattern)
            .into_iter()
            .map(|e| ring.label(e).to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(labels("zn:6"), ["2", "3", "4"]);
    assert_eq!(labels("zn:12"), ["3", "9"]);
    assert_eq!(labels("prod(zn:2,zn:4)"), ["(0,1)", "(0,3)"]);
    assert!(labels("prod(zn:4,zn:4)").is_empty());
    assert!(labels("zn:8").is_empty());
    assert_eq!(
        labels("prod(zn:3,zn:6)"),
        ["(0,1)", "(1,2)", "(2,2)", "(1,3)", "(2,3)", "(1,4)", "(2,4)", "(0,5)"]
    );
}

#[test]
fn harmless_rings_are_exactly_the_local_catalog_members() {
    for spec in builtin_catalog() {
        let ring = build(&spec).unwrap();
        let expected = match &spec {
            RingSpec::Cyclic(n) => is_prime_power(*n),
            RingSpec::Product(_) => false,
            RingSpec::Quotient { .. } => true,
        };
        assert_eq!(has_only_harmless_zds(&ring), expected, "{spec}");
    }
}

fn is_prime_power(n: u64) -> bool {
    let p = (2..=n).find(|p| n.is_multiple_of(*p)).unwrap();
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

#[test]
fn zero_divisor_example_sets() {
    let ring = build(&RingSpec::parse("zn:6").unwrap()).unwrap();
    let oracle = TupleRing::new(&[6]);
    let zd: Vec<ElementId> = ring.derived().zero_divisors.to_vec();
    let expected: Vec<ElementId> = (0..6)
        .filter(|&r| oracle.is_zero_divisor(&[r]))
        .map(ElementId)
        .collect();
    assert_eq!(zd, expected);
}
