//! Principal ideals and their inclusion order.

use crate::error::{Error, Result};
use crate::ring::{ElementId, FiniteRing};

/// The ideal `rR`. Equality of ideals is equality of element sets.
#[derive(Debug, Clone)]
pub struct PrincipalIdeal {
    ring_id: u64,
    pub generator: ElementId,
    /// Sorted ascending.
    pub elements: Vec<ElementId>,
}

impl PartialEq for PrincipalIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ring_id == other.ring_id && self.elements == other.elements
    }
}

impl Eq for PrincipalIdeal {}

impl PrincipalIdeal {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, r: ElementId) -> bool {
        self.elements.binary_search(&r).is_ok()
    }
}

pub fn principal_ideal(ring: &FiniteRing, r: ElementId) -> PrincipalIdeal {
    PrincipalIdeal {
        ring_id: ring.ring_id(),
        generator: r,
        elements: ring.multiples(r).to_vec(),
    }
}

/// Inclusion `I ⊆ J`.
pub fn ideal_leq(i: &PrincipalIdeal, j: &PrincipalIdeal) -> Result<bool> {
    if i.ring_id != j.ring_id {
        return Err(Error::Usage(
            "cannot compare ideals of different rings".into(),
        ));
    }
    Ok(i.elements.iter().all(|&x| j.contains(x)))
}

/// True iff `(r)` is proper and no proper principal ideal strictly contains it.
pub fn is_max_principal_proper(ring: &FiniteRing, r: ElementId) -> bool {
    if ring.is_unit(r) {
        return false;
    }
    let ideal = ring.multiples(r);
    ring.elements().filter(|&s| !ring.is_unit(s)).all(|s| {
        let other = ring.multiples(s);
        !ideal.is_subset(other) || ideal == other
    })
}

/// Distinct principal ideals with the covering relation of inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalPoset {
    /// Sorted by (size, smallest generator); each generator is the smallest one.
    pub ideals: Vec<PrincipalIdeal>,
    /// `(lower, upper)` index pairs into `ideals` with nothing strictly between.
    pub covers: Vec<(usize, usize)>,
}

pub fn principal_poset(ring: &FiniteRing) -> PrincipalPoset {
    let mut ideals: Vec<PrincipalIdeal> = Vec::new();
    for r in ring.elements() {
        let ideal = principal_ideal(ring, r);
        if !ideals.contains(&ideal) {
            ideals.push(ideal);
        }
    }
    ideals.sort_by_key(|i| (i.len(), i.generator));

    let below =
        |a: usize, b: usize| a != b && ideal_leq(&ideals[a], &ideals[b]).expect("same ring");
    let mut covers = Vec::new();
    for a in 0..ideals.len() {
        for b in 0..ideals.len() {
            if below(a, b) && !(0..ideals.len()).any(|c| below(a, c) && below(c, b)) {
                covers.push((a, b));
            }
        }
    }
    PrincipalPoset { ideals, covers }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_cyclic, make_product};

    fn ids(xs: &[usize]) -> Vec<ElementId> {
        xs.iter().copied().map(ElementId).collect()
    }

    #[test]
    fn principal_ideals_of_z6() {
        let z6 = make_cyclic(6).unwrap();
        assert_eq!(principal_ideal(&z6, ElementId(3)).elements, ids(&[0, 3]));
        assert_eq!(principal_ideal(&z6, ElementId(2)).elements, ids(&[0, 2, 4]));
        assert_eq!(principal_ideal(&z6, z6.one()).len(), 6);
        // associates give the same ideal
        assert_eq!(
            principal_ideal(&z6, ElementId(1)),
            principal_ideal(&z6, ElementId(5))
        );
    }

    #[test]
    fn inclusion() {
        let z6 = make_cyclic(6).unwrap();
        let p = |r| principal_ideal(&z6, ElementId(r));
        assert!(ideal_leq(&p(3), &p(3)).unwrap());
        assert!(ideal_leq(&p(0), &p(2)).unwrap());
        assert!(!ideal_leq(&p(3), &p(2)).unwrap());

        let other = make_cyclic(6).unwrap();
        let q = principal_ideal(&other, ElementId(3));
        assert!(matches!(ideal_leq(&p(3), &q), Err(Error::Usage(_))));
    }

    #[test]
    fn maximal_proper() {
        let z6 = make_cyclic(6).unwrap();
        assert!(is_max_principal_proper(&z6, ElementId(3)));
        assert!(!is_max_principal_proper(&z6, ElementId(0)));
        assert!(!is_max_principal_proper(&z6, ElementId(5)));
        let z4 = make_cyclic(4).unwrap();
        assert!(is_max_principal_proper(&z4, ElementId(2)));
    }

    #[test]
    fn posets() {
        let z6 = make_cyclic(6).unwrap();
        let poset = principal_poset(&z6);
        let sets: Vec<Vec<ElementId>> = poset.ideals.iter().map(|i| i.elements.clone()).collect();
        assert_eq!(
            sets,
            vec![
                ids(&[0]),
                ids(&[0, 3]),
                ids(&[0, 2, 4]),
                ids(&[0, 1, 2, 3, 4, 5])
            ]
        );
        assert_eq!(poset.covers, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);

        let z5 = make_cyclic(5).unwrap();
        assert_eq!(principal_poset(&z5).ideals.len(), 2);

        let z2 = make_cyclic(2).unwrap();
        let v4 = make_product(&[z2.clone(), z2]).unwrap();
        let poset = principal_poset(&v4);
        assert_eq!(poset.ideals.len(), 4);
        let gens: Vec<&str> = poset.ideals.iter().map(|i| v4.label(i.generator)).collect();
        assert_eq!(gens, ["(0,0)", "(1,0)", "(0,1)", "(1,1)"]);
    }
}
