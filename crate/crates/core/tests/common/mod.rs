//! Brute-force reference computations on products of cyclic rings using
//! plain integer tuples. Shares no code with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// `Z_{n_1} x .. x Z_{n_k}` on integer tuples.
pub struct TupleRing {
    pub moduli: Vec<usize>,
    pub elements: Vec<Vec<usize>>,
}

/// Irreducibility flags per element: (irr, b_irr, f_irr).
pub type Flags = (bool, bool, bool);

impl TupleRing {
    pub fn new(moduli: &[usize]) -> Self {
        let mut elements = vec![vec![]];
        for &n in moduli {
            elements = elements
                .into_iter()
                .flat_map(|prefix: Vec<usize>| {
                    (0..n).map(move |a| {
                        let mut v = prefix.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
        }
        TupleRing {
            moduli: moduli.to_vec(),
            elements,
        }
    }

    /// Index with the first coordinate least significant.
    pub fn index(&self, a: &[usize]) -> usize {
        let mut idx = 0;
        let mut radix = 1;
        for (x, n) in a.iter().zip(&self.moduli) {
            idx += x * radix;
            radix *= n;
        }
        idx
    }

    pub fn mul(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        a.iter()
            .zip(b)
            .zip(&self.moduli)
            .map(|((x, y), n)| x * y % n)
            .collect()
    }

    pub fn one(&self) -> Vec<usize> {
        vec![1; self.moduli.len()]
    }

    pub fn is_zero(&self, a: &[usize]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    pub fn is_unit(&self, a: &[usize]) -> bool {
        let one = self.one();
        self.elements.iter().any(|b| self.mul(a, b) == one)
    }

    pub fn ideal(&self, a: &[usize]) -> BTreeSet<Vec<usize>> {
        self.elements.iter().map(|s| self.mul(a, s)).collect()
    }

    pub fn is_zero_divisor(&self, a: &[usize]) -> bool {
        !self.is_zero(a)
            && self
                .elements
                .iter()
                .any(|b| !self.is_zero(b) && self.is_zero(&self.mul(a, b)))
    }

    pub fn flags(&self, r: &[usize]) -> Flags {
        let pairs: Vec<(&Vec<usize>, &Vec<usize>)> = self
            .elements
            .iter()
            .flat_map(|a| self.elements.iter().map(move |b| (a, b)))
            .filter(|(a, b)| self.mul(a, b) == r)
            .collect();
        let irr = pairs
            .iter()
            .all(|(a, b)| self.is_unit(a) || self.is_unit(b));
        let ideal = self.ideal(r);
        let unit = self.is_unit(r);
        let b_irr = !self.is_zero(r)
            && !unit
            && self.elements.iter().filter(|s| !self.is_unit(s)).all(|s| {
                let other = self.ideal(s);
                !ideal.is_subset(&other) || ideal == other
            });
        let f_irr = !unit
            && pairs
                .iter()
                .all(|(a, b)| ideal.contains(*a) || ideal.contains(*b));
        (irr, b_irr, f_irr)
    }

    pub fn all_flags(&self) -> Vec<Flags> {
        let mut out = vec![(false, false, false); self.elements.len()];
        for e in &self.elements {
            out[self.index(e)] = self.flags(e);
        }
        out
    }
}
