//! The three irreducibility notions, harmless zero divisors and per-element
//! classification.
//!
//! Predicates are raw: they accept every element, including 0 and units.
//! Hypotheses such as "nonzero non-unit" belong to the callers that quantify
//! over elements.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::is_max_principal_proper;
use crate::ring::{ElementId, FiniteRing};

/// Largest ring order accepted by [`is_f_irreducible_refinement`].
pub const REFINEMENT_MAX_ORDER: usize = 12;
/// Largest factorization length accepted by [`is_f_irreducible_refinement`].
pub const REFINEMENT_MAX_LEN: usize = 4;

/// Classical irreducibility: every `r = ab` has a unit factor.
pub fn is_irreducible(ring: &FiniteRing, r: ElementId) -> bool {
    factor_pairs(ring, r).all(|(a, b)| ring.is_unit(a) || ring.is_unit(b))
}

/// Nonzero non-unit whose principal ideal is maximal among proper principal ideals.
pub fn is_b_irreducible(ring: &FiniteRing, r: ElementId) -> bool {
    r != ring.zero() && !ring.is_unit(r) && is_max_principal_proper(ring, r)
}

/// Non-unit such that every `r = ab` has `a ∈ (r)` or `b ∈ (r)`.
pub fn is_f_irreducible(ring: &FiniteRing, r: ElementId) -> bool {
    if ring.is_unit(r) {
        return false;
    }
    let ideal = ring.multiples(r);
    factor_pairs(ring, r).all(|(a, b)| ideal.contains(a) || ideal.contains(b))
}

/// Zero divisor `r` with `1 - r` a unit.
pub fn is_harmless_zd(ring: &FiniteRing, r: ElementId) -> bool {
    ring.is_zero_divisor(r) && ring.is_unit(ring.sub(ring.one(), r))
}

pub fn has_only_harmless_zds(ring: &FiniteRing) -> bool {
    harmful_zero_divisor(ring).is_none()
}

/// Smallest zero divisor that is not harmless, if any.
pub fn harmful_zero_divisor(ring: &FiniteRing) -> Option<ElementId> {
    ring.derived()
        .zero_divisors
        .iter()
        .find(|&r| !is_harmless_zd(ring, r))
}

/// Ordered pairs `(a, b)` with `ab = r`.
fn factor_pairs(
    ring: &FiniteRing,
    r: ElementId,
) -> impl Iterator<Item = (ElementId, ElementId)> + '_ {
    ring.elements()
        .flat_map(move |a| ring.elements().map(move |b| (a, b)))
        .filter(move |&(a, b)| ring.mul(a, b) == r)
}

/// A factorization `product = f_1 * .. * f_k` with `k >= 2`, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<ElementId>,
    product: ElementId,
}

impl Factorization {
    pub fn new(ring: &FiniteRing, mut factors: Vec<ElementId>) -> Result<Self> {
        if factors.len() < 2 {
            return Err(Error::Usage(
                "a factorization needs at least two factors".into(),
            ));
        }
        factors.sort();
        let product = factors.iter().fold(ring.one(), |acc, &f| ring.mul(acc, f));
        Ok(Factorization { factors, product })
    }

    pub fn factors(&self) -> &[ElementId] {
        &self.factors
    }

    pub fn product(&self) -> ElementId {
        self.product
    }

    pub fn contains(&self, r: ElementId) -> bool {
        self.factors.contains(&r)
    }
}

/// F-irreducibility straight from the refinement definition, searched up to
/// factorizations of length `max_len`.
///
/// Every factorization of `r` with at most `max_len` factors must reach, by
/// repeatedly replacing one factor with a factorization of it, a multiset
/// containing `r`. The empty chain counts. Refinements may grow to
/// `max_len + 1` factors, since each step adds at least one factor and a
/// factorization of full length must still be refinable. Limited to rings of
/// order at most [`REFINEMENT_MAX_ORDER`] and `max_len` at most
/// [`REFINEMENT_MAX_LEN`].
pub fn is_f_irreducible_refinement(
    ring: &FiniteRing,
    r: ElementId,
    max_len: usize,
) -> Result<bool> {
    if ring.order() > REFINEMENT_MAX_ORDER {
        return Err(Error::Usage(format!(
            "refinement search is capped at ring order {REFINEMENT_MAX_ORDER}"
        )));
    }
    if !(2..=REFINEMENT_MAX_LEN).contains(&max_len) {
        return Err(Error::Usage(format!(
            "refinement length must lie in 2..={REFINEMENT_MAX_LEN}"
        )));
    }
    if ring.is_unit(r) {
        return Err(Error::Usage(format!(
            "{} is a unit; F-irreducibility is defined for non-units",
            ring.label(r)
        )));
    }
    let mut search = RefinementSearch {
        ring,
        target: r,
        max_len: max_len + 1,
        splits: HashMap::new(),
        reachable: HashMap::new(),
    };
    for len in 2..=max_len {
        for factors in search.factorizations(r, len) {
            if !search.refines_to_target(factors) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

struct RefinementSearch<'a> {
    ring: &'a FiniteRing,
    target: ElementId,
    /// Cap on the length of refined factorizations.
    max_len: usize,
    splits: HashMap<(ElementId, usize), Vec<Vec<ElementId>>>,
    reachable: HashMap<Vec<ElementId>, bool>,
}

impl RefinementSearch<'_> {
    /// Sorted multisets of `len` elements whose product is `x`.
    fn factorizations(&mut self, x: ElementId, len: usize) -> Vec<Vec<ElementId>> {
        if let Some(found) = self.splits.get(&(x, len)) {
            return found.clone();
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(len);
        collect_multisets(self.ring, x, len, self.ring.one(), &mut current, &mut out);
        self.splits.insert((x, len), out.clone());
        out
    }

    fn refines_to_target(&mut self, factors: Vec<ElementId>) -> bool {
        if factors.contains(&self.target) {
            return true;
        }
        if let Some(&known) = self.reachable.get(&factors) {
            return known;
        }
        let room = self.max_len - factors.len();
        let mut found = false;
        'outer: for i in 0..factors.len() {
            if i > 0 && factors[i] == factors[i - 1] {
                continue;
            }
            for extra in 1..=room {
                for split in self.factorizations(factors[i], extra + 1) {
                    let mut next: Vec<ElementId> = factors
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, &f)| f)
                        .chain(split)
                        .collect();
                    next.sort();
                    if self.refines_to_target(next) {
                        found = true;
                        break 'outer;
                    }
                }
            }
        }
        self.reachable.insert(factors, found);
        found
    }
}

fn collect_multisets(
    ring: &FiniteRing,
    target: ElementId,
    remaining: usize,
    acc: ElementId,
    current: &mut Vec<ElementId>,
    out: &mut Vec<Vec<ElementId>>,
) {
    if remaining == 0 {
        if acc == target {
            out.push(current.clone());
        }
        return;
    }
    let start = current.last().map_or(0, |e| e.index());
    for x in start..ring.order() {
        let x = ElementId(x);
        current.push(x);
        collect_multisets(ring, target, remaining - 1, ring.mul(acc, x), current, out);
        current.pop();
    }
}

/// Per-element flags, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flag {
    Zero,
    Unit,
    Zd,
    Harmless,
    Irr,
    BIrr,
    FIrr,
}

impl Flag {
    pub const ALL: [Flag; 7] = [
        Flag::Zero,
        Flag::Unit,
        Flag::Zd,
        Flag::Harmless,
        Flag::Irr,
        Flag::BIrr,
        Flag::FIrr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Flag::Zero => "zero",
            Flag::Unit => "unit",
            Flag::Zd => "zd",
            Flag::Harmless => "harmless",
            Flag::Irr => "irr",
            Flag::BIrr => "b_irr",
            Flag::FIrr => "f_irr",
        }
    }

    pub fn from_name(name: &str) -> Option<Flag> {
        Flag::ALL.into_iter().find(|f| f.name() == name)
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassificationRecord {
    pub element: ElementId,
    pub is_zero: bool,
    pub is_unit: bool,
    pub is_zero_divisor: bool,
    pub is_harmless_zd: bool,
    pub irr: bool,
    pub b_irr: bool,
    pub f_irr: bool,
}

impl ClassificationRecord {
    pub fn get(&self, flag: Flag) -> bool {
        match flag {
            Flag::Zero => self.is_zero,
            Flag::Unit => self.is_unit,
            Flag::Zd => self.is_zero_divisor,
            Flag::Harmless => self.is_harmless_zd,
            Flag::Irr => self.irr,
            Flag::BIrr => self.b_irr,
            Flag::FIrr => self.f_irr,
        }
    }

    /// Flags in the fixed order zero, unit, zd, harmless, irr, b_irr, f_irr.
    pub fn flags(&self) -> [bool; 7] {
        Flag::ALL.map(|f| self.get(f))
    }

    pub fn is_nonzero_non_unit(&self) -> bool {
        !self.is_zero && !self.is_unit
    }

    /// All three irreducibility flags agree.
    pub fn notions_agree(&self) -> bool {
        self.irr == self.b_irr && self.b_irr == self.f_irr
    }
}

pub fn classify_element(ring: &FiniteRing, r: ElementId) -> ClassificationRecord {
    ClassificationRecord {
        element: r,
        is_zero: r == ring.zero(),
        is_unit: ring.is_unit(r),
        is_zero_divisor: ring.is_zero_divisor(r),
        is_harmless_zd: is_harmless_zd(ring, r),
        irr: is_irreducible(ring, r),
        b_irr: is_b_irreducible(ring, r),
        f_irr: is_f_irreducible(ring, r),
    }
}

/// Classification of every element, in `ElementId` order.
pub fn classify_ring(ring: &FiniteRing) -> Vec<ClassificationRecord> {
    ring.elements().map(|r| classify_element(ring, r)).collect()
}
