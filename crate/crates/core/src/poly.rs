//! Polynomials over a finite base ring and bounded-degree checks of the
//! identity `(t) = J(A[x]) = Z(A[x])` for an Artinian local principal ideal
//! ring `A` with maximal ideal `(t)`.
//!
//! `A[x]` is infinite, so membership questions are decided per element:
//! zero divisors by the constant-annihilator (McCoy) criterion and units by
//! "unit constant term, nilpotent higher coefficients". Both are checked
//! against bounded brute force in the tests.

use crate::error::{Error, Result};
use crate::ring::{is_local, render_terms, ElementId, FiniteRing};

/// Upper bound on the number of polynomials in one slice.
pub const MAX_SLICE: usize = 1_000_000;

/// Little-endian coefficients with no trailing zeros; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    coeffs: Vec<ElementId>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn new(base: &FiniteRing, mut coeffs: Vec<ElementId>) -> Poly {
        while coeffs.last() == Some(&base.zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(base: &FiniteRing, c: ElementId) -> Poly {
        Poly::new(base, vec![c])
    }

    /// `x` itself.
    pub fn x(base: &FiniteRing) -> Poly {
        Poly::new(base, vec![base.zero(), base.one()])
    }

    pub fn coeffs(&self) -> &[ElementId] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn coeff(&self, base: &FiniteRing, i: usize) -> ElementId {
        self.coeffs.get(i).copied().unwrap_or(base.zero())
    }

    /// `c0 + c1*x + ..` with zero terms omitted.
    pub fn render(&self, base: &FiniteRing) -> String {
        let terms: Vec<(String, bool)> = self
            .coeffs
            .iter()
            .map(|&c| (base.label(c).to_string(), c == base.one()))
            .collect();
        render_terms(&terms, &|i| self.coeffs[i] == base.zero(), "x")
    }
}

pub fn poly_add(base: &FiniteRing, f: &Poly, g: &Poly) -> Poly {
    let len = f.coeffs.len().max(g.coeffs.len());
    let coeffs = (0..len)
        .map(|i| base.add(f.coeff(base, i), g.coeff(base, i)))
        .collect();
    Poly::new(base, coeffs)
}

pub fn poly_neg(base: &FiniteRing, f: &Poly) -> Poly {
    Poly::new(base, f.coeffs.iter().map(|&c| base.neg(c)).collect())
}

pub fn poly_sub(base: &FiniteRing, f: &Poly, g: &Poly) -> Poly {
    poly_add(base, f, &poly_neg(base, g))
}

pub fn poly_mul(base: &FiniteRing, f: &Poly, g: &Poly) -> Poly {
    if f.is_zero() || g.is_zero() {
        return Poly::zero();
    }
    let mut coeffs = vec![base.zero(); f.coeffs.len() + g.coeffs.len() - 1];
    for (i, &a) in f.coeffs.iter().enumerate() {
        for (j, &b) in g.coeffs.iter().enumerate() {
            coeffs[i + j] = base.add(coeffs[i + j], base.mul(a, b));
        }
    }
    Poly::new(base, coeffs)
}

/// Smallest nonzero constant annihilating `f`, if any. `f` must be nonzero.
pub fn is_zd_poly(base: &FiniteRing, f: &Poly) -> Result<Option<ElementId>> {
    if f.is_zero() {
        return Err(Error::Usage(
            "the zero polynomial is not a zero divisor by convention".into(),
        ));
    }
    Ok(base
        .elements()
        .filter(|&c| c != base.zero())
        .find(|&c| f.coeffs.iter().all(|&a| base.mul(c, a) == base.zero())))
}

/// Unit constant term and nilpotent higher coefficients.
pub fn is_unit_poly(base: &FiniteRing, f: &Poly) -> bool {
    let d = base.derived();
    match f.coeffs.split_first() {
        None => false,
        Some((&c0, rest)) => d.units.contains(c0) && rest.iter().all(|&c| d.nilradical.contains(c)),
    }
}

/// Generator `t` of the maximal ideal when `base` is local with a principal
/// maximal ideal; the smallest such generator is returned.
pub fn maximal_ideal_generator(base: &FiniteRing) -> Result<ElementId> {
    if !is_local(base) {
        return Err(Error::Usage(format!("{} is not a local ring", base.spec())));
    }
    let units = &base.derived().units;
    base.elements()
        .filter(|&t| !units.contains(t))
        .find(|&t| {
            base.elements()
                .all(|r| base.multiples(t).contains(r) != units.contains(r))
        })
        .ok_or_else(|| {
            Error::Usage(format!(
                "the maximal ideal of {} is not principal",
                base.spec()
            ))
        })
}

/// All polynomials of degree at most `degree`, in mixed-radix order of their
/// coefficient vectors (constant term least significant).
pub fn slice(base: &FiniteRing, degree: usize) -> Result<Vec<Poly>> {
    let len = degree + 1;
    let count = base
        .order()
        .checked_pow(len as u32)
        .filter(|&c| c <= MAX_SLICE)
        .ok_or_else(|| {
            Error::Usage(format!(
                "slice of degree {degree} exceeds {MAX_SLICE} polynomials"
            ))
        })?;
    Ok((0..count)
        .map(|mut index| {
            let coeffs = (0..len)
                .map(|_| {
                    let c = index % base.order();
                    index /= base.order();
                    ElementId(c)
                })
                .collect();
            Poly::new(base, coeffs)
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceWitness {
    pub check: &'static str,
    pub poly: String,
    pub detail: String,
}

/// Outcome of [`bounded_slice_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceReport {
    pub base: String,
    pub degree: usize,
    /// Label of the maximal-ideal generator `t`.
    pub generator: String,
    pub examined: usize,
    pub zero_divisors: usize,
    pub harmless: usize,
    /// Every zero divisor `f` has `1 - f` a unit.
    pub harmless_pass: bool,
    /// Zero divisors are exactly the nonzero members of `t * slice`.
    pub zd_equals_t_pass: bool,
    /// The Nil(A)-coefficient slice equals `t * slice`.
    pub nil_equals_t_pass: bool,
    /// `1 - f*g` is a unit for every `f` in the Nil slice and `g` in the slice.
    pub jacobson_pass: bool,
    /// Sorted by (check, polynomial).
    pub witnesses: Vec<SliceWitness>,
}

impl SliceReport {
    pub fn passed(&self) -> bool {
        self.harmless_pass && self.zd_equals_t_pass && self.nil_equals_t_pass && self.jacobson_pass
    }
}

pub const CHECK_HARMLESS: &str = "harmless";
pub const CHECK_ZD_EQ_T: &str = "zd_equals_t";
pub const CHECK_NIL_EQ_T: &str = "nil_equals_t";
pub const CHECK_JACOBSON: &str = "jacobson";

/// Enumerates every polynomial of degree at most `degree` over `base` and
/// checks harmlessness of zero divisors and the slice identity
/// `Z = (t) = Nil(A)[x]`, plus the `1 - fg` unit criterion on the Nil slice.
pub fn bounded_slice_check(base: &FiniteRing, degree: usize) -> Result<SliceReport> {
    if degree < 1 {
        return Err(Error::Usage("degree bound must be at least 1".into()));
    }
    let t = maximal_ideal_generator(base)?;
    let polys = slice(base, degree)?;
    let one = Poly::constant(base, base.one());
    let nil = &base.derived().nilradical;
    let mut witnesses = Vec::new();

    let mut zero_divisors = Vec::new();
    let mut harmless = 0;
    for f in polys.iter().filter(|f| !f.is_zero()) {
        if is_zd_poly(base, f)?.is_some() {
            zero_divisors.push(f.clone());
            if is_unit_poly(base, &poly_sub(base, &one, f)) {
                harmless += 1;
            } else {
                witnesses.push(SliceWitness {
                    check: CHECK_HARMLESS,
                    poly: f.render(base),
                    detail: "1 - f is not a unit".into(),
                });
            }
        }
    }

    let tp = Poly::constant(base, t);
    let mut t_multiples: Vec<Poly> = polys.iter().map(|g| poly_mul(base, &tp, g)).collect();
    t_multiples.sort();
    t_multiples.dedup();
    let mut nil_slice: Vec<Poly> = polys
        .iter()
        .filter(|f| f.coeffs.iter().all(|&c| nil.contains(c)))
        .cloned()
        .collect();
    nil_slice.sort();

    let mut zd_with_zero = zero_divisors.clone();
    zd_with_zero.push(Poly::zero());
    zd_with_zero.sort();
    let zd_equals_t = record_difference(
        base,
        CHECK_ZD_EQ_T,
        &zd_with_zero,
        &t_multiples,
        &mut witnesses,
    );
    let nil_equals_t = record_difference(
        base,
        CHECK_NIL_EQ_T,
        &nil_slice,
        &t_multiples,
        &mut witnesses,
    );

    let mut jacobson_pass = true;
    for f in &nil_slice {
        if let Some(g) = polys
            .iter()
            .find(|g| !is_unit_poly(base, &poly_sub(base, &one, &poly_mul(base, f, g))))
        {
            jacobson_pass = false;
            witnesses.push(SliceWitness {
                check: CHECK_JACOBSON,
                poly: f.render(base),
                detail: format!("1 - f*g is not a unit for g = {}", g.render(base)),
            });
        }
    }

    witnesses.sort_by(|a, b| (a.check, &a.poly).cmp(&(b.check, &b.poly)));
    Ok(SliceReport {
        base: base.spec().to_string(),
        degree,
        generator: base.label(t).to_string(),
        examined: polys.len(),
        zero_divisors: zero_divisors.len(),
        harmless,
        harmless_pass: harmless == zero_divisors.len(),
        zd_equals_t_pass: zd_equals_t,
        nil_equals_t_pass: nil_equals_t,
        jacobson_pass,
        witnesses,
    })
}

/// Compares two sorted sets, recording every element of the symmetric difference.
fn record_difference(
    base: &FiniteRing,
    check: &'static str,
    left: &[Poly],
    right: &[Poly],
    witnesses: &mut Vec<SliceWitness>,
) -> bool {
    let before = witnesses.len();
    for f in left.iter().filter(|f| right.binary_search(f).is_err()) {
        witnesses.push(SliceWitness {
            check,
            poly: f.render(base),
            detail: "only on the left".into(),
        });
    }
    for f in right.iter().filter(|f| left.binary_search(f).is_err()) {
        witnesses.push(SliceWitness {
            check,
            poly: f.render(base),
            detail: "only on the right".into(),
        });
    }
    witnesses.len() == before
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_cyclic, make_poly_quotient};

    fn p(base: &FiniteRing, cs: &[usize]) -> Poly {
        Poly::new(base, cs.iter().copied().map(ElementId).collect())
    }

    #[test]
    fn arithmetic() {
        let z4 = make_cyclic(4).unwrap();
        assert!(poly_mul(&z4, &p(&z4, &[2, 2]), &p(&z4, &[2])).is_zero());
        let z2 = make_cyclic(2).unwrap();
        let f = p(&z2, &[1, 1]);
        assert_eq!(poly_mul(&z2, &f, &f), p(&z2, &[1, 0, 1]));
        assert_eq!(poly_add(&z2, &f, &Poly::zero()), f);
        assert_eq!(poly_sub(&z2, &f, &f), Poly::zero());
        assert_eq!(p(&z2, &[0, 0, 0]).degree(), None);
    }

    #[test]
    fn rendering() {
        let z4 = make_cyclic(4).unwrap();
        assert_eq!(p(&z4, &[2, 0, 3]).render(&z4), "2 + 3*x^2");
        assert_eq!(p(&z4, &[0, 1]).render(&z4), "x");
        assert_eq!(Poly::zero().render(&z4), "0");
        let dual = make_poly_quotient(2, &[0, 0, 1]).unwrap();
        // coefficient "x" of the base is parenthesised
        assert_eq!(p(&dual, &[3, 2]).render(&dual), "(1 + x) + (x)*x");
    }

    #[test]
    fn zero_divisor_criterion() {
        let z4 = make_cyclic(4).unwrap();
        assert_eq!(
            is_zd_poly(&z4, &p(&z4, &[2, 2])).unwrap(),
            Some(ElementId(2))
        );
        assert_eq!(is_zd_poly(&z4, &Poly::x(&z4)).unwrap(), None);
        assert!(is_zd_poly(&z4, &Poly::zero()).is_err());
        let z2 = make_cyclic(2).unwrap();
        for f in slice(&z2, 3).unwrap().iter().filter(|f| !f.is_zero()) {
            assert_eq!(is_zd_poly(&z2, f).unwrap(), None);
        }
    }

    #[test]
    fn unit_criterion() {
        let z4 = make_cyclic(4).unwrap();
        assert!(is_unit_poly(&z4, &p(&z4, &[1, 2])));
        assert!(!is_unit_poly(&z4, &p(&z4, &[1, 1])));
        let z2 = make_cyclic(2).unwrap();
        assert!(is_unit_poly(&z2, &p(&z2, &[1])));
        assert!(!is_unit_poly(&z2, &Poly::zero()));
    }

    #[test]
    fn admission() {
        assert_eq!(
            maximal_ideal_generator(&make_cyclic(4).unwrap()).unwrap(),
            ElementId(2)
        );
        assert_eq!(
            maximal_ideal_generator(&make_cyclic(3).unwrap()).unwrap(),
            ElementId(0)
        );
        assert!(matches!(
            maximal_ideal_generator(&make_cyclic(6).unwrap()),
            Err(Error::Usage(_))
        ));
        // F_2[x,y]/(x,y)^2-like rings are not available, but Z_2[x]/(x^2+x) is not local
        assert!(maximal_ideal_generator(&make_poly_quotient(2, &[0, 1, 1]).unwrap()).is_err());
    }

    #[test]
    fn slice_z4_degree_2() {
        let z4 = make_cyclic(4).unwrap();
        let report = bounded_slice_check(&z4, 2).unwrap();
        assert_eq!(report.examined, 64);
        assert_eq!(report.zero_divisors, 7);
        assert_eq!(report.harmless, 7);
        assert!(report.passed());
        assert!(report.witnesses.is_empty());
    }

    #[test]
    fn slice_domain_is_vacuous() {
        let z2 = make_cyclic(2).unwrap();
        let report = bounded_slice_check(&z2, 3).unwrap();
        assert_eq!(report.zero_divisors, 0);
        assert!(report.passed());
    }

    #[test]
    fn slice_over_dual_numbers() {
        let dual = make_poly_quotient(2, &[0, 0, 1]).unwrap();
        let report = bounded_slice_check(&dual, 1).unwrap();
        assert_eq!(report.generator, "x");
        assert_eq!(report.examined, 16);
        assert_eq!(report.zero_divisors, 3);
        assert_eq!(report.harmless, 3);
        assert!(report.passed());
    }

    #[test]
    fn slice_rejections() {
        assert!(bounded_slice_check(&make_cyclic(6).unwrap(), 1).is_err());
        assert!(bounded_slice_check(&make_cyclic(4).unwrap(), 0).is_err());
        assert!(bounded_slice_check(&make_cyclic(4).unwrap(), 10).is_err());
    }
}
