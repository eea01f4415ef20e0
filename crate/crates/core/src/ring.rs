//! Finite commutative rings with unity stored as full operation tables.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::spec::RingSpec;

/// Largest ring order the tables are built for.
pub const MAX_ORDER: usize = 256;

/// Rings up to this order get exhaustive triple checks in [`check_axioms`].
pub const EXHAUSTIVE_AXIOM_ORDER: usize = 64;

/// Triples sampled by [`check_axioms`] above [`EXHAUSTIVE_AXIOM_ORDER`].
pub const SAMPLED_TRIPLES: usize = 10_000;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(0);

/// Index of an element inside its ring, in `0..order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub usize);

impl ElementId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Membership set over the elements of one ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    members: Vec<bool>,
}

impl ElementSet {
    pub fn empty(order: usize) -> Self {
        ElementSet {
            members: vec![false; order],
        }
    }

    pub fn from_ids(order: usize, ids: impl IntoIterator<Item = ElementId>) -> Self {
        let mut set = ElementSet::empty(order);
        for id in ids {
            set.insert(id);
        }
        set
    }

    pub fn insert(&mut self, id: ElementId) {
        self.members[id.0] = true;
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.members[id.0]
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&m| m)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| ElementId(i))
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members
            .iter()
            .zip(&other.members)
            .all(|(&a, &b)| !a || b)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.members
            .iter()
            .zip(&other.members)
            .all(|(&a, &b)| !(a && b))
    }
}

/// Unit group, zero divisors and radicals of a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedSets {
    pub units: ElementSet,
    /// Nonzero elements with a nonzero annihilator; 0 itself is excluded.
    pub zero_divisors: ElementSet,
    pub nilradical: ElementSet,
    /// Elementwise criterion: `x` with `1 - xy` a unit for every `y`.
    pub jacobson: ElementSet,
    /// `{1 - u : u unit}`.
    pub one_minus_units: ElementSet,
    inverses: Vec<Option<ElementId>>,
}

impl DerivedSets {
    pub fn inverse(&self, r: ElementId) -> Option<ElementId> {
        self.inverses[r.0]
    }
}

/// A finite commutative ring with unity.
///
/// Immutable after construction. Derived sets and the principal-ideal table
/// are computed on first use and cached.
#[derive(Clone)]
pub struct FiniteRing {
    id: u64,
    order: usize,
    add: Vec<ElementId>,
    mul: Vec<ElementId>,
    neg: Vec<ElementId>,
    zero: ElementId,
    one: ElementId,
    labels: Vec<String>,
    spec: RingSpec,
    factors: Vec<Arc<FiniteRing>>,
    derived: OnceLock<DerivedSets>,
    multiples: OnceLock<Vec<ElementSet>>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("spec", &self.spec.to_string())
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteRing {
    /// Builds a ring from raw tables (`add[a * order + b]`, likewise `mul`)
    /// and checks the ring axioms before returning it.
    pub fn from_tables(
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
        labels: Vec<String>,
        spec: RingSpec,
    ) -> Result<FiniteRing> {
        let order = labels.len();
        if add.len() != order * order || mul.len() != order * order {
            return Err(Error::Construction(format!(
                "tables must have {} entries",
                order * order
            )));
        }
        if add.iter().chain(&mul).any(|&x| x >= order) || zero >= order || one >= order {
            return Err(Error::Construction("table entry out of range".into()));
        }
        let ring = FiniteRing::assemble(
            order,
            |a, b| ElementId(add[a * order + b]),
            |a, b| ElementId(mul[a * order + b]),
            ElementId(zero),
            ElementId(one),
            labels,
            spec,
            Vec::new(),
        )?;
        check_axioms(&ring)?;
        Ok(ring)
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        order: usize,
        add: impl Fn(usize, usize) -> ElementId,
        mul: impl Fn(usize, usize) -> ElementId,
        zero: ElementId,
        one: ElementId,
        labels: Vec<String>,
        spec: RingSpec,
        factors: Vec<Arc<FiniteRing>>,
    ) -> Result<FiniteRing> {
        if order < 2 || zero == one {
            return Err(Error::Construction("trivial or empty ring".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::Construction(format!(
                "ring order {order} exceeds the cap of {MAX_ORDER}"
            )));
        }
        let mut add_table = Vec::with_capacity(order * order);
        let mut mul_table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                add_table.push(add(a, b));
                mul_table.push(mul(a, b));
            }
        }
        let neg = (0..order)
            .map(|a| {
                (0..order)
                    .map(ElementId)
                    .find(|&b| add_table[a * order + b.0] == zero)
                    .ok_or_else(|| {
                        Error::Invariant(format!("element {} has no additive inverse", labels[a]))
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteRing {
            id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
            order,
            add: add_table,
            mul: mul_table,
            neg,
            zero,
            one,
            labels,
            spec,
            factors,
            derived: OnceLock::new(),
            multiples: OnceLock::new(),
        })
    }

    /// Identity shared by clones of this ring and by nothing else.
    pub fn ring_id(&self) -> u64 {
        self.id
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> ElementId {
        self.zero
    }

    pub fn one(&self) -> ElementId {
        self.one
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    /// Immediate factors when this ring was built as a direct product.
    pub fn factors(&self) -> &[Arc<FiniteRing>] {
        &self.factors
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.order).map(ElementId)
    }

    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add[a.0 * self.order + b.0]
    }

    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul[a.0 * self.order + b.0]
    }

    pub fn neg(&self, a: ElementId) -> ElementId {
        self.neg[a.0]
    }

    pub fn sub(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add(a, self.neg(b))
    }

    pub fn label(&self, r: ElementId) -> &str {
        &self.labels[r.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks an element up by label, ignoring whitespace.
    pub fn find_label(&self, label: &str) -> Option<ElementId> {
        let wanted: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        self.labels
            .iter()
            .position(|l| l.chars().filter(|c| !c.is_whitespace()).eq(wanted.chars()))
            .map(ElementId)
    }

    pub fn derived(&self) -> &DerivedSets {
        self.derived.get_or_init(|| derive_sets(self))
    }

    pub fn is_unit(&self, r: ElementId) -> bool {
        self.derived().units.contains(r)
    }

    pub fn is_zero_divisor(&self, r: ElementId) -> bool {
        self.derived().zero_divisors.contains(r)
    }

    /// The principal ideal `rR` as a membership set.
    pub fn multiples(&self, r: ElementId) -> &ElementSet {
        &self.multiples.get_or_init(|| {
            self.elements()
                .map(|g| ElementSet::from_ids(self.order, self.elements().map(|s| self.mul(g, s))))
                .collect()
        })[r.0]
    }

    /// Coordinates of `r` in the immediate factors of a product ring.
    pub fn coordinates(&self, r: ElementId) -> Option<Vec<ElementId>> {
        if self.factors.is_empty() {
            return None;
        }
        let mut rest = r.0;
        Some(
            self.factors
                .iter()
                .map(|f| {
                    let digit = rest % f.order;
                    rest /= f.order;
                    ElementId(digit)
                })
                .collect(),
        )
    }
}

/// `Z/nZ`, element `i` labelled `"i"`.
pub fn make_cyclic(n: u64) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::Construction("trivial or empty ring".into()));
    }
    if n > MAX_ORDER as u64 {
        return Err(Error::Construction(format!(
            "ring order {n} exceeds the cap of {MAX_ORDER}"
        )));
    }
    let order = n as usize;
    FiniteRing::assemble(
        order,
        |a, b| ElementId((a + b) % order),
        |a, b| ElementId((a * b) % order),
        ElementId(0),
        ElementId(1),
        (0..order).map(|i| i.to_string()).collect(),
        RingSpec::Cyclic(n),
        Vec::new(),
    )
}

/// Direct product; the tuple `(a_1, .., a_k)` has mixed-radix index
/// `sum a_i * prod_{j<i} order_j`.
pub fn make_product(factors: &[FiniteRing]) -> Result<FiniteRing> {
    if factors.is_empty() {
        return Err(Error::Construction("product of an empty sequence".into()));
    }
    let mut order = 1usize;
    for f in factors {
        order = order
            .checked_mul(f.order)
            .filter(|&o| o <= MAX_ORDER)
            .ok_or_else(|| {
                Error::Construction(format!("product order exceeds the cap of {MAX_ORDER}"))
            })?;
    }
    let factors: Vec<Arc<FiniteRing>> = factors.iter().cloned().map(Arc::new).collect();
    let radices: Vec<usize> = factors.iter().map(|f| f.order).collect();
    let componentwise = |op: fn(&FiniteRing, ElementId, ElementId) -> ElementId| {
        let (factors, radices) = (&factors, &radices);
        move |a: usize, b: usize| {
            let digits: Vec<usize> = factors
                .iter()
                .zip(
                    decode_mixed(a, radices)
                        .into_iter()
                        .zip(decode_mixed(b, radices)),
                )
                .map(|(f, (x, y))| op(f, ElementId(x), ElementId(y)).0)
                .collect();
            ElementId(encode_mixed(&digits, radices))
        }
    };
    let zero = encode_mixed(
        &factors.iter().map(|f| f.zero.0).collect::<Vec<_>>(),
        &radices,
    );
    let one = encode_mixed(
        &factors.iter().map(|f| f.one.0).collect::<Vec<_>>(),
        &radices,
    );
    let labels = (0..order)
        .map(|x| {
            let parts: Vec<&str> = decode_mixed(x, &radices)
                .into_iter()
                .zip(&factors)
                .map(|(d, f)| f.labels[d].as_str())
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let spec = RingSpec::Product(factors.iter().map(|f| f.spec.clone()).collect());
    FiniteRing::assemble(
        order,
        componentwise(FiniteRing::add),
        componentwise(FiniteRing::mul),
        ElementId(zero),
        ElementId(one),
        labels,
        spec,
        factors.clone(),
    )
}

fn decode_mixed(mut x: usize, radices: &[usize]) -> Vec<usize> {
    radices
        .iter()
        .map(|&r| {
            let d = x % r;
            x /= r;
            d
        })
        .collect()
}

fn encode_mixed(digits: &[usize], radices: &[usize]) -> usize {
    digits
        .iter()
        .zip(radices)
        .rev()
        .fold(0, |acc, (&d, &r)| acc * r + d)
}

/// `Z/nZ[x] / (modulus)` for a monic little-endian `modulus` of degree `d >= 1`.
///
/// Elements are coefficient vectors of degree `< d` with index `sum c_i * n^i`.
pub fn make_poly_quotient(n: u64, modulus: &[u64]) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::Construction("trivial or empty ring".into()));
    }
    if modulus.len() < 2 {
        return Err(Error::Construction(
            "modulus must have degree at least 1".into(),
        ));
    }
    let modulus: Vec<u64> = modulus.iter().map(|c| c % n).collect();
    if modulus[modulus.len() - 1] != 1 {
        return Err(Error::Construction("modulus is not monic".into()));
    }
    let degree = modulus.len() - 1;
    let order = (n as usize)
        .checked_pow(degree as u32)
        .filter(|&o| o <= MAX_ORDER)
        .ok_or_else(|| {
            Error::Construction(format!("quotient order exceeds the cap of {MAX_ORDER}"))
        })?;
    let radices = vec![n as usize; degree];
    let decode = |x: usize| -> Vec<u64> {
        decode_mixed(x, &radices)
            .into_iter()
            .map(|d| d as u64)
            .collect()
    };
    let encode = |coeffs: &[u64]| -> ElementId {
        let digits: Vec<usize> = coeffs[..degree].iter().map(|&c| c as usize).collect();
        ElementId(encode_mixed(&digits, &radices))
    };
    let add = |a: usize, b: usize| {
        let sum: Vec<u64> = decode(a)
            .iter()
            .zip(decode(b))
            .map(|(x, y)| (x + y) % n)
            .collect();
        encode(&sum)
    };
    let mul = |a: usize, b: usize| {
        let (pa, pb) = (decode(a), decode(b));
        let mut prod = vec![0u64; 2 * degree];
        for (i, x) in pa.iter().enumerate() {
            for (j, y) in pb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % n;
            }
        }
        // x^d = -(m_0 + .. + m_{d-1} x^{d-1})
        for k in (degree..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, m) in modulus[..degree].iter().enumerate() {
                let idx = k - degree + i;
                prod[idx] = (prod[idx] + (n - c) * m) % n;
            }
        }
        encode(&prod)
    };
    let labels = (0..order)
        .map(|x| {
            let coeffs = decode(x);
            let terms: Vec<(String, bool)> =
                coeffs.iter().map(|&c| (c.to_string(), c == 1)).collect();
            render_terms(&terms, &|i| coeffs[i] == 0, "x")
        })
        .collect();
    let mut one = vec![0u64; degree];
    one[0] = 1;
    let one = encode(&one);
    FiniteRing::assemble(
        order,
        add,
        mul,
        ElementId(0),
        one,
        labels,
        RingSpec::Quotient {
            n,
            modulus: modulus.clone(),
        },
        Vec::new(),
    )
}

/// Renders `c0 + c1*x + c2*x^2 + ..`, omitting zero terms and unit coefficients
/// on non-constant terms. `terms[i]` is `(label, is_one)`.
pub(crate) fn render_terms(
    terms: &[(String, bool)],
    is_zero: &dyn Fn(usize) -> bool,
    var: &str,
) -> String {
    let mut parts = Vec::new();
    for (power, (label, is_one)) in terms.iter().enumerate() {
        if is_zero(power) {
            continue;
        }
        let monomial = match power {
            0 => String::new(),
            1 => var.to_string(),
            p => format!("{var}^{p}"),
        };
        let wrapped = label.contains(' ') || label.contains(var);
        parts.push(if power == 0 {
            if label.contains(' ') {
                format!("({label})")
            } else {
                label.clone()
            }
        } else if *is_one {
            monomial
        } else if wrapped {
            format!("({label})*{monomial}")
        } else {
            format!("{label}*{monomial}")
        });
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Constructs the ring described by `spec`.
pub fn build(spec: &RingSpec) -> Result<FiniteRing> {
    match spec {
        RingSpec::Cyclic(n) => make_cyclic(*n),
        RingSpec::Product(children) => {
            let rings = children.iter().map(build).collect::<Result<Vec<_>>>()?;
            make_product(&rings)
        }
        RingSpec::Quotient { n, modulus } => make_poly_quotient(*n, modulus),
    }
}

/// Computes units, zero divisors, nilradical, Jacobson radical and `1 - U(R)`.
pub fn derive_sets(ring: &FiniteRing) -> DerivedSets {
    let n = ring.order;
    let inverses: Vec<Option<ElementId>> = ring
        .elements()
        .map(|a| ring.elements().find(|&b| ring.mul(a, b) == ring.one))
        .collect();
    let units = ElementSet::from_ids(n, ring.elements().filter(|a| inverses[a.0].is_some()));
    let zero_divisors = ElementSet::from_ids(
        n,
        ring.elements().filter(|&r| {
            r != ring.zero
                && ring
                    .elements()
                    .any(|s| s != ring.zero && ring.mul(r, s) == ring.zero)
        }),
    );
    let nilradical = ElementSet::from_ids(
        n,
        ring.elements().filter(|&r| {
            let mut power = r;
            for _ in 0..n {
                if power == ring.zero {
                    return true;
                }
                power = ring.mul(power, r);
            }
            power == ring.zero
        }),
    );
    let jacobson = ElementSet::from_ids(
        n,
        ring.elements().filter(|&x| {
            ring.elements()
                .all(|y| units.contains(ring.sub(ring.one, ring.mul(x, y))))
        }),
    );
    let one_minus_units = ElementSet::from_ids(n, units.iter().map(|u| ring.sub(ring.one, u)));
    DerivedSets {
        units,
        zero_divisors,
        nilradical,
        jacobson,
        one_minus_units,
        inverses,
    }
}

/// True iff the non-units are closed under addition, i.e. form the unique
/// maximal ideal.
pub fn is_local(ring: &FiniteRing) -> bool {
    let units = &ring.derived().units;
    let non_units: Vec<ElementId> = ring.elements().filter(|&r| !units.contains(r)).collect();
    non_units
        .iter()
        .all(|&a| non_units.iter().all(|&b| !units.contains(ring.add(a, b))))
}

/// Checks the commutative-ring-with-unity axioms on the operation tables.
///
/// Identities, inverses and commutativity are checked on all pairs. The
/// three-variable laws are checked on all triples up to
/// [`EXHAUSTIVE_AXIOM_ORDER`] and on [`SAMPLED_TRIPLES`] seeded random
/// triples above it.
pub fn check_axioms(ring: &FiniteRing) -> Result<()> {
    let fail = |law: &str, xs: &[ElementId]| {
        let names: Vec<&str> = xs.iter().map(|&x| ring.label(x)).collect();
        Err(Error::Invariant(format!(
            "{} fails {law} at ({})",
            ring.spec,
            names.join(", ")
        )))
    };
    let (zero, one) = (ring.zero, ring.one);
    for a in ring.elements() {
        if ring.add(a, zero) != a {
            return fail("additive identity", &[a]);
        }
        if ring.mul(a, one) != a {
            return fail("multiplicative identity", &[a]);
        }
        if ring.add(a, ring.neg(a)) != zero {
            return fail("additive inverse", &[a]);
        }
        for b in ring.elements() {
            if ring.add(a, b) != ring.add(b, a) {
                return fail("additive commutativity", &[a, b]);
            }
            if ring.mul(a, b) != ring.mul(b, a) {
                return fail("multiplicative commutativity", &[a, b]);
            }
        }
    }
    let check_triple = |a, b, c| {
        if ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)) {
            return fail("additive associativity", &[a, b, c]);
        }
        if ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)) {
            return fail("multiplicative associativity", &[a, b, c]);
        }
        if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)) {
            return fail("distributivity", &[a, b, c]);
        }
        Ok(())
    };
    if ring.order <= EXHAUSTIVE_AXIOM_ORDER {
        for a in ring.elements() {
            for b in ring.elements() {
                for c in ring.elements() {
                    check_triple(a, b, c)?;
                }
            }
        }
    } else {
        let mut rng = StdRng::seed_from_u64(0x5eed ^ ring.order as u64);
        for _ in 0..SAMPLED_TRIPLES {
            let mut pick = || ElementId(rng.gen_range(0..ring.order));
            let (a, b, c) = (pick(), pick(), pick());
            check_triple(a, b, c)?;
        }
    }
    Ok(())
}

/// Checks the structural facts every derived-set computation must satisfy.
pub fn check_derived(ring: &FiniteRing) -> Result<()> {
    let d = ring.derived();
    let fail = |what: &str| Err(Error::Invariant(format!("{}: {what}", ring.spec)));
    if !d.units.contains(ring.one) {
        return fail("one is not a unit");
    }
    for u in d.units.iter() {
        if d.inverse(u).is_none_or(|v| !d.units.contains(v)) {
            return fail("unit group not closed under inverses");
        }
        if d.units.iter().any(|v| !d.units.contains(ring.mul(u, v))) {
            return fail("unit group not closed under multiplication");
        }
    }
    if !d.zero_divisors.is_disjoint(&d.units) || d.zero_divisors.contains(ring.zero) {
        return fail("zero divisors meet the units or contain zero");
    }
    if !d.nilradical.is_subset(&d.jacobson) {
        return fail("nilradical not inside the Jacobson radical");
    }
    if !d.jacobson.is_subset(&d.one_minus_units) {
        return fail("Jacobson radical not inside 1 - U(R)");
    }
    if is_local(ring) && !d.zero_divisors.is_subset(&d.one_minus_units) {
        return fail("local ring with a zero divisor outside 1 - U(R)");
    }
    Ok(())
}
