//! Proposition checks over finite rings and catalogs of ring specifications.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::irreducible::{classify_ring, harmful_zero_divisor, ClassificationRecord};
use crate::ring::{build, check_axioms, check_derived, is_local, ElementId, FiniteRing};
use crate::spec::RingSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropId {
    /// irreducible ⇒ B-irreducible, over nonzero non-units.
    P1,
    /// B-irreducible ⇒ F-irreducible.
    P2,
    /// Only harmless zero divisors: B-irreducible ⇒ irreducible.
    P3,
    /// Only harmless zero divisors: nonzero F-irreducible ⇒ B-irreducible.
    P4,
    /// Products: a nonzero non-unit F-irreducible tuple has one F-irreducible
    /// coordinate and units elsewhere.
    P5,
    /// Products of harmless rings: the three notions agree.
    P6,
    /// Products of rings where the three notions agree: they agree in the product.
    P7,
    /// Only harmless zero divisors: the three notions agree.
    C1,
}

impl PropId {
    pub const ALL: [PropId; 8] = [
        PropId::P1,
        PropId::P2,
        PropId::P3,
        PropId::P4,
        PropId::P5,
        PropId::P6,
        PropId::P7,
        PropId::C1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropId::P1 => "P1",
            PropId::P2 => "P2",
            PropId::P3 => "P3",
            PropId::P4 => "P4",
            PropId::P5 => "P5",
            PropId::P6 => "P6",
            PropId::P7 => "P7",
            PropId::C1 => "C1",
        }
    }

    pub fn mode(self) -> Mode {
        match self {
            PropId::P6 | PropId::P7 => Mode::Report,
            _ => Mode::Assert,
        }
    }

    pub fn needs_product(self) -> bool {
        matches!(self, PropId::P5 | PropId::P6 | PropId::P7)
    }

    /// Parses a comma-separated list such as `P1,P2,C1`.
    pub fn parse_list(text: &str) -> Result<Vec<PropId>> {
        let mut ids = text
            .split(',')
            .map(|s| s.trim().parse())
            .collect::<Result<Vec<PropId>>>()?;
        ids.sort();
        ids.dedup();
        Ok(ids)
    }
}

impl FromStr for PropId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PropId::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Usage(format!("unknown proposition '{s}'")))
    }
}

impl fmt::Display for PropId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Assert-mode witnesses fail the run; report-mode witnesses are findings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Assert,
    Report,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Assert => "assert",
            Mode::Report => "report",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    CounterexamplesFound,
    /// The ring does not satisfy the proposition's hypothesis.
    Vacuous,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::CounterexamplesFound => "counterexamples found",
            Verdict::Vacuous => "vacuous",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub element: ElementId,
    pub label: String,
    pub flags: [bool; 7],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropositionReport {
    pub id: PropId,
    pub ring: String,
    pub mode: Mode,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    /// P6/P7 only: verdict over elements whose coordinates are all nonzero.
    pub restricted_verdict: Option<Verdict>,
}

impl PropositionReport {
    pub fn is_failure(&self) -> bool {
        self.mode == Mode::Assert && self.verdict == Verdict::CounterexamplesFound
    }
}

/// Checks one proposition on `ring`, classifying its elements first.
pub fn check_proposition(id: PropId, ring: &FiniteRing) -> Result<PropositionReport> {
    check_with_records(id, ring, &classify_ring(ring))
}

/// Same as [`check_proposition`] with a precomputed classification.
pub fn check_with_records(
    id: PropId,
    ring: &FiniteRing,
    records: &[ClassificationRecord],
) -> Result<PropositionReport> {
    if id.needs_product() && ring.factors().is_empty() {
        return Err(Error::Usage(format!(
            "{id} applies to direct products, not to {}",
            ring.spec()
        )));
    }
    let harmless = harmful_zero_divisor(ring).is_none();
    let nonzero_non_units = || records.iter().filter(|c| c.is_nonzero_non_unit());

    let mut restricted_verdict = None;
    let violations: Option<Vec<&ClassificationRecord>> = match id {
        PropId::P1 => Some(nonzero_non_units().filter(|c| c.irr && !c.b_irr).collect()),
        PropId::P2 => Some(records.iter().filter(|c| c.b_irr && !c.f_irr).collect()),
        PropId::P3 => harmless.then(|| records.iter().filter(|c| c.b_irr && !c.irr).collect()),
        PropId::P4 => harmless.then(|| {
            records
                .iter()
                .filter(|c| !c.is_zero && c.f_irr && !c.b_irr)
                .collect()
        }),
        PropId::C1 => {
            harmless.then(|| nonzero_non_units().filter(|c| !c.notions_agree()).collect())
        }
        PropId::P5 => {
            let factor_records: Vec<Vec<ClassificationRecord>> =
                ring.factors().iter().map(|f| classify_ring(f)).collect();
            Some(
                nonzero_non_units()
                    .filter(|c| c.f_irr)
                    .filter(|c| {
                        let coords = ring.coordinates(c.element).expect("product ring");
                        let patterns = (0..coords.len())
                            .filter(|&i| {
                                coords.iter().enumerate().all(|(j, &a)| {
                                    let rec = &factor_records[j][a.index()];
                                    if j == i {
                                        rec.f_irr
                                    } else {
                                        rec.is_unit
                                    }
                                })
                            })
                            .count();
                        patterns != 1
                    })
                    .collect(),
            )
        }
        PropId::P6 | PropId::P7 => {
            let hypothesis = ring.factors().iter().all(|f| {
                if id == PropId::P6 {
                    harmful_zero_divisor(f).is_none()
                } else {
                    classify_ring(f)
                        .iter()
                        .filter(|c| c.is_nonzero_non_unit())
                        .all(|c| c.notions_agree())
                }
            });
            hypothesis.then(|| {
                let found: Vec<&ClassificationRecord> =
                    nonzero_non_units().filter(|c| !c.notions_agree()).collect();
                let restricted_fails = found.iter().any(|c| {
                    let coords = ring.coordinates(c.element).expect("product ring");
                    coords
                        .iter()
                        .zip(ring.factors())
                        .all(|(&a, f)| a != f.zero())
                });
                restricted_verdict = Some(if restricted_fails {
                    Verdict::CounterexamplesFound
                } else {
                    Verdict::Holds
                });
                found
            })
        }
    };

    let (verdict, witnesses) = match violations {
        None => (Verdict::Vacuous, Vec::new()),
        Some(found) if found.is_empty() => (Verdict::Holds, Vec::new()),
        Some(found) => (
            Verdict::CounterexamplesFound,
            found
                .into_iter()
                .map(|c| Witness {
                    element: c.element,
                    label: ring.label(c.element).to_string(),
                    flags: c.flags(),
                })
                .collect(),
        ),
    };
    Ok(PropositionReport {
        id,
        ring: ring.spec().to_string(),
        mode: id.mode(),
        verdict,
        witnesses,
        restricted_verdict,
    })
}

/// Default catalog: `zn:2..zn:30`, products `zn:i x zn:j` for `2 <= i <= j <= 6`,
/// and three local polynomial quotients.
pub fn builtin_catalog() -> Vec<RingSpec> {
    let mut specs: Vec<RingSpec> = (2..=30).map(RingSpec::Cyclic).collect();
    for i in 2..=6 {
        for j in i..=6 {
            specs.push(RingSpec::Product(vec![
                RingSpec::Cyclic(i),
                RingSpec::Cyclic(j),
            ]));
        }
    }
    specs.push(RingSpec::Quotient {
        n: 2,
        modulus: vec![0, 0, 1],
    });
    specs.push(RingSpec::Quotient {
        n: 2,
        modulus: vec![1, 1, 1],
    });
    specs.push(RingSpec::Quotient {
        n: 4,
        modulus: vec![0, 0, 1],
    });
    specs
}

/// One spec per line; `#` starts a comment.
pub fn parse_catalog(text: &str) -> Result<Vec<RingSpec>> {
    let mut specs = Vec::new();
    for (number, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let spec = RingSpec::parse(line).map_err(|e| match e {
            Error::Syntax { pos, msg } => Error::Syntax {
                pos,
                msg: format!("line {}: {msg}", number + 1),
            },
            other => other,
        })?;
        specs.push(spec);
    }
    Ok(specs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSummary {
    pub spec: String,
    pub order: usize,
    pub local: bool,
    pub only_harmless_zds: bool,
    /// Label of the smallest zero divisor that is not harmless.
    pub harmful_witness: Option<String>,
    pub units: usize,
    pub zero_divisors: usize,
    pub nilradical: usize,
    pub jacobson: usize,
}

pub fn summarize(ring: &FiniteRing) -> RingSummary {
    let d = ring.derived();
    let harmful = harmful_zero_divisor(ring);
    RingSummary {
        spec: ring.spec().to_string(),
        order: ring.order(),
        local: is_local(ring),
        only_harmless_zds: harmful.is_none(),
        harmful_witness: harmful.map(|r| ring.label(r).to_string()),
        units: d.units.len(),
        zero_divisors: d.zero_divisors.len(),
        nilradical: d.nilradical.len(),
        jacobson: d.jacobson.len(),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub rings: Vec<RingSummary>,
    /// Ordered by catalog index, then proposition id.
    pub propositions: Vec<PropositionReport>,
}

impl VerifyReport {
    /// 0 when every assert-mode proposition holds, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.propositions.iter().any(PropositionReport::is_failure) {
            1
        } else {
            0
        }
    }
}

/// Builds every ring, checks its axioms and derived sets, and runs each
/// applicable proposition. Product-only propositions are skipped on
/// non-products.
pub fn run_catalog(catalog: &[RingSpec], props: &[PropId]) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    let mut props = props.to_vec();
    props.sort();
    props.dedup();
    for spec in catalog {
        let ring = build(spec).map_err(|e| match e {
            Error::Construction(msg) => Error::Construction(format!("{spec}: {msg}")),
            other => other,
        })?;
        check_axioms(&ring)?;
        check_derived(&ring)?;
        let records = classify_ring(&ring);
        report.rings.push(summarize(&ring));
        for &id in &props {
            if id.needs_product() && !spec.is_product() {
                continue;
            }
            report
                .propositions
                .push(check_with_records(id, &ring, &records)?);
        }
    }
    Ok(report)
}
