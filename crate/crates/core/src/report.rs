//! Deterministic text and JSON rendering of reports.
//!
//! JSON objects have sorted keys and no timestamps; identical inputs give
//! byte-identical output. Flag vectors are arrays in the order
//! zero, unit, zd, harmless, irr, b_irr, f_irr.

use serde_json::{json, Map, Value};

use crate::ideal::principal_poset;
use crate::irreducible::{classify_ring, Flag};
use crate::poly::SliceReport;
use crate::ring::{ElementId, FiniteRing};
use crate::verify::{summarize, PropositionReport, RingSummary, VerifyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementRow {
    pub id: usize,
    pub label: String,
    pub flags: [bool; 7],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealRow {
    pub generator: String,
    pub elements: Vec<String>,
    /// Generators of the ideals covering this one.
    pub covered_by: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub pattern: String,
    pub matches: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSection {
    pub summary: RingSummary,
    pub elements: Vec<ElementRow>,
    pub ideals: Vec<IdealRow>,
    pub search: Option<SearchResult>,
}

impl RingSection {
    pub fn new(ring: &FiniteRing) -> Self {
        RingSection {
            summary: summarize(ring),
            elements: Vec::new(),
            ideals: Vec::new(),
            search: None,
        }
    }

    /// Adds classification rows, all elements or only `only`.
    pub fn with_elements(mut self, ring: &FiniteRing, only: Option<ElementId>) -> Self {
        self.elements = classify_ring(ring)
            .into_iter()
            .filter(|c| only.is_none_or(|e| e == c.element))
            .map(|c| ElementRow {
                id: c.element.index(),
                label: ring.label(c.element).to_string(),
                flags: c.flags(),
            })
            .collect();
        self
    }

    pub fn with_ideals(mut self, ring: &FiniteRing) -> Self {
        let poset = principal_poset(ring);
        self.ideals = poset
            .ideals
            .iter()
            .enumerate()
            .map(|(i, ideal)| IdealRow {
                generator: ring.label(ideal.generator).to_string(),
                elements: ideal
                    .elements
                    .iter()
                    .map(|&e| ring.label(e).to_string())
                    .collect(),
                covered_by: poset
                    .covers
                    .iter()
                    .filter(|&&(lo, _)| lo == i)
                    .map(|&(_, hi)| ring.label(poset.ideals[hi].generator).to_string())
                    .collect(),
            })
            .collect();
        self
    }

    pub fn with_search(mut self, ring: &FiniteRing, pattern: &str, matches: &[ElementId]) -> Self {
        self.search = Some(SearchResult {
            pattern: pattern.to_string(),
            matches: matches.iter().map(|&e| ring.label(e).to_string()).collect(),
        });
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub rings: Vec<RingSection>,
    pub propositions: Vec<PropositionReport>,
    pub slices: Vec<SliceReport>,
}

impl From<VerifyReport> for Report {
    fn from(v: VerifyReport) -> Self {
        Report {
            rings: v
                .rings
                .into_iter()
                .map(|summary| RingSection {
                    summary,
                    elements: Vec::new(),
                    ideals: Vec::new(),
                    search: None,
                })
                .collect(),
            propositions: v.propositions,
            slices: Vec::new(),
        }
    }
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut text =
                serde_json::to_string_pretty(&to_json(report)).expect("json values serialize");
            text.push('\n');
            text
        }
        Format::Text => to_text(report),
    }
}

pub fn to_json(report: &Report) -> Value {
    let mut root = Map::new();
    root.insert(
        "rings".into(),
        report
            .rings
            .iter()
            .map(ring_json)
            .collect::<Vec<_>>()
            .into(),
    );
    root.insert(
        "propositions".into(),
        report
            .propositions
            .iter()
            .map(proposition_json)
            .collect::<Vec<_>>()
            .into(),
    );
    if !report.slices.is_empty() {
        root.insert(
            "slices".into(),
            report
                .slices
                .iter()
                .map(slice_json)
                .collect::<Vec<_>>()
                .into(),
        );
    }
    Value::Object(root)
}

fn ring_json(section: &RingSection) -> Value {
    let s = &section.summary;
    let mut obj = json!({
        "spec": s.spec,
        "order": s.order,
        "local": s.local,
        "only_harmless_zds": s.only_harmless_zds,
        "harmful_witness": s.harmful_witness,
        "units": s.units,
        "zero_divisors": s.zero_divisors,
        "nilradical": s.nilradical,
        "jacobson": s.jacobson,
    });
    let map = obj.as_object_mut().expect("object literal");
    if !section.elements.is_empty() {
        map.insert(
            "elements".into(),
            section
                .elements
                .iter()
                .map(|row| json!({"id": row.id, "label": row.label, "flags": row.flags}))
                .collect::<Vec<_>>()
                .into(),
        );
    }
    if !section.ideals.is_empty() {
        map.insert(
            "ideals".into(),
            section
                .ideals
                .iter()
                .map(|row| {
                    json!({
                        "generator": row.generator,
                        "elements": row.elements,
                        "covered_by": row.covered_by,
                    })
                })
                .collect::<Vec<_>>()
                .into(),
        );
    }
    if let Some(search) = &section.search {
        map.insert(
            "search".into(),
            json!({"pattern": search.pattern, "matches": search.matches}),
        );
    }
    obj
}

fn proposition_json(p: &PropositionReport) -> Value {
    let mut obj = json!({
        "id": p.id.name(),
        "ring": p.ring,
        "mode": p.mode.name(),
        "verdict": p.verdict.name(),
        "witnesses": p.witnesses.iter().map(|w| json!({
            "element": w.element.index(),
            "label": w.label,
            "flags": w.flags,
        })).collect::<Vec<_>>(),
    });
    if let Some(r) = p.restricted_verdict {
        obj.as_object_mut()
            .expect("object literal")
            .insert("restricted_verdict".into(), r.name().into());
    }
    obj
}

fn slice_json(s: &SliceReport) -> Value {
    json!({
        "base": s.base,
        "degree": s.degree,
        "generator": s.generator,
        "examined": s.examined,
        "zero_divisors": s.zero_divisors,
        "harmless": s.harmless,
        "checks": {
            "harmless": s.harmless_pass,
            "zd_equals_t": s.zd_equals_t_pass,
            "nil_equals_t": s.nil_equals_t_pass,
            "jacobson": s.jacobson_pass,
        },
        "witnesses": s.witnesses.iter().map(|w| json!({
            "check": w.check,
            "poly": w.poly,
            "detail": w.detail,
        })).collect::<Vec<_>>(),
    })
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn flag_bits(flags: &[bool; 7]) -> String {
    flags.iter().map(|&f| if f { '1' } else { '0' }).collect()
}

/// Left-aligned columns separated by two spaces, trailing blanks trimmed.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut out = String::new();
        for (cell, w) in cells.zip(&widths) {
            out.push_str(cell);
            out.extend(std::iter::repeat_n(' ', w - cell.chars().count() + 2));
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
        out
    };
    let mut out = line(&mut header.iter().copied());
    for row in rows {
        out.push_str(&line(&mut row.iter().map(String::as_str)));
    }
    out
}

pub fn to_text(report: &Report) -> String {
    let mut out = String::new();
    if !report.rings.is_empty() {
        out.push_str("RINGS\n");
        let rows: Vec<Vec<String>> = report
            .rings
            .iter()
            .map(|r| {
                let s = &r.summary;
                vec![
                    s.spec.clone(),
                    s.order.to_string(),
                    yes_no(s.local),
                    yes_no(s.only_harmless_zds),
                    s.units.to_string(),
                    s.zero_divisors.to_string(),
                    s.nilradical.to_string(),
                    s.jacobson.to_string(),
                    s.harmful_witness.clone().unwrap_or_else(|| "-".into()),
                ]
            })
            .collect();
        out.push_str(&table(
            &[
                "spec", "order", "local", "harmless", "units", "zd", "nil", "jac", "harmful",
            ],
            &rows,
        ));
    }
    for section in &report.rings {
        if !section.elements.is_empty() {
            out.push_str(&format!("\nELEMENTS {}\n", section.summary.spec));
            let mut header = vec!["id", "label"];
            header.extend(Flag::ALL.iter().map(|f| f.name()));
            let rows: Vec<Vec<String>> = section
                .elements
                .iter()
                .map(|row| {
                    let mut cells = vec![row.id.to_string(), row.label.clone()];
                    cells.extend(
                        row.flags
                            .iter()
                            .map(|&f| if f { "1" } else { "0" }.to_string()),
                    );
                    cells
                })
                .collect();
            out.push_str(&table(&header, &rows));
        }
        if !section.ideals.is_empty() {
            out.push_str(&format!("\nPRINCIPAL IDEALS {}\n", section.summary.spec));
            let rows: Vec<Vec<String>> = section
                .ideals
                .iter()
                .map(|row| {
                    vec![
                        row.generator.clone(),
                        row.elements.len().to_string(),
                        format!("{{{}}}", row.elements.join(", ")),
                        if row.covered_by.is_empty() {
                            "-".into()
                        } else {
                            row.covered_by.join(", ")
                        },
                    ]
                })
                .collect();
            out.push_str(&table(
                &["generator", "size", "elements", "covered by"],
                &rows,
            ));
        }
        if let Some(search) = &section.search {
            out.push_str(&format!(
                "\nSEARCH {} [{}]\n{}\n",
                section.summary.spec,
                search.pattern,
                if search.matches.is_empty() {
                    "(no matches)".to_string()
                } else {
                    search.matches.join("\n")
                }
            ));
        }
    }
    if !report.propositions.is_empty() {
        if !out.is_empty() {
            out.push('\n');
        }
        out.push_str("PROPOSITIONS\n");
        let rows: Vec<Vec<String>> = report
            .propositions
            .iter()
            .map(|p| {
                vec![
                    p.id.name().to_string(),
                    p.ring.clone(),
                    p.mode.name().to_string(),
                    p.verdict.name().to_string(),
                    p.restricted_verdict
                        .map_or("-".into(), |v| v.name().to_string()),
                    if p.witnesses.is_empty() {
                        "-".into()
                    } else {
                        p.witnesses
                            .iter()
                            .map(|w| format!("{} [{}]", w.label, flag_bits(&w.flags)))
                            .collect::<Vec<_>>()
                            .join("; ")
                    },
                ]
            })
            .collect();
        out.push_str(&table(
            &["id", "ring", "mode", "verdict", "restricted", "witnesses"],
            &rows,
        ));
    }
    for s in &report.slices {
        if !out.is_empty() {
            out.push('\n');
        }
        out.push_str(&format!(
            "SLICE {} degree <= {} t = {}\nexamined {}, zero divisors {}, harmless {}\n",
            s.base, s.degree, s.generator, s.examined, s.zero_divisors, s.harmless
        ));
        let pass = |b: bool| if b { "pass" } else { "FAIL" }.to_string();
        out.push_str(&table(
            &["check", "result"],
            &[
                vec!["harmless".into(), pass(s.harmless_pass)],
                vec!["zd_equals_t".into(), pass(s.zd_equals_t_pass)],
                vec!["nil_equals_t".into(), pass(s.nil_equals_t_pass)],
                vec!["jacobson".into(), pass(s.jacobson_pass)],
            ],
        ));
        for w in &s.witnesses {
            out.push_str(&format!("witness {}: {} ({})\n", w.check, w.poly, w.detail));
        }
    }
    if out.is_empty() {
        out.push_str("empty report\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_cyclic, make_product};
    use crate::verify::{check_proposition, PropId};

    #[test]
    fn empty_report_json() {
        let text = serde_json::to_string(&to_json(&Report::default())).unwrap();
        assert_eq!(text, r#"{"propositions":[],"rings":[]}"#);
    }

    #[test]
    fn classification_text_has_one_row_per_element() {
        let z6 = make_cyclic(6).unwrap();
        let report = Report {
            rings: vec![RingSection::new(&z6).with_elements(&z6, None)],
            ..Report::default()
        };
        let text = emit_report(&report, Format::Text);
        let section: Vec<&str> = text
            .split("ELEMENTS zn:6\n")
            .nth(1)
            .unwrap()
            .lines()
            .skip(1)
            .collect();
        assert_eq!(section.len(), 6);
        for (i, line) in section.iter().enumerate() {
            assert!(line.starts_with(&i.to_string()));
        }
        let cells: Vec<&str> = section[3].split_whitespace().collect();
        assert_eq!(cells, ["3", "3", "0", "0", "1", "0", "0", "1", "1"]);
    }

    #[test]
    fn p6_row_carries_witness() {
        let z2 = make_cyclic(2).unwrap();
        let v4 = make_product(&[z2.clone(), z2]).unwrap();
        let report = Report {
            propositions: vec![check_proposition(PropId::P6, &v4).unwrap()],
            ..Report::default()
        };
        let json = emit_report(&report, Format::Json);
        assert!(json.contains("\"label\": \"(1,0)\""));
        assert!(json.contains("\"restricted_verdict\": \"holds\""));
        let text = emit_report(&report, Format::Text);
        assert!(text.contains("(1,0) [0010011]"));
    }

    #[test]
    fn json_keys_are_sorted() {
        let z4 = make_cyclic(4).unwrap();
        let report = Report {
            rings: vec![RingSection::new(&z4).with_ideals(&z4)],
            ..Report::default()
        };
        let json = emit_report(&report, Format::Json);
        let i = json.find("\"harmful_witness\"").unwrap();
        let j = json.find("\"ideals\"").unwrap();
        let k = json.find("\"local\"").unwrap();
        assert!(i < j && j < k);
    }
}
