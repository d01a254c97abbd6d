//! Text and JSON renderings of reports.

use std::fmt::Write as _;

use esnkit_core::{Report, SectionData};
use serde_json::{json, Value};

/// Violations shown in text mode before the rest is summarised.
pub const TEXT_VIOLATION_LIMIT: usize = 20;

/// Display names for element ids.
pub trait Labels {
    fn label(&self, i: usize) -> String;
    fn has_labels(&self) -> bool;
}

pub struct Plain;

impl Labels for Plain {
    fn label(&self, i: usize) -> String {
        i.to_string()
    }

    fn has_labels(&self) -> bool {
        false
    }
}

impl Labels for crate::format::StructureFile {
    fn label(&self, i: usize) -> String {
        crate::format::StructureFile::label(self, i)
    }

    fn has_labels(&self) -> bool {
        crate::format::StructureFile::has_labels(self)
    }
}

fn ids(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn data_text(d: &SectionData) -> String {
    match d {
        SectionData::Flag(b) => b.to_string(),
        SectionData::Set(v) => ids(v),
        SectionData::Pairs(v) => v.iter().map(|(a, b)| format!("({a}, {b})")).collect::<Vec<_>>().join(" "),
        SectionData::Triples(v) => v
            .iter()
            .map(|(a, b, c)| format!("({a}, {b}, {c})"))
            .collect::<Vec<_>>()
            .join(" "),
        SectionData::Text(s) => s.clone(),
    }
}

fn data_json(d: &SectionData) -> Value {
    match d {
        SectionData::Flag(b) => json!(b),
        SectionData::Set(v) => json!(v),
        SectionData::Pairs(v) => json!(v.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>()),
        SectionData::Triples(v) => json!(v.iter().map(|&(a, b, c)| [a, b, c]).collect::<Vec<_>>()),
        SectionData::Text(s) => json!(s),
    }
}

pub fn verdict(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

/// `title: pass|fail`, then one line per violation and per section.
pub fn report_text(title: &str, r: &Report, labels: &dyn Labels) -> String {
    let mut out = String::new();
    let n = r.violations().len();
    if r.passed() {
        writeln!(out, "{title}: pass").unwrap();
    } else {
        writeln!(out, "{title}: fail ({n} violation{})", if n == 1 { "" } else { "s" }).unwrap();
    }
    for v in r.violations().iter().take(TEXT_VIOLATION_LIMIT) {
        write!(out, "  {} {}", v.tag, ids(&v.witness)).unwrap();
        if labels.has_labels() {
            let names: Vec<String> = v.witness.iter().map(|&i| labels.label(i)).collect();
            write!(out, " = [{}]", names.join(", ")).unwrap();
        }
        if let Some(note) = &v.note {
            write!(out, " ({note})").unwrap();
        }
        out.push('\n');
    }
    if n > TEXT_VIOLATION_LIMIT {
        writeln!(out, "  ... and {} more", n - TEXT_VIOLATION_LIMIT).unwrap();
    }
    for s in r.sections() {
        writeln!(out, "  {}: {}", s.name, data_text(&s.data)).unwrap();
    }
    out
}

pub fn report_json(r: &Report) -> Value {
    let violations: Vec<Value> = r
        .violations()
        .iter()
        .map(|v| json!({ "tag": v.tag, "witness": v.witness, "note": v.note }))
        .collect();
    let sections: Vec<Value> = r
        .sections()
        .iter()
        .map(|s| json!({ "name": s.name, "value": data_json(&s.data) }))
        .collect();
    json!({
        "verdict": verdict(r.passed()),
        "violations": violations,
        "sections": sections,
    })
}
