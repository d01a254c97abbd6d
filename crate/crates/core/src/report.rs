use alloc::string::String;
use alloc::vec::Vec;

/// One violated axiom instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Axiom name, e.g. `le3`, `O2`, `ec5`, `ip4`.
    pub tag: &'static str,
    /// Element ids instantiating the axiom's variables, in the axiom's order.
    pub witness: Vec<usize>,
    pub note: Option<String>,
}

/// Derived data attached to a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SectionData {
    Flag(bool),
    Set(Vec<usize>),
    Pairs(Vec<(usize, usize)>),
    Triples(Vec<(usize, usize, usize)>),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub name: String,
    pub data: SectionData,
}

/// Outcome of a check: the verdict is a pass exactly when no violation was
/// recorded.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    violations: Vec<Violation>,
    sections: Vec<Section>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn sections(&self) -> &[Section] {
        &self.sections
    }

    pub fn violate(&mut self, tag: &'static str, witness: &[usize]) {
        self.violations.push(Violation {
            tag,
            witness: witness.to_vec(),
            note: None,
        });
    }

    pub fn violate_with(&mut self, tag: &'static str, witness: &[usize], note: String) {
        self.violations.push(Violation {
            tag,
            witness: witness.to_vec(),
            note: Some(note),
        });
    }

    pub fn section(&mut self, name: impl Into<String>, data: SectionData) {
        self.sections.push(Section {
            name: name.into(),
            data,
        });
    }

    pub fn find_section(&self, name: &str) -> Option<&SectionData> {
        self.sections.iter().find(|s| s.name == name).map(|s| &s.data)
    }

    /// Appends the violations and sections of `other`.
    pub fn absorb(&mut self, other: Report) {
        self.violations.extend(other.violations);
        self.sections.extend(other.sections);
    }

    /// Number of violations carrying the given tag.
    pub fn count(&self, tag: &str) -> usize {
        self.violations.iter().filter(|v| v.tag == tag).count()
    }

    pub fn has(&self, tag: &str) -> bool {
        self.count(tag) > 0
    }

    /// Tags in first-occurrence order, without repetition.
    pub fn failed_tags(&self) -> Vec<&'static str> {
        let mut tags: Vec<&'static str> = Vec::new();
        for v in &self.violations {
            if !tags.contains(&v.tag) {
                tags.push(v.tag);
            }
        }
        tags
    }
}
