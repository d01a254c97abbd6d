//! Partial multiplication tables and the semigroupoid associativity check.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::report::{Report, SectionData};

/// A partially defined binary operation on the ids `0..size`.
///
/// Entry `(i, j)` holds `Some(k)` when `i·j = k` and `None` when the product
/// is undefined. Labels are for display only and do not take part in
/// equality.
#[derive(Debug, Clone, Eq)]
pub struct PartialTable {
    size: usize,
    entries: Vec<Option<usize>>,
    labels: Option<Vec<String>>,
}

impl PartialEq for PartialTable {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.entries == other.entries
    }
}

impl core::hash::Hash for PartialTable {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.size.hash(state);
        self.entries.hash(state);
    }
}

impl PartialTable {
    /// The table on `size` elements with every product undefined.
    pub fn new(size: usize) -> Self {
        Self {
            size,
            entries: vec![None; size * size],
            labels: None,
        }
    }

    /// Builds a table from row-major entries, rejecting out-of-range values.
    pub fn from_entries(size: usize, entries: Vec<Option<usize>>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::SizeMismatch {
                what: "table entries",
                expected: size * size,
                found: entries.len(),
            });
        }
        if let Some((index, value)) = entries
            .iter()
            .enumerate()
            .find_map(|(i, e)| e.filter(|&v| v >= size).map(|v| (i, v)))
        {
            return Err(Error::OutOfRange {
                what: "table entry",
                index,
                value,
                bound: size,
            });
        }
        Ok(Self {
            size,
            entries,
            labels: None,
        })
    }

    /// Builds a table by evaluating `f` on every pair.
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> Option<usize>) -> Result<Self> {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        Self::from_entries(size, entries)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        self.entries[i * self.size + j]
    }

    #[inline]
    pub fn defined(&self, i: usize, j: usize) -> bool {
        self.get(i, j).is_some()
    }

    pub fn set(&mut self, i: usize, j: usize, value: Option<usize>) -> Result<()> {
        for (what, x) in [("row", i), ("column", j)] {
            if x >= self.size {
                return Err(Error::OutOfRange {
                    what,
                    index: x,
                    value: x,
                    bound: self.size,
                });
            }
        }
        if let Some(v) = value.filter(|&v| v >= self.size) {
            return Err(Error::OutOfRange {
                what: "table entry",
                index: i * self.size + j,
                value: v,
                bound: self.size,
            });
        }
        self.entries[i * self.size + j] = value;
        Ok(())
    }

    pub fn entries(&self) -> &[Option<usize>] {
        &self.entries
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::SizeMismatch {
                what: "labels",
                expected: self.size,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Display name of an id: its label if present, otherwise the number.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("{i}"),
        }
    }

    /// `true` when every product is defined, i.e. the table is a semigroup
    /// candidate.
    pub fn is_total(&self) -> bool {
        self.entries.iter().all(Option::is_some)
    }

    /// All `(i, j, i·j)` with the product defined, in row-major order.
    pub fn products(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.size;
        self.entries
            .iter()
            .enumerate()
            .filter_map(move |(c, e)| e.map(|k| (c / n, c % n, k)))
    }

    /// Elements `e` with `e·e = e`.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size).filter(|&e| self.get(e, e) == Some(e)).collect()
    }

    /// The table of `s ⋆op t = t ⋆ s`.
    pub fn opposite(&self) -> Self {
        let n = self.size;
        let mut out = Self::new(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[i * n + j] = self.get(j, i);
            }
        }
        out.labels = self.labels.clone();
        out
    }

    /// Relabels ids: element `i` becomes `perm[i]`.
    ///
    /// `perm` must be a permutation of `0..size`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.size;
        let mut out = Self::new(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[perm[i] * n + perm[j]] = self.get(i, j).map(|k| perm[k]);
            }
        }
        if let Some(labels) = &self.labels {
            let mut l = vec![String::new(); n];
            for i in 0..n {
                l[perm[i]] = labels[i].clone();
            }
            out.labels = Some(l);
        }
        out
    }

    /// The operation restricted to `ids`, re-indexed by position in `ids`.
    ///
    /// Products of two members that land outside `ids` make the subset not
    /// closed; that is reported as an inconsistency.
    pub fn restrict(&self, ids: &[usize]) -> Result<Self> {
        let m = ids.len();
        let mut pos = vec![None; self.size];
        for (p, &i) in ids.iter().enumerate() {
            pos[i] = Some(p);
        }
        let mut out = Self::new(m);
        for (a, &i) in ids.iter().enumerate() {
            for (b, &j) in ids.iter().enumerate() {
                if let Some(k) = self.get(i, j) {
                    let p = pos[k].ok_or_else(|| {
                        Error::Inconsistent(format!("subset not closed: {i}·{j} = {k}"))
                    })?;
                    out.entries[a * m + b] = Some(p);
                }
            }
        }
        Ok(out)
    }
}

/// Checks the three-hypothesis associativity of a semigroupoid.
///
/// For every triple `(s, t, r)` and every hypothesis that holds
///
/// * `s1`: `st` and `tr` are defined,
/// * `s2`: `st` and `(st)r` are defined,
/// * `s3`: `tr` and `s(tr)` are defined,
///
/// all four of `st`, `tr`, `(st)r`, `s(tr)` must be defined and the two
/// bracketings equal. Each failing (hypothesis, triple) pair is recorded with
/// witness `[s, t, r]`.
pub fn check_associativity(t: &PartialTable) -> Report {
    let mut report = Report::new();
    let n = t.size();
    for s in 0..n {
        for u in 0..n {
            for r in 0..n {
                if let Some(fail) = associativity_failure(t, s, u, r) {
                    for (tag, holds) in [("s1", fail.h1), ("s2", fail.h2), ("s3", fail.h3)] {
                        if holds {
                            report.violate_with(tag, &[s, u, r], String::from(fail.reason));
                        }
                    }
                }
            }
        }
    }
    report.section("semigroupoid", SectionData::Flag(report.passed()));
    report
}

struct AssocFailure {
    h1: bool,
    h2: bool,
    h3: bool,
    reason: &'static str,
}

fn associativity_failure(t: &PartialTable, s: usize, u: usize, r: usize) -> Option<AssocFailure> {
    let su = t.get(s, u);
    let ur = t.get(u, r);
    let su_r = su.and_then(|x| t.get(x, r));
    let s_ur = ur.and_then(|x| t.get(s, x));
    let h1 = su.is_some() && ur.is_some();
    let h2 = su_r.is_some();
    let h3 = s_ur.is_some();
    if !(h1 || h2 || h3) {
        return None;
    }
    let reason = match (su, ur, su_r, s_ur) {
        (Some(_), Some(_), Some(a), Some(b)) if a == b => return None,
        (Some(_), Some(_), Some(_), Some(_)) => "bracketings differ",
        _ => "required product undefined",
    };
    Some(AssocFailure { h1, h2, h3, reason })
}

/// Same condition as [`check_associativity`] but on a partially assigned
/// table: `None` when some cell the triple depends on is still undecided.
///
/// Cells are `None` (undecided), `Some(None)` (undefined) or
/// `Some(Some(k))`.
pub(crate) fn triple_decided_ok(
    n: usize,
    cells: &[Option<Option<usize>>],
    s: usize,
    u: usize,
    r: usize,
) -> Option<bool> {
    let cell = |i: usize, j: usize| cells[i * n + j];
    let su = cell(s, u)?;
    let ur = cell(u, r)?;
    let su_r = match su {
        Some(x) => cell(x, r)?,
        None => None,
    };
    let s_ur = match ur {
        Some(x) => cell(s, x)?,
        None => None,
    };
    let h = (su.is_some() && ur.is_some()) || su_r.is_some() || s_ur.is_some();
    if !h {
        return Some(true);
    }
    Some(matches!((su, ur, su_r, s_ur), (Some(_), Some(_), Some(a), Some(b)) if a == b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: usize, products: &[(usize, usize, usize)]) -> PartialTable {
        let mut t = PartialTable::new(n);
        for &(i, j, k) in products {
            t.set(i, j, Some(k)).unwrap();
        }
        t
    }

    /// Independent oracle: the definition spelled out per hypothesis.
    fn oracle_violations(t: &PartialTable) -> Vec<(&'static str, [usize; 3])> {
        let n = t.size();
        let mut out = Vec::new();
        for s in 0..n {
            for u in 0..n {
                for r in 0..n {
                    let su = t.get(s, u);
                    let ur = t.get(u, r);
                    let su_r = su.and_then(|x| t.get(x, r));
                    let s_ur = ur.and_then(|x| t.get(s, x));
                    let conclusion = su.is_some()
                        && ur.is_some()
                        && su_r.is_some()
                        && s_ur.is_some()
                        && su_r == s_ur;
                    let hyps = [
                        ("s1", su.is_some() && ur.is_some()),
                        ("s2", su.is_some() && su_r.is_some()),
                        ("s3", ur.is_some() && s_ur.is_some()),
                    ];
                    for (tag, h) in hyps {
                        if h && !conclusion {
                            out.push((tag, [s, u, r]));
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn single_idempotent_passes() {
        assert!(check_associativity(&table(1, &[(0, 0, 0)])).passed());
    }

    #[test]
    fn empty_and_undefined_tables_pass() {
        assert!(check_associativity(&PartialTable::new(0)).passed());
        assert!(check_associativity(&PartialTable::new(3)).passed());
    }

    #[test]
    fn half_defined_pair_fails_at_one_triple() {
        // e = 0, f = 1: ee = e, ff = f, ef = e, fe undefined.
        let t = table(2, &[(0, 0, 0), (1, 1, 1), (0, 1, 0)]);
        let report = check_associativity(&t);
        assert!(!report.passed());
        let got: Vec<(&str, [usize; 3])> = report
            .violations()
            .iter()
            .map(|v| (v.tag, [v.witness[0], v.witness[1], v.witness[2]]))
            .collect();
        assert_eq!(got, oracle_violations(&t));
        // (e, f, e): ef·e is defined but fe is not.
        assert_eq!(got, vec![("s2", [0, 1, 0])]);
    }

    #[test]
    fn differing_bracketings_are_reported() {
        // x·y = x + 1 mod 2: (x·y)·z = x but x·(y·z) = x + 1.
        let t = PartialTable::from_fn(2, |x, _| Some((x + 1) % 2)).unwrap();
        let report = check_associativity(&t);
        assert!(!report.passed());
        assert!(report.violations().iter().all(|v| v.note.as_deref() == Some("bracketings differ")));
        assert_eq!(report.violations().len(), oracle_violations(&t).len());
    }

    #[test]
    fn out_of_range_entries_are_input_errors() {
        let err = PartialTable::from_entries(2, vec![Some(0), None, Some(5), None]).unwrap_err();
        assert!(err.is_input_error());
        assert!(matches!(err, Error::OutOfRange { value: 5, .. }));
        let mut t = PartialTable::new(3);
        assert!(t.set(0, 0, Some(3)).is_err());
        assert!(t.set(3, 0, Some(0)).is_err());
    }

    #[test]
    fn partial_evaluation_agrees_on_complete_tables() {
        let t = table(2, &[(0, 0, 0), (1, 1, 1), (0, 1, 0)]);
        let cells: Vec<Option<Option<usize>>> = t.entries().iter().map(|&e| Some(e)).collect();
        for s in 0..2 {
            for u in 0..2 {
                for r in 0..2 {
                    let ok = triple_decided_ok(2, &cells, s, u, r).unwrap();
                    assert_eq!(ok, associativity_failure(&t, s, u, r).is_none());
                }
            }
        }
        let mut partial = cells.clone();
        partial[1] = None;
        assert_eq!(triple_decided_ok(2, &partial, 0, 1, 0), None);
    }

    #[test]
    fn permuting_and_restricting() {
        let t = table(3, &[(0, 0, 0), (1, 1, 1), (0, 1, 0), (1, 0, 0)]);
        let p = t.permuted(&[2, 0, 1]);
        assert_eq!(p.get(2, 2), Some(2));
        assert_eq!(p.get(2, 0), Some(2));
        let sub = t.restrict(&[0, 1]).unwrap();
        assert_eq!(sub.size(), 2);
        assert!(sub.is_total());
        assert!(table(2, &[(0, 0, 1)]).restrict(&[0]).is_err());
    }
}
