//! Finite categories, ordered categories, restrictions and corestrictions.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::order::OrderRel;
use crate::report::{Report, SectionData};
use crate::table::PartialTable;
use crate::unary::UnaryStructure;

/// A category on the carrier `0..n`: objects, domain and range maps and a
/// composition table.
///
/// Construction only checks ranges and that `dom`/`ran` land in the objects;
/// the category axioms are checked by [`check_category`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteCategory {
    objects: Vec<usize>,
    is_object: Vec<bool>,
    dom: Vec<usize>,
    ran: Vec<usize>,
    comp: PartialTable,
}

fn check_object_map(what: &'static str, map: &[usize], is_object: &[bool]) -> Result<()> {
    let n = is_object.len();
    if map.len() != n {
        return Err(Error::SizeMismatch {
            what,
            expected: n,
            found: map.len(),
        });
    }
    for (index, &value) in map.iter().enumerate() {
        if value >= n {
            return Err(Error::OutOfRange {
                what,
                index,
                value,
                bound: n,
            });
        }
        if !is_object[value] {
            return Err(Error::NotAnObject { what, index, value });
        }
    }
    Ok(())
}

impl FiniteCategory {
    pub fn new(
        mut objects: Vec<usize>,
        dom: Vec<usize>,
        ran: Vec<usize>,
        comp: PartialTable,
    ) -> Result<Self> {
        let n = comp.size();
        objects.sort_unstable();
        objects.dedup();
        let mut is_object = vec![false; n];
        for (index, &e) in objects.iter().enumerate() {
            if e >= n {
                return Err(Error::OutOfRange {
                    what: "object",
                    index,
                    value: e,
                    bound: n,
                });
            }
            is_object[e] = true;
        }
        check_object_map("dom", &dom, &is_object)?;
        check_object_map("ran", &ran, &is_object)?;
        Ok(Self {
            objects,
            is_object,
            dom,
            ran,
            comp,
        })
    }

    pub fn size(&self) -> usize {
        self.comp.size()
    }

    /// Objects, sorted.
    pub fn objects(&self) -> &[usize] {
        &self.objects
    }

    #[inline]
    pub fn is_object(&self, x: usize) -> bool {
        self.is_object[x]
    }

    #[inline]
    pub fn dom(&self, x: usize) -> usize {
        self.dom[x]
    }

    #[inline]
    pub fn ran(&self, x: usize) -> usize {
        self.ran[x]
    }

    pub fn dom_map(&self) -> &[usize] {
        &self.dom
    }

    pub fn ran_map(&self) -> &[usize] {
        &self.ran
    }

    /// `x ∘ y`, applying `y` first.
    #[inline]
    pub fn comp(&self, x: usize, y: usize) -> Option<usize> {
        self.comp.get(x, y)
    }

    pub fn comp_table(&self) -> &PartialTable {
        &self.comp
    }

    /// The category seen as an Ehresmann semigroupoid with `x⁺ = R(x)` and
    /// `x* = D(x)`.
    pub fn as_unary(&self) -> UnaryStructure {
        UnaryStructure::new(self.comp.clone(), self.ran.clone(), Some(self.dom.clone()))
            .expect("maps were range-checked")
    }

    /// Relabels ids: element `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.size();
        let mut dom = vec![0; n];
        let mut ran = vec![0; n];
        for i in 0..n {
            dom[perm[i]] = perm[self.dom[i]];
            ran[perm[i]] = perm[self.ran[i]];
        }
        Self::new(
            self.objects.iter().map(|&e| perm[e]).collect(),
            dom,
            ran,
            self.comp.permuted(perm),
        )
        .expect("relabelling preserves well-formedness")
    }

    /// Two-sided inverses, when every arrow has exactly one. Otherwise the
    /// arrows without a unique inverse.
    pub fn groupoid_inverses(&self) -> core::result::Result<Vec<usize>, Vec<usize>> {
        let n = self.size();
        let mut inv = Vec::with_capacity(n);
        let mut bad = Vec::new();
        for x in 0..n {
            let cands: Vec<usize> = (0..n)
                .filter(|&y| self.comp(x, y) == Some(self.ran(x)) && self.comp(y, x) == Some(self.dom(x)))
                .collect();
            if cands.len() == 1 {
                inv.push(cands[0]);
            } else {
                bad.push(x);
            }
        }
        if bad.is_empty() {
            Ok(inv)
        } else {
            Err(bad)
        }
    }
}

/// Checks that composition is defined exactly on composable pairs, and C1–C3.
///
/// Tags: `comp-domain` `[x, y]`, `C1` `[x, y]`, `C2` `[x, y, z]`, `C3`
/// `[e]` (an object with `D(e) ≠ e` or `R(e) ≠ e`), `[x, e]` (`x∘e ≠ x`)
/// or `[e, y]` (`e∘y ≠ y`).
pub fn check_category(c: &FiniteCategory) -> Report {
    let n = c.size();
    let mut report = Report::new();
    for x in 0..n {
        for y in 0..n {
            let composable = c.dom(x) == c.ran(y);
            match c.comp(x, y) {
                Some(_) if !composable => report.violate("comp-domain", &[x, y]),
                None if composable => report.violate("comp-domain", &[x, y]),
                Some(xy) if c.dom(xy) != c.dom(y) || c.ran(xy) != c.ran(x) => {
                    report.violate("C1", &[x, y])
                }
                _ => {}
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if c.dom(x) != c.ran(y) {
                continue;
            }
            for z in 0..n {
                if c.dom(y) != c.ran(z) {
                    continue;
                }
                let left = c.comp(x, y).and_then(|xy| c.comp(xy, z));
                let right = c.comp(y, z).and_then(|yz| c.comp(x, yz));
                if left.is_none() || left != right {
                    report.violate("C2", &[x, y, z]);
                }
            }
        }
    }
    for &e in c.objects() {
        if c.dom(e) != e || c.ran(e) != e {
            report.violate("C3", &[e]);
        }
    }
    for x in 0..n {
        let d = c.dom(x);
        if c.comp(x, d) != Some(x) {
            report.violate("C3", &[x, d]);
        }
        let r = c.ran(x);
        if c.comp(r, x) != Some(x) {
            report.violate("C3", &[r, x]);
        }
    }
    report
}

/// Which of (Or) and (Oc) [`check_ordered`] requires besides O1 and O2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderMode {
    Plain,
    Restrictions,
    Corestrictions,
    Both,
}

impl OrderMode {
    fn restrictions(self) -> bool {
        matches!(self, OrderMode::Restrictions | OrderMode::Both)
    }

    fn corestrictions(self) -> bool {
        matches!(self, OrderMode::Corestrictions | OrderMode::Both)
    }
}

/// Lookup table for restrictions `x|e` or corestrictions `e|x`, indexed by
/// arrow and object. An entry is present exactly when the candidate is
/// unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionTable {
    n: usize,
    entries: Vec<Option<usize>>,
}

impl RestrictionTable {
    /// For restrictions, `get(x, e) = x|e`; for corestrictions,
    /// `get(x, e) = e|x`.
    #[inline]
    pub fn get(&self, x: usize, e: usize) -> Option<usize> {
        self.entries[x * self.n + e]
    }

    /// All present entries as `(x, e, value)`.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        (0..n * n)
            .filter_map(|k| self.entries[k].map(|v| (k / n, k % n, v)))
            .collect()
    }
}

/// Result of [`check_ordered`].
#[derive(Debug, Clone)]
pub struct OrderedCheck {
    pub report: Report,
    /// Present in the restriction modes, even when some entry is missing.
    pub restrictions: Option<RestrictionTable>,
    /// Present in the corestriction modes, even when some entry is missing.
    pub corestrictions: Option<RestrictionTable>,
}

/// Exhaustive search for `x|e` (`side_of = dom`) or `e|x` (`side_of = ran`).
fn search(
    c: &FiniteCategory,
    o: &OrderRel,
    side_of: impl Fn(usize) -> usize,
    tag: &'static str,
    report: &mut Report,
) -> RestrictionTable {
    let n = c.size();
    let mut entries = vec![None; n * n];
    for x in 0..n {
        for &e in c.objects() {
            if !o.leq(e, side_of(x)) {
                continue;
            }
            let cands: Vec<usize> = (0..n).filter(|&z| o.leq(z, x) && side_of(z) == e).collect();
            match cands.len() {
                1 => entries[x * n + e] = Some(cands[0]),
                0 => report.violate_with(tag, &[x, e], "no candidate".into()),
                _ => {
                    let mut w = vec![x, e];
                    w.extend(&cands);
                    report.violate_with(tag, &w, "uniqueness violated".into());
                }
            }
        }
    }
    RestrictionTable { n, entries }
}

/// Checks that `(c, o)` is an ordered category, optionally with restrictions
/// and/or corestrictions.
///
/// `c` must pass [`check_category`] and `o` must be a partial order; either
/// failure is returned as an [`Error::Precondition`]. Tags: `O1` `[x, y]`,
/// `O2` `[x, y, x', y']`, `Or` and `Oc` `[x, e]` when no candidate exists or
/// `[x, e, candidates…]` when several do. When all required (co)restrictions
/// exist, the characterisations `x ≤ y ⟺ D(x) ≤ D(y) ∧ y|D(x) = x` and
/// `x ≤ y ⟺ R(x) ≤ R(y) ∧ R(x)|y = x` are re-verified under the tags
/// `order-via-restriction` and `order-via-corestriction`.
pub fn check_ordered(c: &FiniteCategory, o: &OrderRel, mode: OrderMode) -> Result<OrderedCheck> {
    let n = c.size();
    if o.size() != n {
        return Err(Error::SizeMismatch {
            what: "order",
            expected: n,
            found: o.size(),
        });
    }
    let cat = check_category(c);
    if !cat.passed() {
        return Err(Error::Precondition {
            required: "category",
            report: cat,
        });
    }
    let laws = o.check_partial_order();
    if !laws.passed() {
        return Err(Error::Precondition {
            required: "partial order",
            report: laws,
        });
    }
    let mut report = Report::new();
    for (x, y) in o.pairs() {
        if !o.leq(c.dom(x), c.dom(y)) || !o.leq(c.ran(x), c.ran(y)) {
            report.violate("O1", &[x, y]);
        }
    }
    let pairs = o.pairs();
    for &(x, y) in &pairs {
        for &(x2, y2) in &pairs {
            if let (Some(a), Some(b)) = (c.comp(x, x2), c.comp(y, y2)) {
                if !o.leq(a, b) {
                    report.violate("O2", &[x, y, x2, y2]);
                }
            }
        }
    }
    let mut restrictions = None;
    let mut corestrictions = None;
    if mode.restrictions() {
        let before = report.violations().len();
        let table = search(c, o, |x| c.dom(x), "Or", &mut report);
        if report.violations().len() == before {
            for x in 0..n {
                for y in 0..n {
                    let rhs = o.leq(c.dom(x), c.dom(y)) && table.get(y, c.dom(x)) == Some(x);
                    if o.leq(x, y) != rhs {
                        report.violate("order-via-restriction", &[x, y]);
                    }
                }
            }
        }
        report.section("restrictions", SectionData::Triples(table.triples()));
        restrictions = Some(table);
    }
    if mode.corestrictions() {
        let before = report.violations().len();
        let table = search(c, o, |x| c.ran(x), "Oc", &mut report);
        if report.violations().len() == before {
            for x in 0..n {
                for y in 0..n {
                    let rhs = o.leq(c.ran(x), c.ran(y)) && table.get(y, c.ran(x)) == Some(x);
                    if o.leq(x, y) != rhs {
                        report.violate("order-via-corestriction", &[x, y]);
                    }
                }
            }
        }
        report.section("corestrictions", SectionData::Triples(table.triples()));
        corestrictions = Some(table);
    }
    Ok(OrderedCheck {
        report,
        restrictions,
        corestrictions,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// `e ←x− f`: ids `e = 0`, `f = 1`, `x = 2`.
    pub(crate) fn arrow() -> FiniteCategory {
        let comp = PartialTable::from_entries(
            3,
            vec![Some(0), None, Some(2), None, Some(1), None, None, Some(2), None],
        )
        .unwrap();
        FiniteCategory::new(vec![0, 1], vec![0, 1, 1], vec![0, 1, 0], comp).unwrap()
    }

    #[test]
    fn single_object() {
        let c = FiniteCategory::new(vec![0], vec![0], vec![0], PartialTable::from_fn(1, |_, _| Some(0)).unwrap())
            .unwrap();
        assert!(check_category(&c).passed());
    }

    #[test]
    fn arrow_is_a_category() {
        assert!(check_category(&arrow()).passed());
        assert_eq!(arrow().as_unary(), crate::relations::three_element_category());
    }

    #[test]
    fn missing_identity_composite() {
        let a = arrow();
        let mut comp = a.comp_table().clone();
        comp.set(2, 1, None).unwrap();
        let c = FiniteCategory::new(vec![0, 1], a.dom_map().to_vec(), a.ran_map().to_vec(), comp).unwrap();
        let r = check_category(&c);
        assert!(r.violations().iter().any(|v| v.tag == "C3" && v.witness == [2, 1]));
        assert!(r.has("comp-domain"));
    }

    #[test]
    fn dom_outside_objects_is_input_error() {
        let a = arrow();
        let err = FiniteCategory::new(vec![0], a.dom_map().to_vec(), a.ran_map().to_vec(), a.comp_table().clone())
            .unwrap_err();
        assert!(err.is_input_error());
    }

    #[test]
    fn discrete_order_restrictions_are_trivial() {
        let a = arrow();
        let chk = check_ordered(&a, &OrderRel::discrete(3), OrderMode::Both).unwrap();
        assert!(chk.report.passed(), "{:?}", chk.report.violations());
        let r = chk.restrictions.unwrap();
        assert_eq!(r.triples(), vec![(0, 0, 0), (1, 1, 1), (2, 1, 2)]);
        let co = chk.corestrictions.unwrap();
        assert_eq!(co.triples(), vec![(0, 0, 0), (1, 1, 1), (2, 0, 2)]);
    }

    #[test]
    fn parallel_arrows_both_ways_fail_antisymmetry() {
        // Two parallel loops a, b on one object o: o = 0, a = 1, b = 2, with
        // composition making {o, a, b} the monoid where a, b are left zeros.
        let comp = PartialTable::from_fn(3, |x, y| Some(if x == 0 { y } else { x })).unwrap();
        let c = FiniteCategory::new(vec![0], vec![0; 3], vec![0; 3], comp).unwrap();
        assert!(check_category(&c).passed());
        let o = OrderRel::from_pairs_reflexive(3, &[(1, 2), (2, 1)]).unwrap();
        match check_ordered(&c, &o, OrderMode::Plain) {
            Err(Error::Precondition { required, report }) => {
                assert_eq!(required, "partial order");
                assert!(report.has("order-antisymmetric"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn restriction_uniqueness_failure_lists_candidates() {
        // Object o = 0 with loops a = 1, b = 2 (left zeros) and the order
        // a ≤ o, b ≤ o: o|o has candidates o only (D(a) = o too, so a, b
        // also qualify).
        let comp = PartialTable::from_fn(3, |x, y| Some(if x == 0 { y } else { x })).unwrap();
        let c = FiniteCategory::new(vec![0], vec![0; 3], vec![0; 3], comp).unwrap();
        let o = OrderRel::from_pairs_reflexive(3, &[(1, 0), (2, 0)]).unwrap();
        let chk = check_ordered(&c, &o, OrderMode::Restrictions).unwrap();
        let v = chk.report.violations().iter().find(|v| v.tag == "Or").unwrap();
        assert_eq!(v.witness, vec![0, 0, 0, 1, 2]);
        assert_eq!(v.note.as_deref(), Some("uniqueness violated"));
    }

    #[test]
    fn groupoid_inverses_of_arrow() {
        assert_eq!(arrow().groupoid_inverses(), Err(vec![2]));
    }
}
