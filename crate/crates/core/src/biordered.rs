//! Categories carrying two partial orders: local biordered Ehresmann
//! categories, their pseudo-product, and the single-order special cases
//! (locally inductive categories and groupoids).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::category::{check_category, check_ordered, FiniteCategory, OrderMode, RestrictionTable};
use crate::error::{Error, Result};
use crate::order::OrderRel;
use crate::report::{Report, SectionData};
use crate::semilattice::{check_local_meet_semilattice, meet_from_order};
use crate::table::{check_associativity, PartialTable};
use crate::unary::UnaryStructure;

/// A category with a left order `≤_l` and a right order `≤_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiorderedCategory {
    cat: FiniteCategory,
    leq_l: OrderRel,
    leq_r: OrderRel,
}

impl BiorderedCategory {
    pub fn new(cat: FiniteCategory, leq_l: OrderRel, leq_r: OrderRel) -> Result<Self> {
        for o in [&leq_l, &leq_r] {
            if o.size() != cat.size() {
                return Err(Error::SizeMismatch {
                    what: "order",
                    expected: cat.size(),
                    found: o.size(),
                });
            }
        }
        Ok(Self { cat, leq_l, leq_r })
    }

    /// The same order on both sides.
    pub fn single(cat: FiniteCategory, leq: OrderRel) -> Result<Self> {
        Self::new(cat, leq.clone(), leq)
    }

    pub fn cat(&self) -> &FiniteCategory {
        &self.cat
    }

    pub fn leq_l(&self) -> &OrderRel {
        &self.leq_l
    }

    pub fn leq_r(&self) -> &OrderRel {
        &self.leq_r
    }

    pub fn size(&self) -> usize {
        self.cat.size()
    }

    /// Relabels ids: element `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self {
            cat: self.cat.permuted(perm),
            leq_l: self.leq_l.permuted(perm),
            leq_r: self.leq_r.permuted(perm),
        }
    }
}

/// The meet on the objects, stored compactly and addressed by carrier ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectMeet {
    objects: Vec<usize>,
    index_of: Vec<Option<usize>>,
    table: PartialTable,
}

impl ObjectMeet {
    fn new(n: usize, objects: &[usize], table: PartialTable) -> Self {
        let mut index_of = vec![None; n];
        for (k, &e) in objects.iter().enumerate() {
            index_of[e] = Some(k);
        }
        Self {
            objects: objects.to_vec(),
            index_of,
            table,
        }
    }

    /// `e ∧ f` for objects `e`, `f`; `None` when undefined or either
    /// argument is not an object.
    #[inline]
    pub fn meet(&self, e: usize, f: usize) -> Option<usize> {
        let (a, b) = (self.index_of[e]?, self.index_of[f]?);
        self.table.get(a, b).map(|k| self.objects[k])
    }

    pub fn objects(&self) -> &[usize] {
        &self.objects
    }

    /// The meet table indexed by position in [`objects`](Self::objects).
    pub fn table(&self) -> &PartialTable {
        &self.table
    }
}

/// The meet on the objects determined by their common order.
///
/// Fails with a precondition error when `≤_l` and `≤_r` disagree on the
/// objects (`ec4`) or when some pair in a comparability component lacks a
/// greatest lower bound (`meet-missing`).
pub fn derive_meet(c: &BiorderedCategory) -> Result<ObjectMeet> {
    let objects = c.cat.objects();
    let mut ec4 = Report::new();
    for &e in objects {
        for &f in objects {
            if c.leq_l.leq(e, f) != c.leq_r.leq(e, f) {
                ec4.violate("ec4", &[e, f]);
            }
        }
    }
    if !ec4.passed() {
        return Err(Error::Precondition {
            required: "biordered category whose orders agree on objects",
            report: ec4,
        });
    }
    let (table, report) = meet_from_order(&c.leq_l, objects);
    if !report.passed() {
        return Err(Error::Precondition {
            required: "local meet-semilattice",
            report,
        });
    }
    verify_meet(&table)?;
    Ok(ObjectMeet::new(c.size(), objects, table))
}

fn verify_meet(table: &PartialTable) -> Result<()> {
    match check_local_meet_semilattice(table) {
        Ok((r, _)) if r.passed() => Ok(()),
        _ => Err(Error::Inconsistent(
            "meet derived from an order is not a local meet-semilattice".into(),
        )),
    }
}

/// A biordered category that passed [`check_lbec`], with its restriction,
/// corestriction, meet and pseudo-product tables.
#[derive(Debug, Clone)]
pub struct Lbec {
    bic: BiorderedCategory,
    restrictions: RestrictionTable,
    corestrictions: RestrictionTable,
    meet: ObjectMeet,
    product: PartialTable,
}

impl Lbec {
    pub fn bic(&self) -> &BiorderedCategory {
        &self.bic
    }

    pub fn cat(&self) -> &FiniteCategory {
        &self.bic.cat
    }

    pub fn size(&self) -> usize {
        self.bic.size()
    }

    /// `x|e`, defined when `e ≤ D(x)`.
    #[inline]
    pub fn restrict(&self, x: usize, e: usize) -> Option<usize> {
        self.restrictions.get(x, e)
    }

    /// `e|x`, defined when `e ≤ R(x)`.
    #[inline]
    pub fn corestrict(&self, e: usize, x: usize) -> Option<usize> {
        self.corestrictions.get(x, e)
    }

    #[inline]
    pub fn meet(&self, e: usize, f: usize) -> Option<usize> {
        self.meet.meet(e, f)
    }

    pub fn object_meet(&self) -> &ObjectMeet {
        &self.meet
    }

    /// `x ⊗ y = (x|e) ∘ (e|y)` with `e = D(x) ∧ R(y)`.
    #[inline]
    pub fn pseudo_product(&self, x: usize, y: usize) -> Option<usize> {
        self.product.get(x, y)
    }

    pub fn pseudo_product_table(&self) -> &PartialTable {
        &self.product
    }

    /// The semigroupoid `(C, ⊗)` with `x⁺ = R(x)` and `x* = D(x)`.
    pub fn to_semigroupoid(&self) -> UnaryStructure {
        let c = self.cat();
        UnaryStructure::new(self.product.clone(), c.ran_map().to_vec(), Some(c.dom_map().to_vec()))
            .expect("maps were range-checked")
    }
}

/// Result of [`check_lbec`]; `lbec` is present exactly when the report
/// passed.
#[derive(Debug, Clone)]
pub struct LbecCheck {
    pub report: Report,
    pub lbec: Option<Lbec>,
}

/// Re-files every violation of `sub` under `tag`, keeping the original tag
/// in the note.
fn retag(report: &mut Report, tag: &'static str, sub: &Report, suffix: &str) {
    for v in sub.violations() {
        let mut note = String::from(v.tag);
        if let Some(n) = &v.note {
            note.push_str(": ");
            note.push_str(n);
        }
        note.push_str(suffix);
        report.violate_with(tag, &v.witness, note);
    }
}

/// Checks ec1–ec7.
///
/// Category and partial-order failures are reported (under their own tags,
/// or `ec1`/`ec2` for the two orders) and stop the check. Otherwise every
/// axiom is evaluated; when `ec4` fails, the meet is taken from `≤_l` and
/// the `ec5`–`ec7` violations are noted as conditional on `ec4`. The
/// well-definedness conditions of `ec6`/`ec7` (meets and (co)restrictions
/// existing) are checked as part of those axioms.
pub fn check_lbec(c: &BiorderedCategory) -> Result<LbecCheck> {
    let cat = &c.cat;
    let n = cat.size();
    let mut report = Report::new();
    let cat_report = check_category(cat);
    if !cat_report.passed() {
        report.absorb(cat_report);
        return Ok(LbecCheck { report, lbec: None });
    }
    let laws_l = c.leq_l.check_partial_order();
    let laws_r = c.leq_r.check_partial_order();
    if !laws_l.passed() || !laws_r.passed() {
        retag(&mut report, "ec1", &laws_l, "");
        retag(&mut report, "ec2", &laws_r, "");
        return Ok(LbecCheck { report, lbec: None });
    }

    let ec1 = check_ordered(cat, &c.leq_l, OrderMode::Corestrictions)?;
    retag(&mut report, "ec1", &ec1.report, "");
    let corestrictions = ec1.corestrictions.expect("requested");
    let ec2 = check_ordered(cat, &c.leq_r, OrderMode::Restrictions)?;
    retag(&mut report, "ec2", &ec2.report, "");
    let restrictions = ec2.restrictions.expect("requested");

    let objects = cat.objects();
    let (meet_table, ec3) = meet_from_order(&c.leq_l, objects);
    retag(&mut report, "ec3", &ec3, "");
    if ec3.passed() {
        verify_meet(&meet_table)?;
    }
    let meet = ObjectMeet::new(n, objects, meet_table);

    let mut ec4_ok = true;
    for &e in objects {
        for &f in objects {
            if c.leq_l.leq(e, f) != c.leq_r.leq(e, f) {
                ec4_ok = false;
                report.violate("ec4", &[e, f]);
            }
        }
    }
    let suffix = if ec4_ok { "" } else { " (conditional on ec4)" };
    let flag = |report: &mut Report, tag: &'static str, w: &[usize], what: &str| {
        report.violate_with(tag, w, format!("{what}{suffix}"));
    };

    let lr = c.leq_l.compose(&c.leq_r)?;
    let rl = c.leq_r.compose(&c.leq_l)?;
    for x in 0..n {
        for y in 0..n {
            if lr.leq(x, y) != rl.leq(x, y) {
                flag(&mut report, "ec5", &[x, y], "composed orders differ");
            }
        }
    }

    for (x, y) in c.leq_l.pairs() {
        for &e in objects {
            let Some(a) = meet.meet(cat.dom(x), e) else {
                continue;
            };
            let Some(b) = meet.meet(cat.dom(y), e) else {
                flag(&mut report, "ec6", &[x, y, e], "D(y)∧e undefined");
                continue;
            };
            match (restrictions.get(x, a), restrictions.get(y, b)) {
                (Some(xa), Some(yb)) if c.leq_l.leq(xa, yb) => {}
                (Some(_), Some(_)) => flag(&mut report, "ec6", &[x, y, e], "restrictions not ≤_l"),
                _ => flag(&mut report, "ec6", &[x, y, e], "restriction missing"),
            }
        }
    }
    for (x, y) in c.leq_r.pairs() {
        for &e in objects {
            let Some(a) = meet.meet(e, cat.ran(x)) else {
                continue;
            };
            let Some(b) = meet.meet(e, cat.ran(y)) else {
                flag(&mut report, "ec7", &[x, y, e], "e∧R(y) undefined");
                continue;
            };
            match (corestrictions.get(x, a), corestrictions.get(y, b)) {
                (Some(ax), Some(by)) if c.leq_r.leq(ax, by) => {}
                (Some(_), Some(_)) => flag(&mut report, "ec7", &[x, y, e], "corestrictions not ≤_r"),
                _ => flag(&mut report, "ec7", &[x, y, e], "corestriction missing"),
            }
        }
    }
    report.section("conditional-on-ec4", SectionData::Flag(!ec4_ok));

    if !report.passed() {
        return Ok(LbecCheck { report, lbec: None });
    }
    report.section("restrictions", SectionData::Triples(restrictions.triples()));
    report.section("corestrictions", SectionData::Triples(corestrictions.triples()));
    let mut product = PartialTable::new(n);
    for x in 0..n {
        for y in 0..n {
            let Some(e) = meet.meet(cat.dom(x), cat.ran(y)) else {
                continue;
            };
            let value = restrictions
                .get(x, e)
                .zip(corestrictions.get(y, e))
                .and_then(|(xe, ey)| cat.comp(xe, ey))
                .ok_or_else(|| Error::Inconsistent(format!("pseudo-product of {x} and {y} cannot be formed")))?;
            product.set(x, y, Some(value))?;
        }
    }
    let lbec = Lbec {
        bic: c.clone(),
        restrictions,
        corestrictions,
        meet,
        product,
    };
    Ok(LbecCheck {
        report,
        lbec: Some(lbec),
    })
}

/// Checks the algebraic laws of the pseudo-product exhaustively.
///
/// Tags: `pp-assoc` (associativity in the three-hypothesis sense, note
/// carries the hypothesis), `pp-defined` `[x, y, z]` (the three definedness
/// conditions disagree), `pp-restrict` `[x, e, f]` (`(x|e)|f = x|f` and
/// `x|f ≤_r x|e ≤_r x`), `pp-corestrict` `[x, e, f]` (the dual),
/// `pp-as-restriction` `[x, e]` (`x|e = x⊗e`, `e|x = e⊗x`), `pp-objects`
/// `[e, f]` (`e⊗f = e∧f = f⊗e`), `pp-ends` `[x, y]` (`R(x⊗y) = R(x⊗R(y))`,
/// `D(x⊗y) = D(D(x)⊗y)`), `pp-unit` `[x]` (`x⊗D(x) = x = R(x)⊗x`) and
/// `pp-regroup` `[x, y, z]` (with `(x⊗y)⊗z` defined and `f = D(x)∧R(y)`,
/// it equals `(x|f)⊗((f|y)⊗z)`, and also `x⊗(y⊗z)` when `x` or `y` is an
/// object).
pub fn check_pseudo_product_laws(l: &Lbec) -> Report {
    let cat = l.cat();
    let n = cat.size();
    let objects = cat.objects();
    let (le_l, le_r) = (l.bic.leq_l(), l.bic.leq_r());
    let pp = |x, y| l.pseudo_product(x, y);
    let mut report = Report::new();
    retag(&mut report, "pp-assoc", &check_associativity(&l.product), "");

    for x in 0..n {
        for y in 0..n {
            let xy = pp(x, y);
            for z in 0..n {
                let yz = pp(y, z);
                let d1 = xy.is_some() && yz.is_some();
                let d2 = xy.is_some_and(|v| pp(v, z).is_some());
                let d3 = yz.is_some_and(|v| pp(x, v).is_some());
                if d1 != d2 || d1 != d3 {
                    report.violate("pp-defined", &[x, y, z]);
                }
            }
        }
    }

    // The object order is ≤_r restricted to objects, which equals ≤_l there.
    for x in 0..n {
        for &e in objects {
            for &f in objects {
                if le_r.leq(f, e) && le_r.leq(e, cat.dom(x)) {
                    let ok = match (l.restrict(x, e), l.restrict(x, f)) {
                        (Some(xe), Some(xf)) => {
                            l.restrict(xe, f) == Some(xf) && le_r.leq(xf, xe) && le_r.leq(xe, x)
                        }
                        _ => false,
                    };
                    if !ok {
                        report.violate("pp-restrict", &[x, e, f]);
                    }
                }
                if le_l.leq(f, e) && le_l.leq(e, cat.ran(x)) {
                    let ok = match (l.corestrict(e, x), l.corestrict(f, x)) {
                        (Some(ex), Some(fx)) => {
                            l.corestrict(f, ex) == Some(fx) && le_l.leq(fx, ex) && le_l.leq(ex, x)
                        }
                        _ => false,
                    };
                    if !ok {
                        report.violate("pp-corestrict", &[x, e, f]);
                    }
                }
            }
            if le_r.leq(e, cat.dom(x)) && l.restrict(x, e) != pp(x, e) {
                report.violate("pp-as-restriction", &[x, e]);
            }
            if le_l.leq(e, cat.ran(x)) && l.corestrict(e, x) != pp(e, x) {
                report.violate("pp-as-restriction", &[e, x]);
            }
        }
    }

    for &e in objects {
        for &f in objects {
            let m = l.meet(e, f);
            if pp(e, f) != m || pp(f, e) != m {
                report.violate("pp-objects", &[e, f]);
            }
        }
    }

    for x in 0..n {
        for y in 0..n {
            let Some(xy) = pp(x, y) else { continue };
            let r_ok = pp(x, cat.ran(y)).map(|v| cat.ran(v)) == Some(cat.ran(xy));
            let d_ok = pp(cat.dom(x), y).map(|v| cat.dom(v)) == Some(cat.dom(xy));
            if !r_ok || !d_ok {
                report.violate("pp-ends", &[x, y]);
            }
        }
        if pp(x, cat.dom(x)) != Some(x) || pp(cat.ran(x), x) != Some(x) {
            report.violate("pp-unit", &[x]);
        }
    }

    for x in 0..n {
        for y in 0..n {
            let Some(xy) = pp(x, y) else { continue };
            for z in 0..n {
                let Some(left) = pp(xy, z) else { continue };
                let split = l.meet(cat.dom(x), cat.ran(y)).and_then(|f| {
                    let inner = pp(l.corestrict(f, y)?, z)?;
                    pp(l.restrict(x, f)?, inner)
                });
                let mut ok = split == Some(left);
                if cat.is_object(x) || cat.is_object(y) {
                    ok &= pp(y, z).and_then(|v| pp(x, v)) == Some(left);
                }
                if !ok {
                    report.violate("pp-regroup", &[x, y, z]);
                }
            }
        }
    }
    report
}

/// Whether [`check_locally_inductive`] should also require a groupoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inductive {
    Category,
    Groupoid,
}

/// Checks that `(c, o)` is a locally inductive category (ordered with
/// restrictions and corestrictions, objects a local meet-semilattice) and,
/// for [`Inductive::Groupoid`], a locally inductive groupoid.
///
/// Tags: `ic1` and `ic2` (sub-check tag in the note), `groupoid` `[x]` for
/// arrows without a unique inverse, `ig1` `[x, y]`. Sections `lic` and
/// `groupoid` are always present. The verdict is cross-checked against
/// [`check_lbec`] on `(c, o, o)`, and a groupoid passing `lic` must satisfy
/// `ig1`; a disagreement is an [`Error::Inconsistent`].
pub fn check_locally_inductive(c: &FiniteCategory, o: &OrderRel, want: Inductive) -> Result<Report> {
    let mut report = Report::new();
    let cat_report = check_category(c);
    let laws = o.check_partial_order();
    if !cat_report.passed() || !laws.passed() {
        report.absorb(cat_report);
        report.absorb(laws);
        report.section("lic", SectionData::Flag(false));
        report.section("groupoid", SectionData::Flag(false));
        return Ok(report);
    }
    let ic1 = check_ordered(c, o, OrderMode::Both)?;
    retag(&mut report, "ic1", &ic1.report, "");
    let (_, ic2) = meet_from_order(o, c.objects());
    retag(&mut report, "ic2", &ic2, "");
    let lic = report.passed();
    let via_lbec = check_lbec(&BiorderedCategory::single(c.clone(), o.clone())?)?
        .report
        .passed();
    if lic != via_lbec {
        return Err(Error::Inconsistent(format!(
            "locally inductive: {lic}, but as a biordered category with equal orders: {via_lbec}"
        )));
    }
    report.section("lic", SectionData::Flag(lic));

    let groupoid = c.groupoid_inverses();
    report.section("groupoid", SectionData::Flag(groupoid.is_ok()));
    if want == Inductive::Groupoid {
        match &groupoid {
            Err(bad) => {
                for &x in bad {
                    report.violate("groupoid", &[x]);
                }
            }
            Ok(inv) => {
                let mut ig1_ok = true;
                for (x, y) in o.pairs() {
                    if !o.leq(inv[x], inv[y]) {
                        ig1_ok = false;
                        report.violate("ig1", &[x, y]);
                    }
                }
                if lic && !ig1_ok {
                    return Err(Error::Inconsistent(
                        "a locally inductive category that is a groupoid fails ig1".into(),
                    ));
                }
                report.section("inverses", SectionData::Pairs(inv.iter().copied().enumerate().collect()));
            }
        }
    }
    Ok(report)
}

/// On a locally inductive category: `x|e = R(x|e)|x` and `e|x = x|D(e|x)`.
///
/// Tags `swap-restriction` `[x, e]` and `swap-corestriction` `[e, x]`.
pub fn check_restriction_corestriction_swap(c: &FiniteCategory, o: &OrderRel) -> Result<Report> {
    let lic = check_locally_inductive(c, o, Inductive::Category)?;
    if !lic.passed() {
        return Err(Error::Precondition {
            required: "locally inductive category",
            report: lic,
        });
    }
    let chk = check_ordered(c, o, OrderMode::Both)?;
    let (restr, corestr) = (chk.restrictions.expect("requested"), chk.corestrictions.expect("requested"));
    let mut report = Report::new();
    for x in 0..c.size() {
        for &e in c.objects() {
            if let Some(xe) = restr.get(x, e) {
                if corestr.get(x, c.ran(xe)) != Some(xe) {
                    report.violate("swap-restriction", &[x, e]);
                }
            }
            if let Some(ex) = corestr.get(x, e) {
                if restr.get(x, c.dom(ex)) != Some(ex) {
                    report.violate("swap-corestriction", &[e, x]);
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::tests::arrow;

    fn discrete(c: FiniteCategory) -> BiorderedCategory {
        let n = c.size();
        BiorderedCategory::single(c, OrderRel::discrete(n)).unwrap()
    }

    #[test]
    fn discrete_arrow_is_lbec() {
        let chk = check_lbec(&discrete(arrow())).unwrap();
        assert!(chk.report.passed(), "{:?}", chk.report.violations());
        let l = chk.lbec.unwrap();
        assert_eq!(l.pseudo_product_table(), arrow().comp_table());
        assert!(check_pseudo_product_laws(&l).passed());
    }

    #[test]
    fn discrete_objects_meet_only_on_diagonal() {
        let m = derive_meet(&discrete(arrow())).unwrap();
        assert_eq!(m.meet(0, 0), Some(0));
        assert_eq!(m.meet(0, 1), None);
        assert_eq!(m.meet(2, 2), None);
    }

    #[test]
    fn ec4_disagreement_blocks_derive_meet() {
        let a = arrow();
        let l = OrderRel::from_pairs_reflexive(3, &[(0, 1)]).unwrap();
        let c = BiorderedCategory::new(a, l, OrderRel::discrete(3)).unwrap();
        assert!(matches!(derive_meet(&c), Err(Error::Precondition { .. })));
        let chk = check_lbec(&c).unwrap();
        assert!(chk.report.has("ec4"));
        assert!(chk.lbec.is_none());
    }

    #[test]
    fn discrete_arrow_is_lic_not_lig() {
        let a = arrow();
        let o = OrderRel::discrete(3);
        let r = check_locally_inductive(&a, &o, Inductive::Category).unwrap();
        assert!(r.passed());
        let g = check_locally_inductive(&a, &o, Inductive::Groupoid).unwrap();
        assert_eq!(g.failed_tags(), vec!["groupoid"]);
        assert!(check_restriction_corestriction_swap(&a, &o).unwrap().passed());
    }

    #[test]
    fn broken_category_is_reported_not_raised() {
        let a = arrow();
        let mut comp = a.comp_table().clone();
        comp.set(0, 2, None).unwrap();
        let c = FiniteCategory::new(vec![0, 1], a.dom_map().to_vec(), a.ran_map().to_vec(), comp).unwrap();
        let chk = check_lbec(&discrete(c)).unwrap();
        assert!(chk.report.has("comp-domain"));
    }
}
