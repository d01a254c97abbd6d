//! Morphism classes on both sides of the correspondence.
//!
//! Semigroupoid side: (2,1,1)-morphisms (`m1`, `m2`), ∨-premorphisms
//! (`vm1`, `vm2`) and ∧-premorphisms (`wm1`, `wm2`). Category side:
//! inductive functors (`if1`–`if5`), ordered functors (`of1`–`of3`) and
//! inductive prefunctors (`ip1`–`ip5`). The ∨ and ∧ kinds and their category
//! counterparts are only defined between restriction structures.

use alloc::format;
use alloc::vec::Vec;

use crate::biordered::{check_lbec, check_locally_inductive, BiorderedCategory, Inductive, Lbec};
use crate::correspondence::build_category;
use crate::error::{Error, Result};
use crate::order::OrderRel;
use crate::report::{Report, SectionData};
use crate::unary::{check_unary_axioms, AxiomKind, UnaryStructure};

/// A category-side structure that passed [`check_lbec`], with its
/// locally-inductive verdict cached.
#[derive(Debug, Clone)]
pub struct CheckedCategory {
    lbec: Lbec,
    lic: bool,
}

impl PartialEq for CheckedCategory {
    fn eq(&self, other: &Self) -> bool {
        self.lbec.bic() == other.lbec.bic()
    }
}

impl CheckedCategory {
    pub fn new(c: BiorderedCategory) -> Result<Self> {
        let chk = check_lbec(&c)?;
        match chk.lbec {
            Some(lbec) => Ok(Self::from_lbec(lbec)?),
            None => Err(Error::Precondition {
                required: "local biordered Ehresmann category",
                report: chk.report,
            }),
        }
    }

    pub fn from_lbec(lbec: Lbec) -> Result<Self> {
        let c = lbec.bic();
        let lic = c.leq_l() == c.leq_r()
            && check_locally_inductive(c.cat(), c.leq_l(), Inductive::Category)?.passed();
        Ok(Self { lbec, lic })
    }

    pub fn lbec(&self) -> &Lbec {
        &self.lbec
    }

    pub fn size(&self) -> usize {
        self.lbec.size()
    }

    /// `(C, ≤_l)` with `≤_l = ≤_r` is a locally inductive category.
    pub fn is_lic(&self) -> bool {
        self.lic
    }
}

/// A two-sided Ehresmann semigroupoid with `C(S)` and the restriction
/// verdict cached.
#[derive(Debug, Clone)]
pub struct EhresmannSgpd {
    s: UnaryStructure,
    restriction: bool,
    cat: CheckedCategory,
}

impl PartialEq for EhresmannSgpd {
    fn eq(&self, other: &Self) -> bool {
        self.s == other.s
    }
}

impl EhresmannSgpd {
    pub fn new(s: UnaryStructure) -> Result<Self> {
        let cat = CheckedCategory::new(build_category(&s)?).map_err(|e| match e {
            Error::Precondition { report, .. } => Error::Inconsistent(format!(
                "C(S) is not a local biordered Ehresmann category: {:?}",
                report.failed_tags()
            )),
            other => other,
        })?;
        let restriction = check_unary_axioms(&s, AxiomKind::TwoSidedRestriction)?.passed();
        if restriction != cat.is_lic() {
            return Err(Error::Inconsistent(format!(
                "restriction verdict {restriction} disagrees with C(S) being locally inductive"
            )));
        }
        Ok(Self { s, restriction, cat })
    }

    pub fn structure(&self) -> &UnaryStructure {
        &self.s
    }

    pub fn category(&self) -> &CheckedCategory {
        &self.cat
    }

    pub fn size(&self) -> usize {
        self.s.size()
    }

    pub fn is_restriction(&self) -> bool {
        self.restriction
    }

    /// `≤_l`; it equals `≤_r` on restriction semigroupoids.
    pub fn order(&self) -> &OrderRel {
        self.cat.lbec.bic().leq_l()
    }

    fn leq_r(&self) -> &OrderRel {
        self.cat.lbec.bic().leq_r()
    }
}

/// A total function between two checked carriers.
#[derive(Debug, Clone)]
pub struct CarrierMap<'a, T> {
    src: &'a T,
    dst: &'a T,
    send: Vec<usize>,
}

/// Carriers a [`CarrierMap`] can run between.
pub trait Carrier: PartialEq {
    fn carrier_size(&self) -> usize;
}

impl Carrier for EhresmannSgpd {
    fn carrier_size(&self) -> usize {
        self.size()
    }
}

impl Carrier for CheckedCategory {
    fn carrier_size(&self) -> usize {
        self.size()
    }
}

impl<'a, T: Carrier> CarrierMap<'a, T> {
    pub fn new(src: &'a T, dst: &'a T, send: Vec<usize>) -> Result<Self> {
        if send.len() != src.carrier_size() {
            return Err(Error::SizeMismatch {
                what: "map",
                expected: src.carrier_size(),
                found: send.len(),
            });
        }
        let bound = dst.carrier_size();
        if let Some((index, &value)) = send.iter().enumerate().find(|(_, &v)| v >= bound) {
            return Err(Error::OutOfRange {
                what: "map value",
                index,
                value,
                bound,
            });
        }
        Ok(Self { src, dst, send })
    }

    pub fn identity(on: &'a T) -> Self {
        Self {
            src: on,
            dst: on,
            send: (0..on.carrier_size()).collect(),
        }
    }

    pub fn src(&self) -> &'a T {
        self.src
    }

    pub fn dst(&self) -> &'a T {
        self.dst
    }

    pub fn send(&self) -> &[usize] {
        &self.send
    }

    #[inline]
    pub fn at(&self, x: usize) -> usize {
        self.send[x]
    }
}

/// `g ∘ f`, requiring the target of `f` to be the source of `g`.
pub fn compose_maps<'a, T: Carrier>(f: &CarrierMap<'a, T>, g: &CarrierMap<'a, T>) -> Result<CarrierMap<'a, T>> {
    if !(core::ptr::eq(f.dst, g.src) || f.dst == g.src) {
        return Err(Error::ClassMismatch("target of the first map is not the source of the second"));
    }
    Ok(CarrierMap {
        src: f.src,
        dst: g.dst,
        send: f.send.iter().map(|&x| g.send[x]).collect(),
    })
}

/// Every map from a carrier of size `n` to one of size `m`, in lexicographic
/// order of the value vector (last position varying fastest).
pub fn all_maps(n: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if n == 0 { 1 } else if m == 0 { 0 } else { m.pow(n as u32) };
    (0..total).map(move |mut k| {
        let mut v = alloc::vec![0; n];
        for slot in v.iter_mut().rev() {
            *slot = k % m;
            k /= m;
        }
        v
    })
}

/// Semigroupoid-side morphism kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SgpdKind {
    /// `m1`, `m2`.
    TwoOneOne,
    /// `vm1`, `vm2` with equality in `vm2`.
    Vee,
    /// `vm1` with `φ(s⁺) ≤ φ(s)⁺` and `φ(s*) ≤ φ(s)*` in place of `vm2`.
    VeeInequality,
    /// `wm1`, `wm2`.
    Wedge,
}

impl SgpdKind {
    pub const ALL: [SgpdKind; 4] = [Self::TwoOneOne, Self::Vee, Self::VeeInequality, Self::Wedge];

    pub fn name(self) -> &'static str {
        match self {
            Self::TwoOneOne => "two-one-one",
            Self::Vee => "vee",
            Self::VeeInequality => "vee-inequality",
            Self::Wedge => "wedge",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    fn needs_restriction(self) -> bool {
        self != Self::TwoOneOne
    }
}

/// Category-side functor kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatKind {
    /// `if1`–`if5`.
    Inductive,
    /// `of1`–`of3`.
    Ordered,
    /// `ip1`–`ip5`.
    Prefunctor,
}

impl CatKind {
    pub const ALL: [CatKind; 3] = [Self::Inductive, Self::Ordered, Self::Prefunctor];

    pub fn name(self) -> &'static str {
        match self {
            Self::Inductive => "inductive",
            Self::Ordered => "ordered",
            Self::Prefunctor => "prefunctor",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// The semigroupoid-side kind it corresponds to.
    pub fn counterpart(self) -> SgpdKind {
        match self {
            Self::Inductive => SgpdKind::TwoOneOne,
            Self::Ordered => SgpdKind::Vee,
            Self::Prefunctor => SgpdKind::Wedge,
        }
    }
}

/// Decides whether `m` belongs to the semigroupoid-side class `kind`.
///
/// Witnesses: `m1`, `vm1`, `wm1` `[s, t]`; `m2`, `vm2`, `wm2` `[s]` with the
/// failing half (`+` or `*`) in the note. For `wm1` a missing product is a
/// violation in its own right.
pub fn check_sgpd_map(m: &CarrierMap<'_, EhresmannSgpd>, kind: SgpdKind) -> Result<Report> {
    if kind.needs_restriction() && !(m.src.is_restriction() && m.dst.is_restriction()) {
        return Err(Error::ClassMismatch("this morphism kind needs restriction semigroupoids"));
    }
    let (s, t) = (&m.src.s, &m.dst.s);
    let leq = m.dst.order();
    let phi = |x: usize| m.at(x);
    let mut r = Report::new();
    for (a, b, ab) in s.base().products() {
        let (fa, fb, fab) = (phi(a), phi(b), phi(ab));
        match kind {
            SgpdKind::TwoOneOne => match t.mul(fa, fb) {
                Some(p) if p == fab => {}
                Some(p) => r.violate_with("m1", &[a, b], format!("φ(s)φ(t) = {p}, φ(st) = {fab}")),
                None => r.violate_with("m1", &[a, b], "φ(s)φ(t) undefined".into()),
            },
            SgpdKind::Vee | SgpdKind::VeeInequality => match t.mul(fa, fb) {
                Some(p) if leq.leq(fab, p) => {}
                Some(p) => r.violate_with("vm1", &[a, b], format!("φ(st) = {fab} is not below φ(s)φ(t) = {p}")),
                None => r.violate_with("vm1", &[a, b], "φ(s)φ(t) undefined".into()),
            },
            SgpdKind::Wedge => {
                let prod = t.mul(fa, fb);
                let left = t.mul(t.plus(fa), fab);
                let right = t.mul(fab, t.star(fb));
                match (prod, left, right) {
                    (Some(p), Some(l), Some(q)) if p == l && l == q => {}
                    (Some(_), Some(_), Some(_)) => {
                        r.violate_with("wm1", &[a, b], format!("{prod:?}, {left:?}, {right:?} differ"))
                    }
                    _ => r.violate_with("wm1", &[a, b], format!("undefined among {prod:?}, {left:?}, {right:?}")),
                }
            }
        }
    }
    for x in 0..s.size() {
        let (fx, fxp, fxs) = (phi(x), phi(s.plus(x)), phi(s.star(x)));
        let (fxplus, fxstar) = (t.plus(fx), t.star(fx));
        let (tag, plus_ok, star_ok) = match kind {
            SgpdKind::TwoOneOne => ("m2", fxp == fxplus, fxs == fxstar),
            SgpdKind::Vee => ("vm2", fxp == fxplus, fxs == fxstar),
            SgpdKind::VeeInequality => ("vm2", leq.leq(fxp, fxplus), leq.leq(fxs, fxstar)),
            SgpdKind::Wedge => ("wm2", leq.leq(fxplus, fxp), leq.leq(fxstar, fxs)),
        };
        if !plus_ok {
            r.violate_with(tag, &[x], "+".into());
        }
        if !star_ok {
            r.violate_with(tag, &[x], "*".into());
        }
    }
    Ok(r)
}

/// Decides whether `m` belongs to the category-side class `kind`.
///
/// Witnesses: `if1`, `of1` `[x]` (`D` or `R` in the note); `if2`, `of2`,
/// `ip1` `[x, y]`; `if3`, `if4`, `of3`, `ip3` `[x, y]` with `x ≤ y`; `if5`
/// `[e, f]`; `ip2` `[x]`; `ip4` `[x, e]` or `[f, x]` (side in the note);
/// `ip5` `[x, y]`. For prefunctors the well-definedness conditions come
/// first: `wd-objects` `[e]` when an object is not sent to an object and
/// `wd-product` `[x, y]` when `x ⊗ y` is defined but `φ(x) ⊗ φ(y)` is not.
/// The section `well-defined` records their verdict; axiom instances that
/// are not defined are skipped.
pub fn check_cat_functor(m: &CarrierMap<'_, CheckedCategory>, kind: CatKind) -> Result<Report> {
    if kind != CatKind::Inductive && !(m.src.is_lic() && m.dst.is_lic()) {
        return Err(Error::ClassMismatch("this functor kind needs locally inductive categories"));
    }
    let (c, d) = (&m.src.lbec, &m.dst.lbec);
    let (cc, dc) = (c.cat(), d.cat());
    let phi = |x: usize| m.at(x);
    let n = cc.size();
    let mut r = Report::new();

    let endpoints = |r: &mut Report, tag: &'static str| {
        for x in 0..n {
            if phi(cc.dom(x)) != dc.dom(phi(x)) {
                r.violate_with(tag, &[x], "D".into());
            }
            if phi(cc.ran(x)) != dc.ran(phi(x)) {
                r.violate_with(tag, &[x], "R".into());
            }
        }
    };
    let composition = |r: &mut Report, tag: &'static str| {
        for (x, y, xy) in cc.comp_table().products() {
            match dc.comp(phi(x), phi(y)) {
                Some(p) if p == phi(xy) => {}
                Some(p) => r.violate_with(tag, &[x, y], format!("φ(x)∘φ(y) = {p}, φ(x∘y) = {}", phi(xy))),
                None => r.violate_with(tag, &[x, y], "φ(x)∘φ(y) undefined".into()),
            }
        }
    };
    let monotone = |r: &mut Report, tag: &'static str, src: &OrderRel, dst: &OrderRel| {
        for (x, y) in src.strict_pairs() {
            if !dst.leq(phi(x), phi(y)) {
                r.violate(tag, &[x, y]);
            }
        }
    };

    match kind {
        CatKind::Inductive => {
            endpoints(&mut r, "if1");
            composition(&mut r, "if2");
            monotone(&mut r, "if3", c.bic().leq_l(), d.bic().leq_l());
            monotone(&mut r, "if4", c.bic().leq_r(), d.bic().leq_r());
            for &e in cc.objects() {
                for &f in cc.objects() {
                    let Some(ef) = c.meet(e, f) else { continue };
                    match d.meet(phi(e), phi(f)) {
                        Some(g) if g == phi(ef) => {}
                        Some(g) => r.violate_with("if5", &[e, f], format!("φ(e)∧φ(f) = {g}, φ(e∧f) = {}", phi(ef))),
                        None => r.violate_with("if5", &[e, f], "φ(e)∧φ(f) undefined".into()),
                    }
                }
            }
        }
        CatKind::Ordered => {
            endpoints(&mut r, "of1");
            composition(&mut r, "of2");
            monotone(&mut r, "of3", c.bic().leq_l(), d.bic().leq_l());
        }
        CatKind::Prefunctor => check_prefunctor(m, &mut r),
    }
    Ok(r)
}

fn check_prefunctor(m: &CarrierMap<'_, CheckedCategory>, r: &mut Report) {
    let (c, d) = (&m.src.lbec, &m.dst.lbec);
    let (cc, dc) = (c.cat(), d.cat());
    let (lc, ld) = (c.bic().leq_l(), d.bic().leq_l());
    let phi = |x: usize| m.at(x);
    let pp = |x: usize, y: usize| d.pseudo_product(x, y);
    let n = cc.size();

    let mut well_defined = true;
    for &e in cc.objects() {
        if !dc.is_object(phi(e)) {
            well_defined = false;
            r.violate("wd-objects", &[e]);
        }
    }
    for (x, y, _) in c.pseudo_product_table().products() {
        if pp(phi(x), phi(y)).is_none() {
            well_defined = false;
            r.violate("wd-product", &[x, y]);
        }
    }
    r.section("well-defined", SectionData::Flag(well_defined));

    for (x, y, xy) in cc.comp_table().products() {
        if let Some(p) = pp(phi(x), phi(y)) {
            if !ld.leq(p, phi(xy)) {
                r.violate("ip1", &[x, y]);
            }
        }
    }
    for x in 0..n {
        if !ld.leq(dc.dom(phi(x)), phi(cc.dom(x))) {
            r.violate_with("ip2", &[x], "D".into());
        }
        if !ld.leq(dc.ran(phi(x)), phi(cc.ran(x))) {
            r.violate_with("ip2", &[x], "R".into());
        }
    }
    for (x, y) in lc.strict_pairs() {
        if !ld.leq(phi(x), phi(y)) {
            r.violate("ip3", &[x, y]);
        }
    }
    for x in 0..n {
        for &e in cc.objects() {
            if let Some(xe) = c.pseudo_product(x, e) {
                if let Some(p) = pp(phi(x), phi(e)) {
                    if !ld.leq(p, phi(xe)) {
                        r.violate_with("ip4", &[x, e], "x ⊗ e".into());
                    }
                }
            }
            if let Some(ex) = c.pseudo_product(e, x) {
                if let Some(p) = pp(phi(e), phi(x)) {
                    if !ld.leq(p, phi(ex)) {
                        r.violate_with("ip4", &[e, x], "e ⊗ x".into());
                    }
                }
            }
        }
    }
    for (x, y, xy) in c.pseudo_product_table().products() {
        let Some(p) = pp(phi(x), phi(y)) else { continue };
        let (fx, fy, fxy) = (phi(x), phi(y), phi(xy));
        match d.meet(dc.ran(fx), dc.ran(fxy)) {
            Some(g) if g == dc.ran(p) => {}
            got => r.violate_with("ip5", &[x, y], format!("R: {:?} vs {}", got, dc.ran(p))),
        }
        match d.meet(dc.dom(fxy), dc.dom(fy)) {
            Some(g) if g == dc.dom(p) => {}
            got => r.violate_with("ip5", &[x, y], format!("D: {:?} vs {}", got, dc.dom(p))),
        }
    }
}

/// The six verdicts of [`verify_correspondence`]; the ∨/∧ side is `None`
/// unless both ends are restriction semigroupoids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdicts {
    pub two_one_one: bool,
    pub inductive: bool,
    pub vee: Option<bool>,
    pub ordered: Option<bool>,
    pub wedge: Option<bool>,
    pub prefunctor: Option<bool>,
}

/// Verdicts together with a report whose `theorem-violation` entries name
/// each biconditional that failed (note: the pair of kinds).
#[derive(Debug, Clone)]
pub struct Correspondence {
    pub verdicts: Verdicts,
    pub report: Report,
}

/// Runs the semigroupoid-side checks on `S → T` and the category-side
/// checks on `C(S) → C(T)` with the same underlying function, and compares
/// `two-one-one ⟺ inductive`, `vee ⟺ ordered` and `wedge ⟺ prefunctor`.
pub fn verify_correspondence(m: &CarrierMap<'_, EhresmannSgpd>) -> Result<Correspondence> {
    let cm = CarrierMap::new(&m.src.cat, &m.dst.cat, m.send.clone())?;
    let restriction = m.src.is_restriction() && m.dst.is_restriction();
    let sg = |k| -> Result<bool> { Ok(check_sgpd_map(m, k)?.passed()) };
    let ct = |k| -> Result<bool> { Ok(check_cat_functor(&cm, k)?.passed()) };
    let opt = |f: &dyn Fn() -> Result<bool>| -> Result<Option<bool>> {
        if restriction {
            f().map(Some)
        } else {
            Ok(None)
        }
    };
    let verdicts = Verdicts {
        two_one_one: sg(SgpdKind::TwoOneOne)?,
        inductive: ct(CatKind::Inductive)?,
        vee: opt(&|| sg(SgpdKind::Vee))?,
        ordered: opt(&|| ct(CatKind::Ordered))?,
        wedge: opt(&|| sg(SgpdKind::Wedge))?,
        prefunctor: opt(&|| ct(CatKind::Prefunctor))?,
    };
    let mut report = Report::new();
    let pairs = [
        ("two-one-one / inductive", Some(verdicts.two_one_one), Some(verdicts.inductive)),
        ("vee / ordered", verdicts.vee, verdicts.ordered),
        ("wedge / prefunctor", verdicts.wedge, verdicts.prefunctor),
    ];
    for (name, a, b) in pairs {
        if a != b {
            report.violate_with("theorem-violation", &[], format!("{name}: {a:?} vs {b:?}"));
        }
    }
    for (name, v) in [
        ("two-one-one", Some(verdicts.two_one_one)),
        ("inductive", Some(verdicts.inductive)),
        ("vee", verdicts.vee),
        ("ordered", verdicts.ordered),
        ("wedge", verdicts.wedge),
        ("prefunctor", verdicts.prefunctor),
    ] {
        if let Some(v) = v {
            report.section(name, SectionData::Flag(v));
        }
    }
    Ok(Correspondence { verdicts, report })
}

/// `s ≤ t ⇒ φ(s) ≤ φ(t)` for `≤_l` and `≤_r`; tag `order-preserving`
/// `[s, t]`.
pub fn check_order_preserving(m: &CarrierMap<'_, EhresmannSgpd>) -> Report {
    let mut r = Report::new();
    for (src, dst) in [(m.src.order(), m.dst.order()), (m.src.leq_r(), m.dst.leq_r())] {
        for (x, y) in src.strict_pairs() {
            if !dst.leq(m.at(x), m.at(y)) {
                r.violate("order-preserving", &[x, y]);
            }
        }
    }
    r
}

/// `e ∈ U ⇒ φ(e) ∈ V`; tag `projection-image` `[e]`.
pub fn check_projections_preserved(m: &CarrierMap<'_, EhresmannSgpd>) -> Report {
    let mut r = Report::new();
    let target = m.dst.s.projections();
    for e in m.src.s.projections() {
        if target.binary_search(&m.at(e)).is_err() {
            r.violate("projection-image", &[e]);
        }
    }
    r
}

/// `st` defined ⇒ `φ(s)φ(t)` defined and equal to `φ(st)`.
pub fn preserves_composition(m: &CarrierMap<'_, EhresmannSgpd>) -> bool {
    m.src
        .s
        .base()
        .products()
        .all(|(a, b, ab)| m.dst.s.mul(m.at(a), m.at(b)) == Some(m.at(ab)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::relations::{chain, three_element_category, z2};

    fn sg(s: UnaryStructure) -> EhresmannSgpd {
        EhresmannSgpd::new(s).unwrap()
    }

    #[test]
    fn identity_passes_everything() {
        for s in [sg(chain(2).unwrap()), sg(z2()), sg(three_element_category())] {
            let id = CarrierMap::identity(&s);
            for k in SgpdKind::ALL {
                assert!(check_sgpd_map(&id, k).unwrap().passed(), "{}", k.name());
            }
            let v = verify_correspondence(&id).unwrap();
            assert!(v.report.passed());
            assert_eq!(v.verdicts.prefunctor, Some(true));
            assert!(v.verdicts.inductive);
        }
    }

    #[test]
    fn collapse_onto_point() {
        let (a, b) = (sg(chain(2).unwrap()), sg(chain(1).unwrap()));
        let m = CarrierMap::new(&a, &b, vec![0, 0]).unwrap();
        assert!(check_sgpd_map(&m, SgpdKind::TwoOneOne).unwrap().passed());
        let v = verify_correspondence(&m).unwrap();
        assert!(v.verdicts.two_one_one && v.verdicts.inductive);
        assert!(v.report.passed());
    }

    #[test]
    fn group_into_trivial_fails_nothing_but_swap_fails_m2() {
        let g = sg(z2());
        let swap = CarrierMap::new(&g, &g, vec![1, 0]).unwrap();
        let r = check_sgpd_map(&swap, SgpdKind::TwoOneOne).unwrap();
        assert!(r.has("m1") && r.has("m2"));
        assert_eq!(r.violations()[0].witness, vec![0, 0]);
    }

    #[test]
    fn composition_requires_matching_middle() {
        let (a, b) = (sg(chain(2).unwrap()), sg(z2()));
        let f = CarrierMap::new(&a, &a, vec![1, 1]).unwrap();
        let g = CarrierMap::new(&b, &b, vec![0, 0]).unwrap();
        assert!(matches!(compose_maps(&f, &g), Err(Error::ClassMismatch(_))));
        let h = compose_maps(&f, &CarrierMap::identity(&a)).unwrap();
        assert_eq!(h.send(), &[1, 1]);
    }

    #[test]
    fn map_enumeration_counts() {
        assert_eq!(all_maps(2, 3).count(), 9);
        assert_eq!(all_maps(0, 0).count(), 1);
        assert_eq!(all_maps(1, 0).count(), 0);
        assert_eq!(all_maps(2, 2).collect::<Vec<_>>()[1], vec![0, 1]);
    }

    #[test]
    fn map_range_checked() {
        let a = sg(chain(2).unwrap());
        assert!(matches!(CarrierMap::new(&a, &a, vec![0, 2]), Err(Error::OutOfRange { .. })));
        assert!(matches!(CarrierMap::new(&a, &a, vec![0]), Err(Error::SizeMismatch { .. })));
    }
}
