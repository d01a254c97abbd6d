//! The constructions `C(S)` and `S(C)`, round-trip verification,
//! category-structure search and classification along the class lattice.

use alloc::format;
use alloc::vec::Vec;

use crate::biordered::{check_lbec, check_locally_inductive, BiorderedCategory, Inductive, Lbec};
use crate::category::{check_category, FiniteCategory};
use crate::error::{Error, Result};
use crate::inverse::is_inverse_structure;
use crate::report::{Report, SectionData};
use crate::semilattice::{block_top, check_local_meet_semilattice};
use crate::table::{check_associativity, PartialTable};
use crate::unary::{derive_order, AxiomKind, Side, UnaryStructure};

/// Largest idempotent count [`find_category_structures`] will search over.
pub const MAX_IDEMPOTENTS: usize = 20;

fn require_ehresmann(s: &UnaryStructure) -> Result<()> {
    let r = crate::unary::check_unary_axioms(s, AxiomKind::TwoSidedEhresmann)?;
    if r.passed() {
        Ok(())
    } else {
        Err(Error::Precondition {
            required: "two-sided Ehresmann semigroupoid",
            report: r,
        })
    }
}

/// `C(S)`: same carrier, objects the projections, `D(s) = s*`,
/// `R(s) = s⁺`, `s ∘ t = st` when `s* = t⁺`, and the orders `≤_l`, `≤_r`.
pub fn build_category(s: &UnaryStructure) -> Result<BiorderedCategory> {
    require_ehresmann(s)?;
    let n = s.size();
    let mut comp = PartialTable::new(n);
    for x in 0..n {
        for y in 0..n {
            if s.star(x) != s.plus(y) {
                continue;
            }
            let v = s
                .mul(x, y)
                .ok_or_else(|| Error::Inconsistent(format!("{x}* = {y}⁺ but {x}{y} is undefined")))?;
            comp.set(x, y, Some(v))?;
        }
    }
    let cat = FiniteCategory::new(
        s.projections(),
        s.star_map().expect("checked two-sided").to_vec(),
        s.plus_map().to_vec(),
        comp,
    )?;
    BiorderedCategory::new(cat, derive_order(s, Side::Left)?, derive_order(s, Side::Right)?)
}

/// `C(S)` together with its validated lbec data; a failing lbec check is an
/// [`Error::Inconsistent`].
pub fn build_lbec(s: &UnaryStructure) -> Result<Lbec> {
    let c = build_category(s)?;
    let chk = check_lbec(&c)?;
    chk.lbec.ok_or_else(|| {
        Error::Inconsistent(format!(
            "C(S) fails the biordered category axioms: {:?}",
            chk.report.failed_tags()
        ))
    })
}

/// `S(C)`: the pseudo-product with `x⁺ = R(x)` and `x* = D(x)`.
pub fn build_semigroupoid(c: &BiorderedCategory) -> Result<UnaryStructure> {
    let chk = check_lbec(c)?;
    let Some(l) = chk.lbec else {
        return Err(Error::Precondition {
            required: "local biordered Ehresmann category",
            report: chk.report,
        });
    };
    let s = l.to_semigroupoid();
    if !s.satisfies(AxiomKind::TwoSidedEhresmann) {
        return Err(Error::Inconsistent("S(C) is not a two-sided Ehresmann semigroupoid".into()));
    }
    Ok(s)
}

/// Input to [`roundtrip_verify`].
#[derive(Debug, Clone, Copy)]
pub enum RoundTrip<'a> {
    Semigroupoid(&'a UnaryStructure),
    Category(&'a BiorderedCategory),
}

/// Compares `S(C(S))` with `S`, or `C(S(C))` with `C`, entry by entry.
///
/// Tags: `roundtrip-table` `[x, y]`, `roundtrip-plus` and `roundtrip-star`
/// `[x]`, `roundtrip-objects` `[e]`, `roundtrip-dom` and `roundtrip-ran`
/// `[x]`, `roundtrip-comp` `[x, y]`, `roundtrip-leq-l` and `roundtrip-leq-r`
/// `[x, y]`. Any violation means one of the constructions is wrong.
pub fn roundtrip_verify(input: RoundTrip<'_>) -> Result<Report> {
    let mut report = Report::new();
    match input {
        RoundTrip::Semigroupoid(s) => {
            let back = build_semigroupoid(&build_category(s)?)?;
            compare_unary(&mut report, s, &back);
        }
        RoundTrip::Category(c) => {
            let s = build_semigroupoid(c)?;
            let back = build_category(&s)?;
            compare_bic(&mut report, c, &back);
        }
    }
    Ok(report)
}

fn compare_unary(report: &mut Report, a: &UnaryStructure, b: &UnaryStructure) {
    let n = a.size();
    for x in 0..n {
        for y in 0..n {
            if a.mul(x, y) != b.mul(x, y) {
                report.violate("roundtrip-table", &[x, y]);
            }
        }
        if a.plus(x) != b.plus(x) {
            report.violate("roundtrip-plus", &[x]);
        }
        if a.star(x) != b.star(x) {
            report.violate("roundtrip-star", &[x]);
        }
    }
}

fn compare_bic(report: &mut Report, a: &BiorderedCategory, b: &BiorderedCategory) {
    let (ca, cb) = (a.cat(), b.cat());
    let n = ca.size();
    for e in 0..n {
        if ca.is_object(e) != cb.is_object(e) {
            report.violate("roundtrip-objects", &[e]);
        }
    }
    for x in 0..n {
        if ca.dom(x) != cb.dom(x) {
            report.violate("roundtrip-dom", &[x]);
        }
        if ca.ran(x) != cb.ran(x) {
            report.violate("roundtrip-ran", &[x]);
        }
        for y in 0..n {
            if ca.comp(x, y) != cb.comp(x, y) {
                report.violate("roundtrip-comp", &[x, y]);
            }
            if a.leq_l().leq(x, y) != b.leq_l().leq(x, y) {
                report.violate("roundtrip-leq-l", &[x, y]);
            }
            if a.leq_r().leq(x, y) != b.leq_r().leq(x, y) {
                report.violate("roundtrip-leq-r", &[x, y]);
            }
        }
    }
}

/// Every category structure on the semigroupoid `t`, objects chosen among
/// the idempotents in increasing bitmask order; at most `limit` are
/// returned.
///
/// Once the objects are fixed, `D(x)` must be the unique object `e` with
/// `xe` defined and `R(x)` the unique object with `ex` defined, so the search
/// is complete.
pub fn find_category_structures(t: &PartialTable, limit: usize) -> Result<Vec<FiniteCategory>> {
    let idem = t.idempotents();
    if idem.len() > MAX_IDEMPOTENTS {
        return Err(Error::SizeGuard {
            what: "idempotents in category search",
            requested: idem.len(),
            limit: MAX_IDEMPOTENTS,
        });
    }
    let n = t.size();
    let mut found = Vec::new();
    for mask in 0u32..(1u32 << idem.len()) {
        if found.len() >= limit {
            break;
        }
        let objects: Vec<usize> = (0..idem.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| idem[k])
            .collect();
        let unique = |pick: &dyn Fn(usize) -> bool| -> Option<usize> {
            let mut it = objects.iter().copied().filter(|&e| pick(e));
            let first = it.next()?;
            it.next().is_none().then_some(first)
        };
        let mut dom = Vec::with_capacity(n);
        let mut ran = Vec::with_capacity(n);
        let mut ok = true;
        for x in 0..n {
            match (unique(&|e| t.defined(x, e)), unique(&|e| t.defined(e, x))) {
                (Some(d), Some(r)) => {
                    dom.push(d);
                    ran.push(r);
                }
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let c = FiniteCategory::new(objects, dom, ran, t.clone())?;
        if check_category(&c).passed() {
            found.push(c);
        }
    }
    Ok(found)
}

/// The first category structure on `t` in search order, if any.
pub fn find_category_structure(t: &PartialTable) -> Result<Option<FiniteCategory>> {
    Ok(find_category_structures(t, 1)?.into_iter().next())
}

/// Lifts category structures found on the projections to `S`:
/// `D(s) = d(s*)` and `R(s) = r(s⁺)`. At most `limit` are returned, in the
/// search order of [`find_category_structures`] on the projections. Each
/// lift is re-checked; a lift failing the category axioms is an
/// [`Error::Inconsistent`].
pub fn extend_category_structures(s: &UnaryStructure, limit: usize) -> Result<Vec<FiniteCategory>> {
    require_ehresmann(s)?;
    let u = s.projections();
    let ut = s.base().restrict(&u)?;
    let mut out = Vec::new();
    for small in find_category_structures(&ut, limit)? {
        let d = |e: usize| u[small.dom(u.binary_search(&e).expect("projection"))];
        let r = |e: usize| u[small.ran(u.binary_search(&e).expect("projection"))];
        let n = s.size();
        let dom: Vec<usize> = (0..n).map(|x| d(s.star(x))).collect();
        let ran: Vec<usize> = (0..n).map(|x| r(s.plus(x))).collect();
        let objects: Vec<usize> = small.objects().iter().map(|&k| u[k]).collect();
        let c = FiniteCategory::new(objects, dom, ran, s.base().clone())?;
        let chk = check_category(&c);
        if !chk.passed() {
            return Err(Error::Inconsistent(format!(
                "lifted category structure fails {:?}",
                chk.failed_tags()
            )));
        }
        out.push(c);
    }
    Ok(out)
}

/// The first lifted category structure, if the projections admit one.
pub fn extend_category_structure(s: &UnaryStructure) -> Result<Option<FiniteCategory>> {
    Ok(extend_category_structures(s, 1)?.into_iter().next())
}

/// Membership flags along the class lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassFlags {
    pub is_semigroupoid: bool,
    pub is_ehresmann: bool,
    pub is_restriction: bool,
    pub is_inverse: bool,
    /// The operation is total.
    pub is_semigroup: bool,
    pub admits_category_structure: bool,
    pub projections_meet_semilattice: bool,
    pub projections_locally_complete: bool,
}

impl ClassFlags {
    /// `(name, value)` pairs in declaration order.
    pub fn entries(&self) -> [(&'static str, bool); 8] {
        [
            ("semigroupoid", self.is_semigroupoid),
            ("ehresmann", self.is_ehresmann),
            ("restriction", self.is_restriction),
            ("inverse", self.is_inverse),
            ("semigroup", self.is_semigroup),
            ("admits-category-structure", self.admits_category_structure),
            ("projections-meet-semilattice", self.projections_meet_semilattice),
            ("projections-locally-complete", self.projections_locally_complete),
        ]
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new();
        for (name, value) in self.entries() {
            r.section(name, SectionData::Flag(value));
        }
        r
    }
}

fn disagree(what: &str, direct: bool, via: bool) -> Error {
    Error::Inconsistent(format!("{what}: direct route says {direct}, category route says {via}"))
}

/// Classifies `s`, computing each Ehresmann-level flag both directly on `S`
/// and through `C(S)` and failing with [`Error::Inconsistent`] if the two
/// routes disagree.
///
/// The base table must be a semigroupoid. Inputs that are not two-sided
/// Ehresmann get `is_ehresmann = false` and false for the flags that are
/// only defined for Ehresmann structures; totality and the category search
/// on `S` are still reported.
pub fn classify(s: &UnaryStructure) -> Result<ClassFlags> {
    let assoc = check_associativity(s.base());
    if !assoc.passed() {
        return Err(Error::Precondition {
            required: "semigroupoid",
            report: assoc,
        });
    }
    let mut f = ClassFlags {
        is_semigroupoid: true,
        is_semigroup: s.base().is_total(),
        admits_category_structure: find_category_structure(s.base())?.is_some(),
        ..ClassFlags::default()
    };
    if !s.has_star() || !s.satisfies(AxiomKind::TwoSidedEhresmann) {
        return Ok(f);
    }
    f.is_ehresmann = true;
    let l = build_lbec(s)?;
    let c = l.bic();
    let orders_equal = c.leq_l() == c.leq_r();

    f.is_restriction = s.satisfies(AxiomKind::TwoSidedRestriction);
    let lic = orders_equal
        && check_locally_inductive(c.cat(), c.leq_l(), Inductive::Category)?.passed();
    if f.is_restriction != lic {
        return Err(disagree("restriction", f.is_restriction, lic));
    }

    f.is_inverse = is_inverse_structure(s)?;
    let lig = orders_equal
        && check_locally_inductive(c.cat(), c.leq_l(), Inductive::Groupoid)?.passed();
    if f.is_inverse != lig {
        return Err(disagree("inverse", f.is_inverse, lig));
    }

    let meet = l.object_meet().table();
    let (lms, blocks) = check_local_meet_semilattice(meet)?;
    if !lms.passed() {
        return Err(Error::Inconsistent("object meet is not a local meet-semilattice".into()));
    }
    f.projections_meet_semilattice = blocks.len() <= 1;
    if f.is_semigroup != f.projections_meet_semilattice {
        return Err(disagree("semigroup", f.is_semigroup, f.projections_meet_semilattice));
    }

    f.projections_locally_complete = blocks.blocks().iter().all(|b| block_top(meet, b).is_some());
    if f.admits_category_structure != f.projections_locally_complete {
        return Err(disagree(
            "category",
            f.admits_category_structure,
            f.projections_locally_complete,
        ));
    }
    let lifted = extend_category_structure(s)?.is_some();
    if lifted != f.projections_locally_complete {
        return Err(disagree("category lift", lifted, f.projections_locally_complete));
    }
    Ok(f)
}

/// The groupoid inverses of `C(S)` for an inverse `S`, checked against the
/// pseudo-inverses. Tag `inverse-mismatch` `[s]`.
pub fn check_inverse_correspondence(s: &UnaryStructure) -> Result<Report> {
    let pseudo = crate::inverse::check_inverse(s.base())?;
    let Some(inv) = pseudo.inverse else {
        return Err(Error::Precondition {
            required: "inverse semigroupoid",
            report: pseudo.report,
        });
    };
    let c = build_category(s)?;
    let mut report = check_locally_inductive(c.cat(), c.leq_l(), Inductive::Groupoid)?;
    if c.leq_l() != c.leq_r() {
        report.violate("orders-differ", &[]);
    }
    match c.cat().groupoid_inverses() {
        Ok(g) => {
            for x in 0..s.size() {
                if g[x] != inv.get(x) {
                    report.violate("inverse-mismatch", &[x]);
                }
            }
        }
        Err(bad) => {
            for x in bad {
                report.violate("inverse-mismatch", &[x]);
            }
        }
    }
    Ok(report)
}

/// The number of objects in a category structure's object set, for use by
/// callers reporting lifted structures.
pub fn object_count(c: &FiniteCategory) -> usize {
    c.objects().len()
}
