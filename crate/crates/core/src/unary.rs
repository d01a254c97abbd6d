//! Semigroupoids with the unary operations `+` and `*`: the one- and
//! two-sided Ehresmann and restriction axiom systems, projections and the
//! natural partial orders `≤_l` and `≤_r`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::order::OrderRel;
use crate::report::{Report, SectionData};
use crate::table::{check_associativity, PartialTable};

/// A partial table with `s ↦ s⁺` and optionally `s ↦ s*` attached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnaryStructure {
    base: PartialTable,
    plus: Vec<usize>,
    star: Option<Vec<usize>>,
}

/// The axiom systems a [`UnaryStructure`] can be checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxiomKind {
    LeftEhresmann,
    RightEhresmann,
    TwoSidedEhresmann,
    LeftRestriction,
    RightRestriction,
    TwoSidedRestriction,
}

impl AxiomKind {
    pub const ALL: [AxiomKind; 6] = [
        AxiomKind::LeftEhresmann,
        AxiomKind::RightEhresmann,
        AxiomKind::TwoSidedEhresmann,
        AxiomKind::LeftRestriction,
        AxiomKind::RightRestriction,
        AxiomKind::TwoSidedRestriction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomKind::LeftEhresmann => "left-ehresmann",
            AxiomKind::RightEhresmann => "right-ehresmann",
            AxiomKind::TwoSidedEhresmann => "two-sided-ehresmann",
            AxiomKind::LeftRestriction => "left-restriction",
            AxiomKind::RightRestriction => "right-restriction",
            AxiomKind::TwoSidedRestriction => "two-sided-restriction",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    fn uses_left(self) -> bool {
        !matches!(self, AxiomKind::RightEhresmann | AxiomKind::RightRestriction)
    }

    fn uses_right(self) -> bool {
        !matches!(self, AxiomKind::LeftEhresmann | AxiomKind::LeftRestriction)
    }

    fn is_restriction(self) -> bool {
        matches!(
            self,
            AxiomKind::LeftRestriction | AxiomKind::RightRestriction | AxiomKind::TwoSidedRestriction
        )
    }

    fn is_two_sided(self) -> bool {
        matches!(self, AxiomKind::TwoSidedEhresmann | AxiomKind::TwoSidedRestriction)
    }
}

impl fmt::Display for AxiomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which natural partial order to derive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn check_map(what: &'static str, map: &[usize], n: usize) -> Result<()> {
    if map.len() != n {
        return Err(Error::SizeMismatch {
            what,
            expected: n,
            found: map.len(),
        });
    }
    match map.iter().enumerate().find(|(_, &v)| v >= n) {
        Some((index, &value)) => Err(Error::OutOfRange {
            what,
            index,
            value,
            bound: n,
        }),
        None => Ok(()),
    }
}

impl UnaryStructure {
    /// Attaches `plus` and `star` to `base`, checking that both are total maps
    /// into the carrier.
    pub fn new(base: PartialTable, plus: Vec<usize>, star: Option<Vec<usize>>) -> Result<Self> {
        let n = base.size();
        check_map("plus map", &plus, n)?;
        if let Some(star) = &star {
            check_map("star map", star, n)?;
        }
        Ok(Self { base, plus, star })
    }

    /// A table with `s⁺ = s* = s`, the structure carried by every local
    /// meet-semilattice.
    pub fn with_identity_maps(base: PartialTable) -> Self {
        let n = base.size();
        let id: Vec<usize> = (0..n).collect();
        Self {
            base,
            plus: id.clone(),
            star: Some(id),
        }
    }

    pub fn base(&self) -> &PartialTable {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.base.size()
    }

    #[inline]
    pub fn mul(&self, s: usize, t: usize) -> Option<usize> {
        self.base.get(s, t)
    }

    #[inline]
    pub fn plus(&self, s: usize) -> usize {
        self.plus[s]
    }

    /// `s*`; panics when no star map is attached.
    #[inline]
    pub fn star(&self, s: usize) -> usize {
        self.star.as_ref().expect("structure has no star map")[s]
    }

    pub fn plus_map(&self) -> &[usize] {
        &self.plus
    }

    pub fn star_map(&self) -> Option<&[usize]> {
        self.star.as_deref()
    }

    pub fn has_star(&self) -> bool {
        self.star.is_some()
    }

    /// `S⁺`, sorted.
    pub fn plus_projections(&self) -> Vec<usize> {
        image(&self.plus)
    }

    /// `S*`, sorted; empty when no star map is attached.
    pub fn star_projections(&self) -> Vec<usize> {
        self.star.as_deref().map(image).unwrap_or_default()
    }

    /// The projection set `U`.
    ///
    /// For two-sided Ehresmann structures `U = S⁺ = S*`; the `+` image is
    /// returned. Callers holding a one-sided structure should use
    /// [`plus_projections`](Self::plus_projections) or
    /// [`star_projections`](Self::star_projections) explicitly.
    pub fn projections(&self) -> Vec<usize> {
        self.plus_projections()
    }

    /// `true` when the structure satisfies the given axiom system. Input
    /// errors count as failure.
    pub fn satisfies(&self, kind: AxiomKind) -> bool {
        check_unary_axioms(self, kind).is_ok_and(|r| r.passed())
    }

    /// Relabels ids: element `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let relabel = |m: &[usize]| {
            let mut out = alloc::vec![0; m.len()];
            for (i, &v) in m.iter().enumerate() {
                out[perm[i]] = perm[v];
            }
            out
        };
        Self {
            base: self.base.permuted(perm),
            plus: relabel(&self.plus),
            star: self.star.as_deref().map(relabel),
        }
    }

    /// `≤_l` or `≤_r` computed straight from the definition, with no checks.
    pub(crate) fn raw_order(&self, side: Side) -> OrderRel {
        let n = self.size();
        match side {
            Side::Left => OrderRel::from_fn(n, |i, j| self.mul(self.plus(i), j) == Some(i)),
            Side::Right => OrderRel::from_fn(n, |i, j| self.mul(j, self.star(i)) == Some(i)),
        }
    }
}

fn image(map: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = map.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Checks `s` against the axiom system `kind`.
///
/// The base table must be a semigroupoid; otherwise a
/// [`Error::Precondition`] carrying the associativity report is returned.
/// The returned report tags violations by axiom name (`le1`…`le4`,
/// `re1`…`re4`, `lr1`…`lr4`, `rr1`…`rr4`, `E`) and carries the derived
/// projection sets.
pub fn check_unary_axioms(s: &UnaryStructure, kind: AxiomKind) -> Result<Report> {
    if kind.uses_right() && !s.has_star() {
        return Err(Error::MissingStar);
    }
    let assoc = check_associativity(s.base());
    if !assoc.passed() {
        return Err(Error::Precondition {
            required: "semigroupoid",
            report: assoc,
        });
    }
    let mut report = Report::new();
    if kind.uses_left() {
        check_left_common(s, &mut report, kind.is_restriction());
        if kind.is_restriction() {
            check_lr4(s, &mut report);
        } else {
            check_le4(s, &mut report);
        }
    }
    if kind.uses_right() {
        check_right_common(s, &mut report, kind.is_restriction());
        if kind.is_restriction() {
            check_rr4(s, &mut report);
        } else {
            check_re4(s, &mut report);
        }
    }
    if kind.is_two_sided() {
        check_e(s, &mut report);
    }

    report.section("projections-plus", SectionData::Set(s.plus_projections()));
    if s.has_star() {
        let star = s.star_projections();
        let coincide = star == s.plus_projections();
        report.section("projections-star", SectionData::Set(star));
        report.section("projections-coincide", SectionData::Flag(coincide));
    }
    Ok(report)
}

/// Axioms 1–3, which the Ehresmann and restriction systems share.
fn check_left_common(s: &UnaryStructure, report: &mut Report, restriction: bool) {
    let n = s.size();
    let [t1, t2, t3] = if restriction {
        ["lr1", "lr2", "lr3"]
    } else {
        ["le1", "le2", "le3"]
    };
    for x in 0..n {
        if s.mul(s.plus(x), x) != Some(x) {
            report.violate(t1, &[x]);
        }
    }
    for x in 0..n {
        for y in 0..n {
            let (xp, yp) = (s.plus(x), s.plus(y));
            let Some(prod) = s.mul(xp, yp) else {
                continue;
            };
            if s.mul(yp, xp) != Some(prod) {
                report.violate(t2, &[x, y]);
            }
            if s.mul(xp, y).map(|v| s.plus(v)) != Some(prod) {
                report.violate(t3, &[x, y]);
            }
        }
    }
}

fn check_right_common(s: &UnaryStructure, report: &mut Report, restriction: bool) {
    let n = s.size();
    let [t1, t2, t3] = if restriction {
        ["rr1", "rr2", "rr3"]
    } else {
        ["re1", "re2", "re3"]
    };
    for x in 0..n {
        if s.mul(x, s.star(x)) != Some(x) {
            report.violate(t1, &[x]);
        }
    }
    for x in 0..n {
        for y in 0..n {
            let (xs, ys) = (s.star(x), s.star(y));
            let Some(prod) = s.mul(xs, ys) else {
                continue;
            };
            if s.mul(ys, xs) != Some(prod) {
                report.violate(t2, &[x, y]);
            }
            if s.mul(x, ys).map(|v| s.star(v)) != Some(prod) {
                report.violate(t3, &[x, y]);
            }
        }
    }
}

/// `st` defined ⇒ `(st)⁺ = (st⁺)⁺`.
fn check_le4(s: &UnaryStructure, report: &mut Report) {
    for (x, y, xy) in s.base().products() {
        let rhs = s.mul(x, s.plus(y)).map(|v| s.plus(v));
        if rhs != Some(s.plus(xy)) {
            report.violate("le4", &[x, y]);
        }
    }
}

/// `st` defined ⇒ `(st)* = (s*t)*`.
fn check_re4(s: &UnaryStructure, report: &mut Report) {
    for (x, y, xy) in s.base().products() {
        let rhs = s.mul(s.star(x), y).map(|v| s.star(v));
        if rhs != Some(s.star(xy)) {
            report.violate("re4", &[x, y]);
        }
    }
}

/// `st` defined ⇒ `st⁺ = (st)⁺s`.
fn check_lr4(s: &UnaryStructure, report: &mut Report) {
    for (x, y, xy) in s.base().products() {
        let lhs = s.mul(x, s.plus(y));
        let rhs = s.mul(s.plus(xy), x);
        if lhs.is_none() || lhs != rhs {
            report.violate("lr4", &[x, y]);
        }
    }
}

/// `st` defined ⇒ `s*t = t(st)*`.
fn check_rr4(s: &UnaryStructure, report: &mut Report) {
    for (x, y, xy) in s.base().products() {
        let lhs = s.mul(s.star(x), y);
        let rhs = s.mul(y, s.star(xy));
        if lhs.is_none() || lhs != rhs {
            report.violate("rr4", &[x, y]);
        }
    }
}

/// `s⁺ = (s⁺)*` and `s* = (s*)⁺`.
fn check_e(s: &UnaryStructure, report: &mut Report) {
    for x in 0..s.size() {
        if s.star(s.plus(x)) != s.plus(x) || s.plus(s.star(x)) != s.star(x) {
            report.violate("E", &[x]);
        }
    }
}

fn require(s: &UnaryStructure, kind: AxiomKind) -> Result<()> {
    let report = check_unary_axioms(s, kind)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Precondition {
            required: kind.name(),
            report,
        })
    }
}

/// Derives `≤_l` (`s ≤_l t ⟺ s⁺t = s`) or `≤_r` (`s ≤_r t ⟺ ts* = s`).
///
/// The structure must satisfy the matching one-sided Ehresmann axioms. The
/// result is re-verified to be a partial order and to agree with the
/// existential characterisation through the projection set; a disagreement
/// is an [`Error::Inconsistent`].
pub fn derive_order(s: &UnaryStructure, side: Side) -> Result<OrderRel> {
    let kind = match side {
        Side::Left => AxiomKind::LeftEhresmann,
        Side::Right => AxiomKind::RightEhresmann,
    };
    require(s, kind)?;
    let order = s.raw_order(side);
    let laws = order.check_partial_order();
    if let Some(v) = laws.violations().first() {
        return Err(Error::Inconsistent(format!(
            "derived {side:?} order fails {} at {:?}",
            v.tag, v.witness
        )));
    }
    let n = s.size();
    let projections = match side {
        Side::Left => s.plus_projections(),
        Side::Right => s.star_projections(),
    };
    for x in 0..n {
        for y in 0..n {
            let existential = projections.iter().any(|&e| match side {
                Side::Left => s.mul(e, y) == Some(x),
                Side::Right => s.mul(y, e) == Some(x),
            });
            if existential != order.leq(x, y) {
                return Err(Error::Inconsistent(format!(
                    "{side:?} order at ({x}, {y}) disagrees with its projection form"
                )));
            }
        }
    }
    Ok(order)
}

/// Checks that `≤_l` and `≤_r` coincide on the projections and, for
/// restriction structures, on the whole carrier.
pub fn check_order_coincidence_on_projections(s: &UnaryStructure) -> Result<Report> {
    require(s, AxiomKind::TwoSidedEhresmann)?;
    let left = derive_order(s, Side::Left)?;
    let right = derive_order(s, Side::Right)?;
    let u = s.projections();
    let mut report = Report::new();
    for &e in &u {
        for &f in &u {
            if left.leq(e, f) != right.leq(e, f) {
                report.violate("lre-order", &[e, f]);
            }
        }
    }
    let restriction = s.satisfies(AxiomKind::TwoSidedRestriction);
    report.section("restriction", SectionData::Flag(restriction));
    if restriction {
        let n = s.size();
        for x in 0..n {
            for y in 0..n {
                if left.leq(x, y) != right.leq(x, y) {
                    report.violate("restriction-order", &[x, y]);
                }
            }
        }
    }
    report.section("orders-equal", SectionData::Flag(left == right));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::relations::{chain, three_element_category, z2};

    #[test]
    fn chain_passes_all_six_kinds() {
        let c = chain(2).unwrap();
        for kind in AxiomKind::ALL {
            let r = check_unary_axioms(&c, kind).unwrap();
            assert!(r.passed(), "{kind}: {:?}", r.violations());
        }
    }

    #[test]
    fn z2_with_constant_identity_is_two_sided_restriction() {
        let z = z2();
        // Oracle: lr1–lr4, rr1–rr4 and (E) spelled out over all 4 pairs with
        // + = * = 1 (id 0 is the identity, id 1 is g).
        let mul = |a: usize, b: usize| (a + b) % 2;
        let p = |_x: usize| 0usize;
        for s in 0..2 {
            assert_eq!(mul(p(s), s), s);
            assert_eq!(mul(s, p(s)), s);
            assert_eq!(p(p(s)), p(s));
            for t in 0..2 {
                assert_eq!(mul(s, p(t)), mul(p(mul(s, t)), s));
                assert_eq!(mul(p(s), t), mul(t, p(mul(s, t))));
                assert_eq!(mul(p(s), p(t)), mul(p(t), p(s)));
                assert_eq!(mul(p(s), p(t)), p(mul(p(s), t)));
            }
        }
        let r = check_unary_axioms(&z, AxiomKind::TwoSidedRestriction).unwrap();
        assert!(r.passed(), "{:?}", r.violations());
        assert_eq!(z.projections(), vec![0]);
    }

    #[test]
    fn missing_star_is_an_input_error() {
        let c = chain(2).unwrap();
        let left_only = UnaryStructure::new(c.base().clone(), c.plus_map().to_vec(), None).unwrap();
        assert!(check_unary_axioms(&left_only, AxiomKind::LeftEhresmann).unwrap().passed());
        let err = check_unary_axioms(&left_only, AxiomKind::TwoSidedEhresmann).unwrap_err();
        assert_eq!(err, Error::MissingStar);
        assert!(err.is_input_error());
    }

    #[test]
    fn non_semigroupoid_base_is_a_precondition_failure() {
        let t = PartialTable::from_fn(2, |x, _| Some((x + 1) % 2)).unwrap();
        let s = UnaryStructure::with_identity_maps(t);
        assert!(matches!(
            check_unary_axioms(&s, AxiomKind::LeftEhresmann),
            Err(Error::Precondition { required: "semigroupoid", .. })
        ));
    }

    #[test]
    fn out_of_range_maps_rejected() {
        let t = PartialTable::new(2);
        assert!(UnaryStructure::new(t.clone(), vec![0, 2], None).is_err());
        assert!(UnaryStructure::new(t.clone(), vec![0], None).is_err());
        assert!(UnaryStructure::new(t, vec![0, 1], Some(vec![3, 0])).is_err());
    }

    #[test]
    fn wrong_plus_is_reported_per_axiom() {
        // Chain e < f with e⁺ = f: le1 still holds (fe = e), but e is then not
        // a projection while f is, and e⁺e = fe = e. Make it fail instead with
        // f⁺ = e: e·f = e ≠ f.
        let c = chain(2).unwrap();
        let s = UnaryStructure::new(c.base().clone(), vec![0, 0], Some(vec![0, 1])).unwrap();
        let r = check_unary_axioms(&s, AxiomKind::LeftEhresmann).unwrap();
        assert!(r.has("le1"));
        assert_eq!(r.violations().iter().find(|v| v.tag == "le1").unwrap().witness, vec![1]);
    }

    #[test]
    fn derive_order_on_chain() {
        let c = chain(2).unwrap();
        let left = derive_order(&c, Side::Left).unwrap();
        assert_eq!(left.pairs(), vec![(0, 0), (0, 1), (1, 1)]);
        assert_eq!(derive_order(&c, Side::Right).unwrap(), left);
    }

    #[test]
    fn category_orders_are_discrete() {
        let c = three_element_category();
        for side in [Side::Left, Side::Right] {
            assert_eq!(derive_order(&c, side).unwrap(), OrderRel::discrete(3));
        }
        assert_eq!(c.projections(), vec![0, 1]);
    }

    #[test]
    fn order_coincidence() {
        let r = check_order_coincidence_on_projections(&z2()).unwrap();
        assert!(r.passed());
        assert_eq!(r.find_section("restriction"), Some(&SectionData::Flag(true)));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in AxiomKind::ALL {
            assert_eq!(AxiomKind::from_name(k.name()), Some(k));
        }
        assert_eq!(AxiomKind::from_name("nope"), None);
    }
}
