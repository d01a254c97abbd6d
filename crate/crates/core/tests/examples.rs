use std::collections::BTreeSet;

use esnkit_core::biordered::{check_lbec, check_locally_inductive, derive_meet, Inductive};
use esnkit_core::correspondence::{
    build_category, build_lbec, build_semigroupoid, classify, extend_category_structure, roundtrip_verify, RoundTrip,
};
use esnkit_core::relations::{chain, gen_relation_semigroup, z2};
use esnkit_core::table::check_associativity;
use esnkit_core::unary::{check_order_coincidence_on_projections, check_unary_axioms, derive_order, Side};
use esnkit_core::{AxiomKind, PartialTable, SectionData};

type Rel = BTreeSet<(usize, usize)>;

/// Relations on {0, 1} indexed by the bitmask of their pairs, bit `2i + j`.
fn rel(id: usize) -> Rel {
    (0..2)
        .flat_map(|i| (0..2).map(move |j| (i, j)))
        .filter(|&(i, j)| id >> (2 * i + j) & 1 == 1)
        .collect()
}

fn rel_id(r: &Rel) -> usize {
    r.iter().map(|&(i, j)| 1 << (2 * i + j)).sum()
}

fn then(r: &Rel, s: &Rel) -> Rel {
    let mut out = Rel::new();
    for &(x, y) in r {
        for &(y2, z) in s {
            if y == y2 {
                out.insert((x, z));
            }
        }
    }
    out
}

fn dom_diag(r: &Rel) -> Rel {
    r.iter().map(|&(x, _)| (x, x)).collect()
}

fn ran_diag(r: &Rel) -> Rel {
    r.iter().map(|&(_, y)| (y, y)).collect()
}

#[test]
fn relation_semigroup_matches_set_composition() {
    let b = gen_relation_semigroup(2).unwrap();
    assert_eq!(b.size(), 16);
    for r in 0..16 {
        for s in 0..16 {
            assert_eq!(b.mul(r, s), Some(rel_id(&then(&rel(r), &rel(s)))));
        }
        assert_eq!(b.plus(r), rel_id(&dom_diag(&rel(r))));
        assert_eq!(b.star(r), rel_id(&ran_diag(&rel(r))));
        assert_eq!(then(&dom_diag(&rel(r)), &rel(r)), rel(r));
    }
    assert!(check_associativity(b.base()).passed());
    assert!(check_unary_axioms(&b, AxiomKind::TwoSidedEhresmann).unwrap().passed());
}

#[test]
fn relation_projections_are_diagonal_subsets() {
    let b = gen_relation_semigroup(2).unwrap();
    let diagonal: Vec<usize> = (0..16).filter(|&r| rel(r).iter().all(|&(x, y)| x == y)).collect();
    assert_eq!(b.projections(), diagonal);
    assert_eq!(diagonal, vec![0, 1, 8, 9]);
}

#[test]
fn relation_left_order_by_brute_force() {
    let b = gen_relation_semigroup(2).unwrap();
    let left = derive_order(&b, Side::Left).unwrap();
    let right = derive_order(&b, Side::Right).unwrap();
    for r in 0..16 {
        for s in 0..16 {
            let (rr, ss) = (rel(r), rel(s));
            assert_eq!(left.leq(r, s), then(&dom_diag(&rr), &ss) == rr, "{r} {s}");
            assert_eq!(right.leq(r, s), then(&ss, &ran_diag(&rr)) == rr, "{r} {s}");
        }
    }
    // The orders differ off the projections: {(0,0),(0,1)} restricted on
    // the right to {(0,0)} is not a left restriction of it.
    assert!(right.leq(1, 3) && !left.leq(1, 3));
    assert!(left.agrees_on(&right, &[0, 1, 8, 9]));
}

#[test]
fn relation_orders_coincide_on_projections() {
    let b = gen_relation_semigroup(2).unwrap();
    let r = check_order_coincidence_on_projections(&b).unwrap();
    assert!(!r.has("lre-order"));
    assert_eq!(r.find_section("orders-equal"), Some(&SectionData::Flag(false)));
}

#[test]
fn relation_semigroup_is_not_restriction() {
    let b = gen_relation_semigroup(2).unwrap();
    let r = check_unary_axioms(&b, AxiomKind::TwoSidedRestriction).unwrap();
    assert!(r.has("lr4"));
    let mut independent = 0;
    for s in 0..16 {
        for t in 0..16 {
            let (ss, tt) = (rel(s), rel(t));
            if then(&ss, &dom_diag(&tt)) != then(&dom_diag(&then(&ss, &tt)), &ss) {
                independent += 1;
            }
        }
    }
    assert_eq!(r.count("lr4"), independent);
    let f = classify(&b).unwrap();
    assert!(f.is_ehresmann && f.is_semigroup && !f.is_restriction && !f.is_inverse);
}

#[test]
fn relation_category() {
    let b = gen_relation_semigroup(2).unwrap();
    let c = build_category(&b).unwrap();
    assert_eq!(c.size(), 16);
    assert_eq!(c.cat().objects(), &[0, 1, 8, 9]);
    let chk = check_lbec(&c).unwrap();
    assert!(chk.report.passed());
    let meet = derive_meet(&c).unwrap();
    for &e in &[0, 1, 8, 9] {
        for &f in &[0, 1, 8, 9] {
            let both: Rel = rel(e).intersection(&rel(f)).copied().collect();
            assert_eq!(meet.meet(e, f), Some(rel_id(&both)));
        }
    }
    let l = chk.lbec.unwrap();
    assert_eq!(&l.to_semigroupoid(), &b);
    assert!(roundtrip_verify(RoundTrip::Semigroupoid(&b)).unwrap().passed());
    assert!(roundtrip_verify(RoundTrip::Category(&c)).unwrap().passed());
}

#[test]
fn relation_monoid_identity() {
    let b = gen_relation_semigroup(2).unwrap();
    let c = extend_category_structure(&b).unwrap().unwrap();
    assert_eq!(c.objects(), &[9]);
    for r in 0..16 {
        assert_eq!(b.mul(9, r), Some(r));
        assert_eq!(b.mul(r, 9), Some(r));
    }
}

#[test]
fn group_of_order_two_is_restriction() {
    let g = z2();
    assert!(check_unary_axioms(&g, AxiomKind::TwoSidedRestriction).unwrap().passed());
    let c = build_category(&g).unwrap();
    assert!(check_locally_inductive(c.cat(), c.leq_l(), Inductive::Groupoid).unwrap().passed());
    let l = build_lbec(&g).unwrap();
    assert_eq!(l.pseudo_product(1, 1), Some(0));
    assert_eq!(l.restrict(1, 0), Some(1));
}

#[test]
fn category_orders_are_discrete() {
    let s = esnkit_core::relations::three_element_category();
    for side in [Side::Left, Side::Right] {
        let o = derive_order(&s, side).unwrap();
        assert_eq!(o.strict_pairs(), vec![]);
    }
}

#[test]
fn chain_restrictions_and_structure() {
    let s = chain(2).unwrap();
    let l = build_lbec(&s).unwrap();
    // f|e = e and e|f = e: the only arrow below f with end e is e.
    assert_eq!(l.restrict(1, 0), Some(0));
    assert_eq!(l.corestrict(0, 1), Some(0));
    assert_eq!(&build_semigroupoid(l.bic()).unwrap(), &s);
    let c = extend_category_structure(&s).unwrap().unwrap();
    assert_eq!(c.objects(), &[1]);
}

#[test]
fn pseudo_product_units_and_objects() {
    for s in [chain(3).unwrap(), z2(), gen_relation_semigroup(2).unwrap()] {
        let l = build_lbec(&s).unwrap();
        let c = l.cat();
        for x in 0..c.size() {
            assert_eq!(l.pseudo_product(x, c.dom(x)), Some(x));
            assert_eq!(l.pseudo_product(c.ran(x), x), Some(x));
        }
        for &e in c.objects() {
            for &f in c.objects() {
                assert_eq!(l.pseudo_product(e, f), l.meet(e, f));
                assert_eq!(l.pseudo_product(f, e), l.meet(e, f));
            }
        }
    }
}

#[test]
fn half_defined_idempotents_fail_once() {
    // e = 0, f = 1: ee = e, ff = f, ef = e and fe undefined.
    let t = PartialTable::from_entries(2, vec![Some(0), Some(0), None, Some(1)]).unwrap();
    let r = check_associativity(&t);
    assert_eq!(r.violations().len(), 1);
    assert_eq!(r.violations()[0].tag, "s2");
    assert_eq!(r.violations()[0].witness, vec![0, 1, 0]);
}
