use esnkit_core::enumerate::{enumerate, Class};
use esnkit_core::morphism::{
    all_maps, check_cat_functor, check_order_preserving, check_projections_preserved, check_sgpd_map,
    preserves_composition, CarrierMap, CatKind, EhresmannSgpd, SgpdKind,
};
use esnkit_core::relations::{chain, gen_relation_semigroup, three_element_category};
use esnkit_core::{Error, UnaryStructure};

fn structures(class: Class, max: usize, dedup: bool) -> Vec<EhresmannSgpd> {
    (0..=max)
        .flat_map(|n| enumerate(class, n, dedup).unwrap())
        .map(|x| EhresmannSgpd::new(x.as_unary().unwrap().clone()).unwrap())
        .collect()
}

/// Small labeled structures plus one representative per class at size 3.
fn sample(class: Class) -> Vec<EhresmannSgpd> {
    let mut v = structures(class, 2, false);
    v.extend(
        enumerate(class, 3, true)
            .unwrap()
            .into_iter()
            .map(|x| EhresmannSgpd::new(x.as_unary().unwrap().clone()).unwrap()),
    );
    v
}

/// `s ≤ t` iff `s = et` for some projection `e`.
fn below(t: &UnaryStructure, a: usize, b: usize) -> bool {
    t.projections().into_iter().any(|e| t.mul(e, b) == Some(a))
}

fn naive(kind: SgpdKind, s: &UnaryStructure, t: &UnaryStructure, f: &[usize]) -> bool {
    let n = s.size();
    let products = (0..n).flat_map(|a| (0..n).filter_map(move |b| s.mul(a, b).map(|ab| (a, b, ab))));
    let product_ok = products.into_iter().all(|(a, b, ab)| {
        let (fa, fb, fab) = (f[a], f[b], f[ab]);
        match kind {
            SgpdKind::TwoOneOne => t.mul(fa, fb) == Some(fab),
            SgpdKind::Vee | SgpdKind::VeeInequality => t.mul(fa, fb).is_some_and(|p| below(t, fab, p)),
            SgpdKind::Wedge => {
                let p = t.mul(fa, fb);
                p.is_some() && p == t.mul(t.plus(fa), fab) && p == t.mul(fab, t.star(fb))
            }
        }
    });
    let unary_ok = (0..n).all(|a| {
        let (p, q) = (f[s.plus(a)], t.plus(f[a]));
        let (x, y) = (f[s.star(a)], t.star(f[a]));
        match kind {
            SgpdKind::TwoOneOne | SgpdKind::Vee => p == q && x == y,
            SgpdKind::VeeInequality => below(t, p, q) && below(t, x, y),
            SgpdKind::Wedge => below(t, q, p) && below(t, y, x),
        }
    });
    product_ok && unary_ok
}

#[test]
fn semigroupoid_kinds_match_naive_definitions() {
    let all = sample(Class::Restriction);
    let mut maps = 0;
    for s in &all {
        for t in &all {
            for send in all_maps(s.size(), t.size()) {
                let m = CarrierMap::new(s, t, send.clone()).unwrap();
                for kind in SgpdKind::ALL {
                    let got = check_sgpd_map(&m, kind).unwrap().passed();
                    assert_eq!(got, naive(kind, s.structure(), t.structure(), &send), "{kind:?} {send:?}");
                }
                maps += 1;
            }
        }
    }
    assert!(maps > 1000);
}

#[test]
fn two_one_one_matches_naive_on_ehresmann() {
    let all = sample(Class::Ehresmann);
    for s in &all {
        for t in &all {
            for send in all_maps(s.size(), t.size()) {
                let m = CarrierMap::new(s, t, send.clone()).unwrap();
                let got = check_sgpd_map(&m, SgpdKind::TwoOneOne).unwrap().passed();
                assert_eq!(got, naive(SgpdKind::TwoOneOne, s.structure(), t.structure(), &send));
            }
        }
    }
}

#[test]
fn kind_implications_and_order_properties() {
    let all = sample(Class::Restriction);
    let (mut vee_not_m1, mut ip5_only) = (None, None);
    for (i, s) in all.iter().enumerate() {
        for (j, t) in all.iter().enumerate() {
            for send in all_maps(s.size(), t.size()) {
                let m = CarrierMap::new(s, t, send.clone()).unwrap();
                let v = |k| check_sgpd_map(&m, k).unwrap();
                let (two, vee, veq, wedge) =
                    (v(SgpdKind::TwoOneOne), v(SgpdKind::Vee), v(SgpdKind::VeeInequality), v(SgpdKind::Wedge));
                assert_eq!(vee.passed(), veq.passed(), "equality and inequality forms differ at {send:?}");
                if two.passed() {
                    assert!(vee.passed() && wedge.passed());
                }
                if vee.passed() {
                    assert!(check_order_preserving(&m).passed());
                    if two.has("m1") && vee_not_m1.is_none() {
                        vee_not_m1 = Some((i, j, send.clone()));
                    }
                }
                if wedge.passed() {
                    assert!(check_projections_preserved(&m).passed());
                    assert!(check_order_preserving(&m).passed());
                }
                let cm = CarrierMap::new(s.category(), t.category(), send.clone()).unwrap();
                let c = |k| check_cat_functor(&cm, k).unwrap();
                let (ind, ord, pre) = (c(CatKind::Inductive), c(CatKind::Ordered), c(CatKind::Prefunctor));
                if ind.passed() {
                    assert!(ord.passed() && pre.passed());
                }
                if ip5_only.is_none() && pre.failed_tags() == vec!["ip5"] {
                    ip5_only = Some((i, j, send.clone()));
                }
            }
        }
    }
    let (i, j, send) = vee_not_m1.expect("a ∨-premorphism that is not a (2,1,1)-morphism");
    let m = CarrierMap::new(&all[i], &all[j], send).unwrap();
    assert!(check_sgpd_map(&m, SgpdKind::Vee).unwrap().passed());
    let r = check_sgpd_map(&m, SgpdKind::TwoOneOne).unwrap();
    assert_eq!(r.failed_tags(), vec!["m1"]);
    let (i, j, send) = ip5_only.expect("a map failing only ip5");
    let cm = CarrierMap::new(all[i].category(), all[j].category(), send).unwrap();
    let r = check_cat_functor(&cm, CatKind::Prefunctor).unwrap();
    assert!(!r.violations().is_empty() && r.violations().iter().all(|v| v.tag == "ip5"));
}

#[test]
fn composition_preserving_maps_on_inverse_are_morphisms() {
    let all = sample(Class::Inverse);
    let mut seen = 0;
    for s in &all {
        for t in &all {
            for send in all_maps(s.size(), t.size()) {
                let m = CarrierMap::new(s, t, send).unwrap();
                if preserves_composition(&m) {
                    seen += 1;
                    assert!(check_sgpd_map(&m, SgpdKind::TwoOneOne).unwrap().passed());
                }
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn vee_on_non_restriction_is_an_input_error() {
    let b = EhresmannSgpd::new(gen_relation_semigroup(1).unwrap()).unwrap();
    assert!(b.is_restriction());
    let r = EhresmannSgpd::new(gen_relation_semigroup(2).unwrap()).unwrap();
    assert!(!r.is_restriction());
    let id = CarrierMap::identity(&r);
    for kind in [SgpdKind::Vee, SgpdKind::VeeInequality, SgpdKind::Wedge] {
        let e = check_sgpd_map(&id, kind).unwrap_err();
        assert!(matches!(e, Error::ClassMismatch(_)) && e.is_input_error());
    }
    assert!(check_sgpd_map(&id, SgpdKind::TwoOneOne).unwrap().passed());
    let cid = CarrierMap::identity(r.category());
    assert!(check_cat_functor(&cid, CatKind::Inductive).unwrap().passed());
    assert!(matches!(check_cat_functor(&cid, CatKind::Ordered), Err(Error::ClassMismatch(_))));
}

#[test]
fn functor_failures_carry_witnesses() {
    let a = EhresmannSgpd::new(three_element_category()).unwrap();
    let c = EhresmannSgpd::new(chain(2).unwrap()).unwrap();
    // Arrow x goes to the bottom of the chain, its ends to the top.
    let m = CarrierMap::new(a.category(), c.category(), vec![1, 1, 0]).unwrap();
    let r = check_cat_functor(&m, CatKind::Inductive).unwrap();
    assert!(r.has("if1"));
    assert!(r.violations().iter().any(|v| v.tag == "if1" && v.witness == vec![2]));
}
