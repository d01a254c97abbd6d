use esnkit::format::{parse_structure, serialize_structure, Body, StructureFile};
use esnkit_core::enumerate::{enumerate, Class, Instance};
use esnkit_core::relations::{gen_relation_semigroup, three_element_category, z2};
use proptest::prelude::*;

fn file(class: Class, x: Instance) -> StructureFile {
    match x {
        Instance::Table(t) => StructureFile::new(Body::Sgpd(t)),
        Instance::Unary(s) => StructureFile::from_unary(s),
        Instance::Category(c) if matches!(class, Class::Lic | Class::Lig) => {
            StructureFile::new(Body::Ordered(c.cat().clone(), c.leq_l().clone()))
        }
        Instance::Category(c) => StructureFile::new(Body::Biordered(c)),
    }
}

fn assert_roundtrip(f: &StructureFile) {
    let text = serialize_structure(f);
    let back = parse_structure(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
    assert_eq!(&back, f, "{text}");
    assert_eq!(back.labels, f.labels);
    assert_eq!(serialize_structure(&back), text);
}

#[test]
fn every_enumerated_structure_round_trips() {
    for class in Class::ALL {
        for n in 0..=3 {
            for x in enumerate(class, n, true).unwrap() {
                assert_roundtrip(&file(class, x));
            }
        }
    }
}

#[test]
fn examples_round_trip_with_labels() {
    for s in [gen_relation_semigroup(2).unwrap(), z2(), three_element_category()] {
        let f = StructureFile::from_unary(s);
        assert!(f.has_labels());
        assert_roundtrip(&f);
    }
}

#[test]
fn serialization_ignores_directive_order() {
    let a = "kind unary\nsize 2\nmul 1 1 0\nmul 0 0 0\nmul 0 1 1\nmul 1 0 1\nstar 1 0\nplus 1 0\nplus 0 0\nstar 0 0\n";
    let b = "# shuffled\nstar 0 0\nplus 0 0\nmul 1 0 1\nsize 2\nmul 0 1 1\nplus 1 0\nkind unary\nmul 0 0 0\nstar 1 0\nmul 1 1 0\n";
    let (fa, fb) = (parse_structure(a).unwrap(), parse_structure(b).unwrap());
    assert_eq!(fa, fb);
    assert_eq!(serialize_structure(&fa), serialize_structure(&fb));
    assert_eq!(serialize_structure(&fa), "kind unary\nsize 2\nmul 0 0 0\nmul 0 1 1\nmul 1 0 1\nmul 1 1 0\nplus 0 0\nplus 1 0\nstar 0 0\nstar 1 0\n");
}

proptest! {
    #[test]
    fn arbitrary_tables_round_trip(n in 0..5usize, seed in prop::collection::vec(0..6usize, 25)) {
        let entries: Vec<Option<usize>> = (0..n * n).map(|k| {
            let v = seed[k];
            (v < n).then_some(v)
        }).collect();
        let t = esnkit_core::PartialTable::from_entries(n, entries).unwrap();
        let f = StructureFile::new(Body::Sgpd(t));
        let back = parse_structure(&serialize_structure(&f)).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn garbage_lines_are_rejected_with_their_line(line in "[a-z]{1,8}( [0-9]{1,2}){0,3}") {
        let text = format!("kind sgpd\nsize 2\n{line}\n");
        match parse_structure(&text) {
            Ok(_) => prop_assert!(line.starts_with("mul ") || line.starts_with("label ")),
            Err(e) => prop_assert!(e.line.is_none() || e.line == Some(3) || e.line == Some(1)),
        }
    }
}
