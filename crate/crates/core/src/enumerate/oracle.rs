use alloc::vec::Vec;

use super::{check_class, Class, Instance};
use crate::biordered::BiorderedCategory;
use crate::correspondence::find_category_structures;
use crate::error::Result;
use crate::inverse::check_inverse;
use crate::order::OrderRel;
use crate::semilattice::meet_from_order;
use crate::table::{check_associativity, PartialTable};
use crate::unary::UnaryStructure;

/// Counts `class` on `0..n` by filtering the complete raw space: every
/// partial table, every pair of unary maps, every pair of relations. It
/// shares no search code with [`super::enumerate`].
///
/// Local meet-semilattices on four elements are counted through their
/// orders instead (every partial order whose comparability components all
/// have pairwise greatest lower bounds), since the raw table space is too
/// large.
pub fn oracle_count(class: Class, n: usize) -> Result<usize> {
    class.guard(n)?;
    let mut count = 0;
    match class {
        Class::LocalMeetSemilattice if n > 3 => count = lms_via_orders(n),
        Class::Semigroupoid | Class::LocalMeetSemilattice => {
            for t in raw_tables(n) {
                if check_class(class, &Instance::Table(t))? {
                    count += 1;
                }
            }
        }
        Class::Ehresmann | Class::Restriction => {
            let maps = raw_maps(n);
            for t in semigroupoid_tables(n) {
                for p in &maps {
                    for q in &maps {
                        let s = UnaryStructure::new(t.clone(), p.clone(), Some(q.clone()))?;
                        if check_class(class, &Instance::Unary(s))? {
                            count += 1;
                        }
                    }
                }
            }
        }
        Class::Inverse => {
            let maps = raw_maps(n);
            for t in semigroupoid_tables(n) {
                let Some(induced) = check_inverse(&t)?.structure else { continue };
                for p in &maps {
                    for q in &maps {
                        if induced.plus_map() == p.as_slice() && induced.star_map() == Some(q.as_slice()) {
                            count += 1;
                        }
                    }
                }
            }
        }
        Class::Lbec | Class::Lic | Class::Lig => {
            let orders: Vec<OrderRel> = raw_relations(n).filter(OrderRel::is_partial_order).collect();
            for t in semigroupoid_tables(n) {
                for c in find_category_structures(&t, usize::MAX)? {
                    for l in &orders {
                        if class == Class::Lbec {
                            for r in &orders {
                                let b = BiorderedCategory::new(c.clone(), l.clone(), r.clone())?;
                                if check_class(class, &Instance::Category(b))? {
                                    count += 1;
                                }
                            }
                        } else {
                            let b = BiorderedCategory::single(c.clone(), l.clone())?;
                            if check_class(class, &Instance::Category(b))? {
                                count += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(count)
}

fn raw_tables(n: usize) -> impl Iterator<Item = PartialTable> {
    let cells = n * n;
    let base = n + 1;
    let total = base.pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut entries = Vec::with_capacity(cells);
        for _ in 0..cells {
            let v = code % base;
            code /= base;
            entries.push(v.checked_sub(1));
        }
        PartialTable::from_entries(n, entries).expect("values in range")
    })
}

fn semigroupoid_tables(n: usize) -> Vec<PartialTable> {
    raw_tables(n).filter(|t| check_associativity(t).passed()).collect()
}

fn raw_maps(n: usize) -> Vec<Vec<usize>> {
    let total = n.pow(n as u32);
    (0..total)
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let v = code % n;
                    code /= n;
                    v
                })
                .collect()
        })
        .collect()
}

fn raw_relations(n: usize) -> impl Iterator<Item = OrderRel> {
    (0u64..(1u64 << (n * n))).map(move |bits| OrderRel::from_fn(n, |i, j| bits >> (i * n + j) & 1 == 1))
}

pub(crate) fn lms_via_orders(n: usize) -> usize {
    let ids: Vec<usize> = (0..n).collect();
    raw_relations(n)
        .filter(|o| o.is_partial_order() && meet_from_order(o, &ids).1.passed())
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_route_matches_table_route_for_semilattices() {
        for n in 0..=3 {
            let direct = raw_tables(n)
                .filter(crate::semilattice::is_local_meet_semilattice)
                .count();
            assert_eq!(direct, lms_via_orders(n), "n = {n}");
        }
    }

    #[test]
    fn raw_space_sizes() {
        assert_eq!(raw_tables(2).count(), 81);
        assert_eq!(raw_maps(2).len(), 4);
        assert_eq!(raw_maps(0).len(), 1);
        assert_eq!(raw_relations(2).count(), 16);
    }
}
