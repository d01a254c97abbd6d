use alloc::vec;
use alloc::vec::Vec;

use super::{Class, Instance};
use crate::biordered::{check_lbec, check_locally_inductive, BiorderedCategory, Inductive};
use crate::category::{check_category, check_ordered, FiniteCategory, OrderMode};
use crate::error::Result;
use crate::inverse::check_inverse;
use crate::order::OrderRel;
use crate::table::{triple_decided_ok, PartialTable};
use crate::unary::{AxiomKind, UnaryStructure};

pub(super) fn generate(class: Class, n: usize) -> Result<Vec<Instance>> {
    Ok(match class {
        Class::Semigroupoid => tables(n, false).into_iter().map(Instance::Table).collect(),
        Class::LocalMeetSemilattice => tables(n, true).into_iter().map(Instance::Table).collect(),
        Class::Ehresmann | Class::Restriction => {
            let mut out = Vec::new();
            for t in tables(n, false) {
                for s in ehresmann_structures(&t) {
                    if class == Class::Ehresmann || s.satisfies(AxiomKind::TwoSidedRestriction) {
                        out.push(Instance::Unary(s));
                    }
                }
            }
            out
        }
        Class::Inverse => {
            let mut out = Vec::new();
            for t in tables(n, false) {
                if let Some(s) = check_inverse(&t)?.structure {
                    out.push(Instance::Unary(s));
                }
            }
            out
        }
        Class::Lbec => {
            let orders = partial_orders(n);
            let mut out = Vec::new();
            for c in categories(n) {
                let fits = |mode| -> Result<Vec<&OrderRel>> {
                    let mut v = Vec::new();
                    for o in &orders {
                        if check_ordered(&c, o, mode)?.report.passed() {
                            v.push(o);
                        }
                    }
                    Ok(v)
                };
                let lefts = fits(OrderMode::Corestrictions)?;
                let rights = fits(OrderMode::Restrictions)?;
                for &l in &lefts {
                    for &r in &rights {
                        let b = BiorderedCategory::new(c.clone(), l.clone(), r.clone())?;
                        if check_lbec(&b)?.report.passed() {
                            out.push(Instance::Category(b));
                        }
                    }
                }
            }
            out
        }
        Class::Lic | Class::Lig => {
            let want = if class == Class::Lic { Inductive::Category } else { Inductive::Groupoid };
            let orders = partial_orders(n);
            let mut out = Vec::new();
            for c in categories(n) {
                if want == Inductive::Groupoid && c.groupoid_inverses().is_err() {
                    continue;
                }
                for o in &orders {
                    if check_locally_inductive(&c, o, want)?.passed() {
                        out.push(Instance::Category(BiorderedCategory::single(c.clone(), o.clone())?));
                    }
                }
            }
            out
        }
    })
}

/// Backtracking over cells in row-major order, "undefined" before each
/// value, pruning any branch with a decided associativity failure. With
/// `semilattice`, diagonal cells are forced to `ee = e` and the lower
/// triangle mirrors the upper one.
fn tables(n: usize, semilattice: bool) -> Vec<PartialTable> {
    let mut cells = vec![None; n * n];
    let mut out = Vec::new();
    fill(n, semilattice, 0, &mut cells, &mut out);
    out
}

fn fill(n: usize, semilattice: bool, pos: usize, cells: &mut [Option<Option<usize>>], out: &mut Vec<PartialTable>) {
    if pos == n * n {
        let entries = cells.iter().map(|c| c.expect("all cells decided")).collect();
        out.push(PartialTable::from_entries(n, entries).expect("values in range"));
        return;
    }
    let (i, j) = (pos / n, pos % n);
    let options: Vec<Option<usize>> = if semilattice && i == j {
        vec![Some(i)]
    } else if semilattice && j < i {
        vec![cells[j * n + i].expect("upper triangle decided first")]
    } else {
        core::iter::once(None).chain((0..n).map(Some)).collect()
    };
    for v in options {
        cells[pos] = Some(v);
        if consistent(n, cells) {
            fill(n, semilattice, pos + 1, cells, out);
        }
    }
    cells[pos] = None;
}

fn consistent(n: usize, cells: &[Option<Option<usize>>]) -> bool {
    for s in 0..n {
        for u in 0..n {
            for r in 0..n {
                if triple_decided_ok(n, cells, s, u, r) == Some(false) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every `(+, *)` pair making `t` a two-sided Ehresmann semigroupoid. Each
/// map is built value by value, keeping only values `v` with `vs = s` (for
/// `+`) or `sv = s` (for `*`); complete maps are filtered by their one-sided
/// axioms before pairing.
fn ehresmann_structures(t: &PartialTable) -> Vec<UnaryStructure> {
    let n = t.size();
    let pluses = unary_maps(n, |s, v| t.get(v, s) == Some(s))
        .into_iter()
        .filter(|p| {
            UnaryStructure::new(t.clone(), p.clone(), None)
                .is_ok_and(|u| u.satisfies(AxiomKind::LeftEhresmann))
        })
        .collect::<Vec<_>>();
    let stars = unary_maps(n, |s, v| t.get(s, v) == Some(s))
        .into_iter()
        .filter(|q| {
            UnaryStructure::new(t.clone(), q.clone(), Some(q.clone()))
                .is_ok_and(|u| u.satisfies(AxiomKind::RightEhresmann))
        })
        .collect::<Vec<_>>();
    let mut out = Vec::new();
    for p in &pluses {
        for q in &stars {
            let s = UnaryStructure::new(t.clone(), p.clone(), Some(q.clone())).expect("values in range");
            if s.satisfies(AxiomKind::TwoSidedEhresmann) {
                out.push(s);
            }
        }
    }
    out
}

fn unary_maps(n: usize, allowed: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    fn go(n: usize, allowed: &dyn Fn(usize, usize) -> bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let s = cur.len();
        if s == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if allowed(s, v) {
                cur.push(v);
                go(n, allowed, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &allowed, &mut Vec::new(), &mut out);
    out
}

/// Every partial order on `0..n`: off-diagonal pairs decided in row-major
/// order, "unrelated" first, pruning antisymmetry as soon as both
/// directions are set and transitivity at the leaves.
pub fn partial_orders(n: usize) -> Vec<OrderRel> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut o = OrderRel::discrete(n);
    fn go(pairs: &[(usize, usize)], k: usize, o: &mut OrderRel, out: &mut Vec<OrderRel>) {
        if k == pairs.len() {
            if o.is_partial_order() {
                out.push(o.clone());
            }
            return;
        }
        let (i, j) = pairs[k];
        go(pairs, k + 1, o, out);
        if !o.leq(j, i) {
            o.set(i, j, true);
            go(pairs, k + 1, o, out);
            o.set(i, j, false);
        }
    }
    go(&pairs, 0, &mut o, &mut out);
    out
}

/// Every category on `0..n`: an object set (increasing bitmask), then `D`
/// and `R` on the other arrows, then a value for each composable pair not
/// fixed by the identities. Candidates are kept when they pass
/// [`check_category`].
pub fn categories(n: usize) -> Vec<FiniteCategory> {
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let objects: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if objects.is_empty() && n > 0 {
            continue;
        }
        let arrows: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 0).collect();
        let k = objects.len();
        let ends = arrows.len() * 2;
        let total = k.pow(ends as u32);
        for code in 0..total {
            let mut dom: Vec<usize> = (0..n).collect();
            let mut ran: Vec<usize> = (0..n).collect();
            let mut c = code;
            for &a in &arrows {
                dom[a] = objects[c % k];
                c /= k;
                ran[a] = objects[c % k];
                c /= k;
            }
            compositions(n, &objects, &dom, &ran, &mut out);
        }
    }
    out
}

fn compositions(n: usize, objects: &[usize], dom: &[usize], ran: &[usize], out: &mut Vec<FiniteCategory>) {
    let is_obj = |x: usize| objects.binary_search(&x).is_ok();
    let mut fixed = PartialTable::new(n);
    let mut free: Vec<((usize, usize), Vec<usize>)> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if dom[x] != ran[y] {
                continue;
            }
            if is_obj(y) {
                fixed.set(x, y, Some(x)).expect("in range");
            } else if is_obj(x) {
                fixed.set(x, y, Some(y)).expect("in range");
            } else {
                let cands: Vec<usize> = (0..n).filter(|&z| dom[z] == dom[y] && ran[z] == ran[x]).collect();
                if cands.is_empty() {
                    return;
                }
                free.push(((x, y), cands));
            }
        }
    }
    let mut choice = vec![0usize; free.len()];
    loop {
        let mut t = fixed.clone();
        for (((x, y), cands), &c) in free.iter().zip(&choice) {
            t.set(*x, *y, Some(cands[c])).expect("in range");
        }
        let c = FiniteCategory::new(objects.to_vec(), dom.to_vec(), ran.to_vec(), t).expect("validated ends");
        if check_category(&c).passed() {
            out.push(c);
        }
        let mut k = 0;
        loop {
            if k == free.len() {
                return;
            }
            choice[k] += 1;
            if choice[k] < free[k].1.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_order_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| partial_orders(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219]);
    }

    #[test]
    fn one_element_categories() {
        // Only the identity on a single object.
        assert_eq!(categories(1).len(), 1);
        assert_eq!(categories(0).len(), 1);
    }
}
