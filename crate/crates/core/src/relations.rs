//! Generators for the standard small examples: the relation semigroup on a
//! finite set, chains, antichains, the two-element group and the smallest
//! non-trivial category.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::table::PartialTable;
use crate::unary::UnaryStructure;

/// Largest base set accepted by [`gen_relation_semigroup`].
pub const MAX_RELATION_BASE: usize = 2;

/// The semigroup of binary relations on `{0, …, x_size − 1}`.
///
/// A relation `R` has id `Σ 2^(i·x_size + j)` over its pairs `(i, j)`.
/// The product is `R∘S = {(x, y) : (x, z) ∈ R, (z, y) ∈ S for some z}`,
/// `R⁺` is the diagonal on the domain of `R` and `R*` the diagonal on its
/// range.
pub fn gen_relation_semigroup(x_size: usize) -> Result<UnaryStructure> {
    if x_size > MAX_RELATION_BASE {
        return Err(Error::SizeGuard {
            what: "relation semigroup base set",
            requested: x_size,
            limit: MAX_RELATION_BASE,
        });
    }
    let x = x_size;
    let n = 1usize << (x * x);
    let has = |r: usize, i: usize, j: usize| r >> (i * x + j) & 1 == 1;
    let compose = |r: usize, s: usize| {
        let mut out = 0;
        for i in 0..x {
            for j in 0..x {
                if (0..x).any(|z| has(r, i, z) && has(s, z, j)) {
                    out |= 1 << (i * x + j);
                }
            }
        }
        out
    };
    let diag = |keep: &dyn Fn(usize) -> bool| (0..x).filter(|&i| keep(i)).fold(0, |acc, i| acc | 1 << (i * x + i));
    let plus: Vec<usize> = (0..n)
        .map(|r| diag(&|i| (0..x).any(|j| has(r, i, j))))
        .collect();
    let star: Vec<usize> = (0..n)
        .map(|r| diag(&|j| (0..x).any(|i| has(r, i, j))))
        .collect();
    let labels = (0..n)
        .map(|r| {
            let pairs: Vec<String> = (0..x * x)
                .filter(|&b| r >> b & 1 == 1)
                .map(|b| format!("({},{})", b / x, b % x))
                .collect();
            format!("{{{}}}", pairs.join(","))
        })
        .collect();
    let table = PartialTable::from_fn(n, |r, s| Some(compose(r, s)))?.with_labels(labels)?;
    UnaryStructure::new(table, plus, Some(star))
}

/// The chain `0 < 1 < … < n−1` as a meet-semilattice with `s⁺ = s* = s`.
pub fn chain(n: usize) -> Result<UnaryStructure> {
    let t = PartialTable::from_fn(n, |i, j| Some(i.min(j)))?;
    Ok(UnaryStructure::with_identity_maps(t))
}

/// `n` pairwise unrelated idempotents; only `ee = e` is defined.
pub fn antichain(n: usize) -> Result<UnaryStructure> {
    let t = PartialTable::from_fn(n, |i, j| (i == j).then_some(i))?;
    Ok(UnaryStructure::with_identity_maps(t))
}

/// The group `{1, g}` with `s⁺ = s* = 1`; id 0 is the identity.
pub fn z2() -> UnaryStructure {
    let t = PartialTable::from_fn(2, |i, j| Some((i + j) % 2))
        .and_then(|t| t.with_labels(vec!["1".into(), "g".into()]))
        .expect("static table");
    UnaryStructure::new(t, vec![0, 0], Some(vec![0, 0])).expect("static maps")
}

/// The category `e ←x− f` as an Ehresmann semigroupoid: ids `e = 0`,
/// `f = 1`, `x = 2`, with `x⁺ = e` and `x* = f`.
pub fn three_element_category() -> UnaryStructure {
    let t = PartialTable::from_entries(
        3,
        vec![
            Some(0), None, Some(2), //
            None, Some(1), None, //
            None, Some(2), None,
        ],
    )
    .and_then(|t| t.with_labels(vec!["e".into(), "f".into(), "x".into()]))
    .expect("static table");
    UnaryStructure::new(t, vec![0, 1, 0], Some(vec![0, 1, 1])).expect("static maps")
}

/// Disjoint union: ids of `b` are shifted past those of `a`; no products
/// cross between the two parts.
pub fn disjoint_union(a: &UnaryStructure, b: &UnaryStructure) -> Result<UnaryStructure> {
    let (na, nb) = (a.size(), b.size());
    let t = PartialTable::from_fn(na + nb, |i, j| match (i < na, j < na) {
        (true, true) => a.mul(i, j),
        (false, false) => b.mul(i - na, j - na).map(|k| k + na),
        _ => None,
    })?;
    let join = |f: &dyn Fn(usize) -> usize, g: &dyn Fn(usize) -> usize| -> Vec<usize> {
        (0..na).map(f).chain((0..nb).map(|i| g(i) + na)).collect()
    };
    let plus = join(&|i| a.plus(i), &|i| b.plus(i));
    let star = match (a.has_star(), b.has_star()) {
        (true, true) => Some(join(&|i| a.star(i), &|i| b.star(i))),
        _ => None,
    };
    UnaryStructure::new(t, plus, star)
}
