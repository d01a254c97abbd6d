//! Finite binary relations stored as boolean matrices.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::report::Report;

/// A relation on `0..size`; `leq(i, j)` is true when `i ≤ j`.
///
/// The type itself does not enforce the partial-order laws: parsers and
/// derivations build a relation first and then call [`OrderRel::check_partial_order`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderRel {
    size: usize,
    mat: Vec<bool>,
}

impl OrderRel {
    /// The empty relation.
    pub fn empty(size: usize) -> Self {
        Self {
            size,
            mat: vec![false; size * size],
        }
    }

    /// The discrete order `i ≤ j ⟺ i = j`.
    pub fn discrete(size: usize) -> Self {
        let mut o = Self::empty(size);
        for i in 0..size {
            o.mat[i * size + i] = true;
        }
        o
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut o = Self::empty(size);
        for i in 0..size {
            for j in 0..size {
                o.mat[i * size + j] = f(i, j);
            }
        }
        o
    }

    /// Builds a relation from pairs and closes it reflexively. No other
    /// closure is applied.
    pub fn from_pairs_reflexive(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut o = Self::discrete(size);
        for (index, &(i, j)) in pairs.iter().enumerate() {
            for v in [i, j] {
                if v >= size {
                    return Err(Error::OutOfRange {
                        what: "order pair",
                        index,
                        value: v,
                        bound: size,
                    });
                }
            }
            o.mat[i * size + j] = true;
        }
        Ok(o)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.mat[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.mat[i * self.size + j] = value;
    }

    /// All related pairs in row-major order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.size;
        (0..n * n)
            .filter(|&c| self.mat[c])
            .map(|c| (c / n, c % n))
            .collect()
    }

    /// Related pairs with `i ≠ j`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs().into_iter().filter(|&(i, j)| i != j).collect()
    }

    /// Reports every instance of a failing reflexivity, antisymmetry or
    /// transitivity law.
    pub fn check_partial_order(&self) -> Report {
        let n = self.size;
        let mut report = Report::new();
        for i in 0..n {
            if !self.leq(i, i) {
                report.violate("order-reflexive", &[i]);
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if self.leq(i, j) && self.leq(j, i) {
                    report.violate("order-antisymmetric", &[i, j]);
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !self.leq(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.leq(j, k) && !self.leq(i, k) {
                        report.violate("order-transitive", &[i, j, k]);
                    }
                }
            }
        }
        report
    }

    pub fn is_partial_order(&self) -> bool {
        self.check_partial_order().passed()
    }

    /// Relational composition: `(x, y) ∈ self ∘ other` iff some `z` has
    /// `(x, z) ∈ self` and `(z, y) ∈ other`.
    pub fn compose(&self, other: &OrderRel) -> Result<OrderRel> {
        if self.size != other.size {
            return Err(Error::SizeMismatch {
                what: "relation composition",
                expected: self.size,
                found: other.size,
            });
        }
        let n = self.size;
        Ok(Self::from_fn(n, |x, y| (0..n).any(|z| self.leq(x, z) && other.leq(z, y))))
    }

    /// `true` when the two relations agree on every pair drawn from `ids`.
    pub fn agrees_on(&self, other: &OrderRel, ids: &[usize]) -> bool {
        ids.iter()
            .all(|&i| ids.iter().all(|&j| self.leq(i, j) == other.leq(i, j)))
    }

    /// The relation restricted to `ids`, re-indexed by position in `ids`.
    pub fn restrict(&self, ids: &[usize]) -> OrderRel {
        Self::from_fn(ids.len(), |a, b| self.leq(ids[a], ids[b]))
    }

    /// Relabels ids: element `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> OrderRel {
        let n = self.size;
        let mut o = Self::empty(n);
        for i in 0..n {
            for j in 0..n {
                o.mat[perm[i] * n + perm[j]] = self.leq(i, j);
            }
        }
        o
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn discrete_is_partial_order() {
        for n in 0..5 {
            assert!(OrderRel::discrete(n).is_partial_order());
        }
    }

    #[test]
    fn reflexive_closure_only() {
        let o = OrderRel::from_pairs_reflexive(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(o.leq(2, 2) && o.leq(0, 1));
        assert!(!o.leq(0, 2), "transitivity must not be closed");
        let report = o.check_partial_order();
        assert_eq!(report.count("order-transitive"), 1);
        assert_eq!(report.violations()[0].witness, vec![0, 1, 2]);
    }

    #[test]
    fn antisymmetry_failure() {
        let o = OrderRel::from_pairs_reflexive(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(o.check_partial_order().has("order-antisymmetric"));
    }

    #[test]
    fn out_of_range_pair() {
        assert!(OrderRel::from_pairs_reflexive(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn composition_matches_relation_product() {
        let r = OrderRel::from_fn(3, |i, j| i == 0 && j == 1);
        let s = OrderRel::from_fn(3, |i, j| i == 1 && j == 2);
        let rs = r.compose(&s).unwrap();
        assert_eq!(rs.pairs(), vec![(0, 2)]);
        assert!(s.compose(&r).unwrap().pairs().is_empty());
    }

    fn arb_relation(n: usize) -> impl Strategy<Value = OrderRel> {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |m| OrderRel { size: n, mat: m })
    }

    proptest! {
        #[test]
        fn composition_is_associative(a in arb_relation(4), b in arb_relation(4), c in arb_relation(4)) {
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn permutation_preserves_order_laws(a in arb_relation(4), seed in 0usize..24) {
            let mut perm: Vec<usize> = (0..4).collect();
            let mut k = seed;
            for i in (1..4).rev() {
                perm.swap(i, k % (i + 1));
                k /= i + 1;
            }
            prop_assert_eq!(a.is_partial_order(), a.permuted(&perm).is_partial_order());
        }
    }
}
