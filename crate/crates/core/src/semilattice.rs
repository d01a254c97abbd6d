//! Local meet-semilattices: idempotent semigroupoids that are commutative
//! wherever defined. They are exactly the disjoint unions of meet-semilattices
//! and are determined by their partial order.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::order::OrderRel;
use crate::report::{Report, SectionData};
use crate::table::{check_associativity, PartialTable};

/// The classes of `s ω t ⟺ st is defined`, each sorted, ordered by least
/// element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    blocks: Vec<Vec<usize>>,
}

impl ComponentPartition {
    /// Connected components of the graph joining `i` and `j` whenever
    /// `related(i, j)` holds.
    pub fn components(n: usize, mut related: impl FnMut(usize, usize) -> bool) -> Self {
        let mut block_of = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if block_of[start] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut block = vec![start];
            block_of[start] = id;
            let mut next = 0;
            while next < block.len() {
                let i = block[next];
                next += 1;
                for j in 0..n {
                    if block_of[j] == usize::MAX && (related(i, j) || related(j, i)) {
                        block_of[j] = id;
                        block.push(j);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        Self { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Rebuilds a table on `n` elements from each block's own table
    /// (indexed by position within the block).
    pub fn reassemble(&self, n: usize, block_tables: &[PartialTable]) -> Result<PartialTable> {
        if block_tables.len() != self.blocks.len() {
            return Err(Error::SizeMismatch {
                what: "block tables",
                expected: self.blocks.len(),
                found: block_tables.len(),
            });
        }
        let mut t = PartialTable::new(n);
        for (block, bt) in self.blocks.iter().zip(block_tables) {
            for (a, b, c) in bt.products() {
                t.set(block[a], block[b], Some(block[c]))?;
            }
        }
        Ok(t)
    }
}

/// The natural order of a local meet-semilattice: `e ≤ f ⟺ ef = e`.
pub fn natural_order(t: &PartialTable) -> OrderRel {
    OrderRel::from_fn(t.size(), |e, f| t.get(e, f) == Some(e))
}

/// Checks idempotency, commutativity and the block decomposition.
///
/// Tags: `idempotent` `[e]`, `commutative` `[s, t]` (`st` defined and `ts`
/// undefined or different). Sections: `blocks` (one set per block, as text),
/// `block-count`, `meet-semilattice` (at most one block) and
/// `locally-complete` (every block has a greatest element).
pub fn check_local_meet_semilattice(t: &PartialTable) -> Result<(Report, ComponentPartition)> {
    let assoc = check_associativity(t);
    if !assoc.passed() {
        return Err(Error::Precondition {
            required: "semigroupoid",
            report: assoc,
        });
    }
    let n = t.size();
    let mut report = Report::new();
    for e in 0..n {
        if t.get(e, e) != Some(e) {
            report.violate("idempotent", &[e]);
        }
    }
    for (s, u, p) in t.products() {
        if t.get(u, s) != Some(p) {
            report.violate("commutative", &[s, u]);
        }
    }
    let partition = ComponentPartition::components(n, |i, j| t.defined(i, j));
    if report.passed() {
        verify_blocks(t, &partition)?;
    }
    let tops = partition
        .blocks()
        .iter()
        .all(|b| block_top(t, b).is_some());
    report.section(
        "blocks",
        SectionData::Text(format!("{:?}", partition.blocks())),
    );
    report.section("block-count", SectionData::Set(vec![partition.len()]));
    report.section("meet-semilattice", SectionData::Flag(partition.len() <= 1));
    report.section("locally-complete", SectionData::Flag(tops));
    Ok((report, partition))
}

/// On a structure passing the axioms: `ω` must be an equivalence, each
/// block a total subtable, and the blocks must reassemble into `t`.
fn verify_blocks(t: &PartialTable, partition: &ComponentPartition) -> Result<()> {
    let mut tables = Vec::with_capacity(partition.len());
    for block in partition.blocks() {
        for &i in block {
            for &j in block {
                if !t.defined(i, j) {
                    return Err(Error::Inconsistent(format!(
                        "definedness is not an equivalence: {i} and {j} share a block but {i}{j} is undefined"
                    )));
                }
            }
        }
        tables.push(t.restrict(block)?);
    }
    let rebuilt = partition.reassemble(t.size(), &tables)?;
    if rebuilt != *t {
        return Err(Error::Inconsistent("blocks do not reassemble into the table".into()));
    }
    Ok(())
}

/// The element of `block` above every other one, if any.
pub fn block_top(t: &PartialTable, block: &[usize]) -> Option<usize> {
    block
        .iter()
        .copied()
        .find(|&f| block.iter().all(|&e| t.get(e, f) == Some(e)))
}

/// `true` when `t` passes [`check_local_meet_semilattice`].
pub fn is_local_meet_semilattice(t: &PartialTable) -> bool {
    check_local_meet_semilattice(t).is_ok_and(|(r, _)| r.passed())
}

/// The meet determined by `order` on the elements `ids`.
///
/// `a ∧ b` is defined when `a` and `b` lie in one comparability component
/// and is then their greatest lower bound. The table is indexed by position
/// in `ids`. Every pair in a component without a greatest lower bound is left
/// undefined and reported as `meet-missing` with a witness in original ids.
pub fn meet_from_order(order: &OrderRel, ids: &[usize]) -> (PartialTable, Report) {
    let m = ids.len();
    let leq = |a: usize, b: usize| order.leq(ids[a], ids[b]);
    let partition = ComponentPartition::components(m, leq);
    let mut block_of = vec![0; m];
    for (k, block) in partition.blocks().iter().enumerate() {
        for &a in block {
            block_of[a] = k;
        }
    }
    let mut report = Report::new();
    let mut entries = vec![None; m * m];
    for a in 0..m {
        for b in 0..m {
            if block_of[a] != block_of[b] {
                continue;
            }
            let lower: Vec<usize> = (0..m).filter(|&c| leq(c, a) && leq(c, b)).collect();
            match lower.iter().find(|&&g| lower.iter().all(|&c| leq(c, g))) {
                Some(&g) => entries[a * m + b] = Some(g),
                None => report.violate("meet-missing", &[ids[a], ids[b]]),
            }
        }
    }
    let table = PartialTable::from_entries(m, entries).expect("positions are in range");
    (table, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::{antichain, chain};

    #[test]
    fn antichain_has_singleton_blocks() {
        let a = antichain(2).unwrap();
        let (r, p) = check_local_meet_semilattice(a.base()).unwrap();
        assert!(r.passed());
        assert_eq!(p.blocks(), &[vec![0], vec![1]]);
        assert_eq!(r.find_section("meet-semilattice"), Some(&SectionData::Flag(false)));
        assert_eq!(r.find_section("locally-complete"), Some(&SectionData::Flag(true)));
    }

    #[test]
    fn chain_is_one_block() {
        let c = chain(2).unwrap();
        let (r, p) = check_local_meet_semilattice(c.base()).unwrap();
        assert!(r.passed());
        assert_eq!(p.len(), 1);
        assert_eq!(block_top(c.base(), &p.blocks()[0]), Some(1));
    }

    #[test]
    fn left_zero_band_fails_commutativity() {
        let t = PartialTable::from_fn(2, |x, _| Some(x)).unwrap();
        let (r, _) = check_local_meet_semilattice(&t).unwrap();
        assert_eq!(r.failed_tags(), vec!["commutative"]);
        assert_eq!(r.count("commutative"), 2);
        assert_eq!(r.violations()[0].witness, vec![0, 1]);
    }

    #[test]
    fn non_idempotent_reported() {
        let t = PartialTable::new(1);
        let (r, _) = check_local_meet_semilattice(&t).unwrap();
        assert_eq!(r.failed_tags(), vec!["idempotent"]);
    }

    #[test]
    fn meet_recovered_from_order() {
        for t in [chain(3).unwrap(), antichain(3).unwrap()] {
            let ids: Vec<usize> = (0..3).collect();
            let (m, r) = meet_from_order(&natural_order(t.base()), &ids);
            assert!(r.passed());
            assert_eq!(&m, t.base());
        }
    }

    #[test]
    fn missing_meet_reported() {
        // Two minimal elements under a common top: no glb.
        let o = OrderRel::from_pairs_reflexive(3, &[(0, 2), (1, 2)]).unwrap();
        let (_, err) = meet_from_order(&o, &[0, 1, 2]);
        assert!(err.has("meet-missing"));
        assert_eq!(err.violations()[0].witness, vec![0, 1]);
    }

    #[test]
    fn reassembly_round_trips() {
        let t = PartialTable::from_entries(
            3,
            vec![Some(0), None, None, None, Some(1), Some(1), None, Some(1), Some(2)],
        )
        .unwrap();
        let (r, p) = check_local_meet_semilattice(&t).unwrap();
        assert!(r.passed());
        let tables: Vec<_> = p.blocks().iter().map(|b| t.restrict(b).unwrap()).collect();
        assert_eq!(p.reassemble(3, &tables).unwrap(), t);
    }
}
