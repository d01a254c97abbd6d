use alloc::vec::Vec;

use super::Instance;
use crate::order::OrderRel;
use crate::table::PartialTable;

/// The least serialization of a structure over all relabelings of its
/// carrier. Two structures of the same kind have equal forms exactly when
/// they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn canonicalize(x: &Instance) -> CanonicalForm {
    let n = x.size();
    let mut best = encode(x);
    for perm in permutations(n) {
        let e = encode(&x.permuted(&perm));
        if e < best {
            best = e;
        }
    }
    CanonicalForm(best)
}

/// Kind byte, size, then every operation and relation cell by cell.
/// Undefined products are `0` and a value `k` is `k + 1`; labels are not
/// part of the structure.
fn encode(x: &Instance) -> Vec<u8> {
    let n = x.size();
    let mut out = Vec::new();
    let byte = |v: usize| u8::try_from(v).expect("carrier fits in a byte");
    let table = |out: &mut Vec<u8>, t: &PartialTable| {
        out.extend(t.entries().iter().map(|e| e.map_or(0, |k| byte(k + 1))));
    };
    let order = |out: &mut Vec<u8>, o: &OrderRel| {
        for i in 0..n {
            for j in 0..n {
                out.push(o.leq(i, j) as u8);
            }
        }
    };
    match x {
        Instance::Table(t) => {
            out.extend([0, byte(n)]);
            table(&mut out, t);
        }
        Instance::Unary(s) => {
            out.extend([1, byte(n)]);
            table(&mut out, s.base());
            out.extend(s.plus_map().iter().map(|&v| byte(v)));
            match s.star_map() {
                Some(m) => {
                    out.push(1);
                    out.extend(m.iter().map(|&v| byte(v)));
                }
                None => out.push(0),
            }
        }
        Instance::Category(b) => {
            let c = b.cat();
            out.extend([2, byte(n)]);
            out.extend((0..n).map(|i| c.is_object(i) as u8));
            out.extend(c.dom_map().iter().map(|&v| byte(v)));
            out.extend(c.ran_map().iter().map(|&v| byte(v)));
            table(&mut out, c.comp_table());
            order(&mut out, b.leq_l());
            order(&mut out, b.leq_r());
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..rest.len() {
            let v = rest.remove(k);
            cur.push(v);
            go(rest, cur, out);
            cur.pop();
            rest.insert(k, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::relations::{antichain, chain, z2};

    #[test]
    fn singleton_form_is_its_encoding() {
        let x = Instance::Unary(chain(1).unwrap());
        assert_eq!(canonicalize(&x).as_bytes(), encode(&x).as_slice());
    }

    #[test]
    fn relabeled_group_has_same_form() {
        let g = Instance::Unary(z2());
        assert_eq!(canonicalize(&g), canonicalize(&g.permuted(&[1, 0])));
    }

    #[test]
    fn chain_and_antichain_differ() {
        let a = Instance::Table(chain(2).unwrap().base().clone());
        let b = Instance::Table(antichain(2).unwrap().base().clone());
        assert_ne!(canonicalize(&a), canonicalize(&b));
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
    }
}
