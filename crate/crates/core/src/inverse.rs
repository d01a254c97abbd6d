//! Pseudo-inverses and inverse semigroupoids.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::report::{Report, SectionData};
use crate::table::{check_associativity, PartialTable};
use crate::unary::{AxiomKind, UnaryStructure};

/// `inv[s]` is the unique pseudo-inverse of `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseData {
    inv: Vec<usize>,
}

impl InverseData {
    #[inline]
    pub fn get(&self, s: usize) -> usize {
        self.inv[s]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.inv
    }
}

/// Result of [`check_inverse`]. On a pass both `inverse` and `structure`
/// are present; `structure` carries `s⁺ = ss⁻¹` and `s* = s⁻¹s`.
#[derive(Debug, Clone)]
pub struct InverseCheck {
    pub report: Report,
    pub inverse: Option<InverseData>,
    pub structure: Option<UnaryStructure>,
}

/// Every `u` with `su`, `us` defined, `sus = s` and `usu = u`.
pub fn pseudo_inverses(t: &PartialTable, s: usize) -> Vec<usize> {
    (0..t.size())
        .filter(|&u| {
            let (Some(su), Some(us)) = (t.get(s, u), t.get(u, s)) else {
                return false;
            };
            t.get(su, s) == Some(s) && t.get(us, u) == Some(u)
        })
        .collect()
}

/// `true` when `ef` defined implies `fe` defined and equal, for idempotents
/// `e`, `f`.
pub fn idempotents_commute(t: &PartialTable) -> bool {
    let e = t.idempotents();
    e.iter().all(|&a| {
        e.iter()
            .all(|&b| t.get(a, b).is_none() || t.get(a, b) == t.get(b, a))
    })
}

/// Searches every element for its pseudo-inverses.
///
/// Tags: `not-regular` `[s]` when `s` has none, `not-inverse`
/// `[s, u₁, u₂, …]` when it has several. Sections `regular` and
/// `idempotents-commute` are always present. The uniqueness verdict is
/// cross-checked against "regular and idempotents commute"; a disagreement,
/// or an induced structure that is not a two-sided restriction
/// semigroupoid, is an [`Error::Inconsistent`].
pub fn check_inverse(t: &PartialTable) -> Result<InverseCheck> {
    let assoc = check_associativity(t);
    if !assoc.passed() {
        return Err(Error::Precondition {
            required: "semigroupoid",
            report: assoc,
        });
    }
    let n = t.size();
    let mut report = Report::new();
    let mut inv = Vec::with_capacity(n);
    let mut regular = true;
    for s in 0..n {
        let cands = pseudo_inverses(t, s);
        match cands.len() {
            0 => {
                regular = false;
                report.violate("not-regular", &[s]);
            }
            1 => inv.push(cands[0]),
            _ => {
                let mut w = alloc::vec![s];
                w.extend(&cands);
                report.violate("not-inverse", &w);
            }
        }
    }
    let commute = idempotents_commute(t);
    report.section("regular", SectionData::Flag(regular));
    report.section("idempotents-commute", SectionData::Flag(commute));
    if report.passed() != (regular && commute) {
        return Err(Error::Inconsistent(format!(
            "unique pseudo-inverses: {}, regular: {regular}, idempotents commute: {commute}",
            report.passed()
        )));
    }
    if !report.passed() {
        return Ok(InverseCheck {
            report,
            inverse: None,
            structure: None,
        });
    }
    for s in 0..n {
        if inv[inv[s]] != s {
            return Err(Error::Inconsistent(format!("pseudo-inverse of {s} is not an involution")));
        }
    }
    let induced = |a: &dyn Fn(usize) -> Option<usize>| -> Result<Vec<usize>> {
        (0..n)
            .map(|s| a(s).ok_or_else(|| Error::Inconsistent(format!("induced projection of {s} undefined"))))
            .collect()
    };
    let plus = induced(&|s| t.get(s, inv[s]))?;
    let star = induced(&|s| t.get(inv[s], s))?;
    let structure = UnaryStructure::new(t.clone(), plus, Some(star))?;
    if !structure.satisfies(AxiomKind::TwoSidedRestriction) {
        return Err(Error::Inconsistent(
            "induced structure of an inverse semigroupoid is not a restriction semigroupoid".into(),
        ));
    }
    report.section("pseudo-inverse", SectionData::Pairs(inv.iter().copied().enumerate().collect()));
    Ok(InverseCheck {
        report,
        inverse: Some(InverseData { inv }),
        structure: Some(structure),
    })
}

/// `true` when the base table is an inverse semigroupoid and the attached
/// `+`/`*` are the induced ones, `s⁺ = ss⁻¹` and `s* = s⁻¹s`.
///
/// The second condition matters: the 2-chain with both maps constant at its
/// top is a restriction semigroupoid on an inverse table whose category is
/// not a groupoid.
pub fn is_inverse_structure(s: &UnaryStructure) -> Result<bool> {
    let check = check_inverse(s.base())?;
    Ok(match check.structure {
        Some(induced) => {
            induced.plus_map() == s.plus_map() && induced.star_map() == s.star_map()
        }
        None => false,
    })
}
