//! Exhaustive generation of small instances of every structure class.
//!
//! [`enumerate`] runs a backtracking search; [`oracle_count`] filters the
//! whole raw space naively and exists to cross-check it. The empty
//! structure belongs to every class.

mod backtrack;
mod canon;
mod oracle;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::biordered::{check_lbec, check_locally_inductive, BiorderedCategory, Inductive};
use crate::error::{Error, Result};
use crate::inverse::is_inverse_structure;
use crate::semilattice::is_local_meet_semilattice;
use crate::table::{check_associativity, PartialTable};
use crate::unary::{AxiomKind, UnaryStructure};

pub use backtrack::{categories, partial_orders};
pub use canon::{canonicalize, CanonicalForm};
pub use oracle::oracle_count;

/// The classes [`enumerate`] can generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    Semigroupoid,
    Ehresmann,
    Restriction,
    Inverse,
    LocalMeetSemilattice,
    /// Local biordered Ehresmann categories.
    Lbec,
    /// Locally inductive categories.
    Lic,
    /// Locally inductive groupoids.
    Lig,
}

impl Class {
    pub const ALL: [Class; 8] = [
        Class::Semigroupoid,
        Class::Ehresmann,
        Class::Restriction,
        Class::Inverse,
        Class::LocalMeetSemilattice,
        Class::Lbec,
        Class::Lic,
        Class::Lig,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Class::Semigroupoid => "semigroupoid",
            Class::Ehresmann => "ehresmann",
            Class::Restriction => "restriction",
            Class::Inverse => "inverse",
            Class::LocalMeetSemilattice => "local-meet-semilattice",
            Class::Lbec => "lbec",
            Class::Lic => "lic",
            Class::Lig => "lig",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    /// Largest carrier the generators accept.
    pub fn max_size(self) -> usize {
        match self {
            Class::LocalMeetSemilattice => 4,
            _ => 3,
        }
    }

    fn guard(self, n: usize) -> Result<()> {
        if n > self.max_size() {
            return Err(Error::SizeGuard {
                what: self.name(),
                requested: n,
                limit: self.max_size(),
            });
        }
        Ok(())
    }
}

/// One generated structure.
#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Table(PartialTable),
    Unary(UnaryStructure),
    Category(BiorderedCategory),
}

impl Instance {
    pub fn size(&self) -> usize {
        match self {
            Instance::Table(t) => t.size(),
            Instance::Unary(s) => s.size(),
            Instance::Category(c) => c.size(),
        }
    }

    /// Element `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        match self {
            Instance::Table(t) => Instance::Table(t.permuted(perm)),
            Instance::Unary(s) => Instance::Unary(s.permuted(perm)),
            Instance::Category(c) => Instance::Category(c.permuted(perm)),
        }
    }

    pub fn as_table(&self) -> Option<&PartialTable> {
        match self {
            Instance::Table(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_unary(&self) -> Option<&UnaryStructure> {
        match self {
            Instance::Unary(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_category(&self) -> Option<&BiorderedCategory> {
        match self {
            Instance::Category(c) => Some(c),
            _ => None,
        }
    }
}

/// Whether `x` belongs to `class`, by the class's own checker. An instance
/// of the wrong shape is a [`Error::ClassMismatch`].
pub fn check_class(class: Class, x: &Instance) -> Result<bool> {
    let mismatch = || Error::ClassMismatch("instance shape does not match the class");
    Ok(match class {
        Class::Semigroupoid => check_associativity(x.as_table().ok_or_else(mismatch)?).passed(),
        Class::LocalMeetSemilattice => is_local_meet_semilattice(x.as_table().ok_or_else(mismatch)?),
        Class::Ehresmann | Class::Restriction | Class::Inverse => {
            let s = x.as_unary().ok_or_else(mismatch)?;
            match class {
                Class::Ehresmann => s.satisfies(AxiomKind::TwoSidedEhresmann),
                Class::Restriction => s.satisfies(AxiomKind::TwoSidedRestriction),
                _ => is_inverse_structure(s)?,
            }
        }
        Class::Lbec => check_lbec(x.as_category().ok_or_else(mismatch)?)?.report.passed(),
        Class::Lic | Class::Lig => {
            let c = x.as_category().ok_or_else(mismatch)?;
            let want = if class == Class::Lic { Inductive::Category } else { Inductive::Groupoid };
            c.leq_l() == c.leq_r() && check_locally_inductive(c.cat(), c.leq_l(), want)?.passed()
        }
    })
}

/// Every structure of `class` on `0..n`, in search order; with `dedup`, one
/// representative per isomorphism class, sorted by canonical form. Each
/// emitted structure is re-checked and a failure is an
/// [`Error::Inconsistent`].
pub fn enumerate(class: Class, n: usize, dedup: bool) -> Result<Vec<Instance>> {
    class.guard(n)?;
    let raw = backtrack::generate(class, n)?;
    for x in &raw {
        if !check_class(class, x)? {
            return Err(Error::Inconsistent(format!("generator emitted a non-{} structure", class.name())));
        }
    }
    if !dedup {
        return Ok(raw);
    }
    let mut reps: BTreeMap<CanonicalForm, Instance> = BTreeMap::new();
    for x in raw {
        reps.entry(canonicalize(&x)).or_insert(x);
    }
    Ok(reps.into_values().collect())
}

/// Every structure of `class` on carriers of size `0..=n`, deduplicated.
pub fn enumerate_up_to(class: Class, n: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(enumerate(class, k, true)?);
    }
    Ok(out)
}
