//! Verification and construction toolkit for finite Ehresmann, restriction
//! and inverse semigroupoids and their categorical counterparts.
//!
//! Every structure lives on a carrier `0..n` of element ids. The crate is
//! split along the two sides of the correspondence:
//!
//! * [`table`], [`unary`], [`semilattice`], [`inverse`] and [`relations`]
//!   cover semigroupoids: partial multiplication tables, the `+`/`*` unary
//!   operations, the derived natural partial orders, local meet-semilattices
//!   and pseudo-inverses.
//! * [`category`] and [`biordered`] cover finite categories with one or two
//!   partial orders: ordered categories, restrictions and corestrictions,
//!   local biordered Ehresmann categories and the pseudo-product.
//! * [`correspondence`] builds `C(S)` and `S(C)`, checks that they are
//!   mutually inverse and classifies structures along the class lattice.
//! * [`morphism`] decides the six morphism classes on both sides.
//! * [`enumerate`] generates every small instance of each class.
//!
//! Checks return a [`Report`]: a verdict together with the tagged witnesses
//! of every violated axiom instance. Malformed input is an [`Error`] instead.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod biordered;
pub mod category;
pub mod correspondence;
pub mod enumerate;
mod error;
pub mod inverse;
pub mod morphism;
pub mod order;
pub mod relations;
mod report;
pub mod semilattice;
pub mod table;
pub mod unary;

pub use biordered::{BiorderedCategory, Lbec};
pub use category::FiniteCategory;
pub use error::{Error, Result};
pub use order::OrderRel;
pub use report::{Report, Section, SectionData, Violation};
pub use table::PartialTable;
pub use unary::{AxiomKind, UnaryStructure};
