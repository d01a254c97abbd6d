use alloc::string::String;
use core::fmt;

use crate::report::Report;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Failures that are not axiom violations.
///
/// Axiom violations are reported through [`Report`]; an `Error` means the
/// input was malformed, did not meet an operation's precondition, or that a
/// cross-check between two independent routes disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An id in some table or map is outside the carrier.
    OutOfRange {
        what: &'static str,
        index: usize,
        value: usize,
        bound: usize,
    },
    /// Two tables or maps that must share a carrier have different sizes.
    SizeMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    /// A domain or range value is not one of the declared objects.
    NotAnObject {
        what: &'static str,
        index: usize,
        value: usize,
    },
    /// The requested axiom set needs the `*` operation but none is attached.
    MissingStar,
    /// A search or generator was asked for an instance beyond its size guard.
    SizeGuard {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
    /// The operation requires its input to belong to some class and it does not.
    Precondition { required: &'static str, report: Report },
    /// The operation is not defined for this combination of kind and class.
    ClassMismatch(&'static str),
    /// Two routes that must agree did not. This is always a bug.
    Inconsistent(String),
}

impl Error {
    /// `true` for errors caused by malformed or unsuitable input, as opposed to
    /// structures failing a precondition or internal inconsistencies.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::OutOfRange { .. }
                | Error::NotAnObject { .. }
                | Error::SizeMismatch { .. }
                | Error::MissingStar
                | Error::SizeGuard { .. }
                | Error::ClassMismatch(_)
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutOfRange {
                what,
                index,
                value,
                bound,
            } => write!(f, "{what}: entry {index} has value {value}, carrier size is {bound}"),
            Error::SizeMismatch {
                what,
                expected,
                found,
            } => write!(f, "{what}: expected size {expected}, found {found}"),
            Error::NotAnObject { what, index, value } => {
                write!(f, "{what}: entry {index} maps to {value}, which is not an object")
            }
            Error::MissingStar => f.write_str("axiom set needs the star operation but none is given"),
            Error::SizeGuard {
                what,
                requested,
                limit,
            } => write!(f, "{what}: size {requested} exceeds the limit {limit}"),
            Error::Precondition { required, report } => write!(
                f,
                "input is not a {required} ({} violation(s), first: {})",
                report.violations().len(),
                report
                    .violations()
                    .first()
                    .map(|v| v.tag)
                    .unwrap_or("none")
            ),
            Error::ClassMismatch(msg) => write!(f, "class mismatch: {msg}"),
            Error::Inconsistent(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
