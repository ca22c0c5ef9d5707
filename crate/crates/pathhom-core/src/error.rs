//! Error type shared across the engine.

use alloc::string::String;
use core::fmt;

/// Errors produced by construction, enumeration, and linear algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Invalid digraph data (self-loop, duplicate edge, out-of-range index).
    Digraph(String),
    /// An enumeration would exceed the configured cap.
    CapExceeded {
        what: &'static str,
        cap: usize,
    },
    /// Incompatible dimensions between operands.
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    /// An operator had the wrong parity for the requested role.
    Parity {
        role: &'static str,
        need_odd: bool,
        found_degree: u32,
    },
    /// Scalar literal could not be parsed or is not invertible in the field.
    Scalar(String),
    /// Operands that cannot be combined (mismatched digraphs, parameters,
    /// or fields).
    Parameter(String),
    /// The field modulus is not an odd prime.
    BadModulus(u64),
    /// The complex was truncated while possibly still nonzero.
    TruncatedComplex,
    /// The even-degree operator carries some group vector to a chain with
    /// non-allowed support, so it does not restrict to the destination
    /// complex and the induced map is undefined for this input.
    ChainMapEscape { degree: u64 },
    /// An algebraic identity the theory guarantees failed to hold.
    /// Signals a bug in the engine, never a data error.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Digraph(msg) => write!(f, "invalid digraph: {msg}"),
            Error::CapExceeded { what, cap } => {
                write!(f, "{what} exceeds the configured cap of {cap}")
            }
            Error::DimensionMismatch {
                context,
                expected,
                found,
            } => write!(
                f,
                "dimension mismatch in {context}: expected {expected}, found {found}"
            ),
            Error::Parity {
                role,
                need_odd,
                found_degree,
            } => {
                let want = if *need_odd { "odd" } else { "even" };
                write!(f, "{role} must have {want} degree, found degree {found_degree}")
            }
            Error::Scalar(msg) => write!(f, "invalid scalar: {msg}"),
            Error::Parameter(msg) => write!(f, "incompatible operands: {msg}"),
            Error::BadModulus(p) => write!(f, "field modulus {p} is not an odd prime"),
            Error::TruncatedComplex => {
                write!(f, "complex is truncated while possibly nonzero beyond the bound")
            }
            Error::ChainMapEscape { degree } => write!(
                f,
                "the even-degree operator does not preserve the allowed subcomplex at                  degree {degree}; the induced map is undefined for this input"
            ),
            Error::Internal(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
