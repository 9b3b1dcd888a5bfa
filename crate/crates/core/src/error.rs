use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The modulus is not a prime in the supported range `2..=97`.
    UnsupportedModulus(u32),
    /// `x^q - 1` was requested with `p | q`.
    NonCoprime {
        q: usize,
        p: u32,
    },
    /// A linear system has no solution. `certificate` is the offending row of
    /// `RREF([A | b])`; its only nonzero entry among the last column is the pivot.
    Inconsistent {
        certificate: Vec<u32>,
    },
    /// Malformed group spec.
    Parse(String),
    /// Group order exceeds the table cap.
    TooLarge {
        order: usize,
    },
    NotNormal,
    NotCyclic,
    NotSubgroup,
    /// The operation is only implemented for a subset of (group, prime) shapes.
    UnsupportedShape(String),
    /// No cohomology strategy covers the group.
    UnsupportedGroup(String),
    /// An exhaustive sweep would exceed the enumeration cap.
    TooLargeToDecide {
        size_log_p: usize,
    },
    ZeroParameter,
    /// Chain-map lifting failed; the resolution is broken.
    LiftFailed {
        degree: usize,
    },
    CutoffExceeded {
        degree: usize,
        cutoff: usize,
    },
    ModulusMismatch {
        left: u32,
        right: u32,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedModulus(p) => {
                write!(f, "unsupported modulus {p}: need a prime in 2..=97")
            }
            Error::NonCoprime { q, p } => write!(f, "x^{q} - 1 is not squarefree over F_{p}"),
            Error::Inconsistent { .. } => write!(f, "inconsistent linear system"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::TooLarge { order } => {
                write!(f, "group of order {order} exceeds the supported size")
            }
            Error::NotNormal => write!(f, "subgroup is not normal"),
            Error::NotCyclic => write!(f, "group is not cyclic"),
            Error::NotSubgroup => write!(f, "not a subgroup of the given group"),
            Error::UnsupportedShape(msg) => write!(f, "unsupported shape: {msg}"),
            Error::UnsupportedGroup(msg) => write!(f, "unsupported group: {msg}"),
            Error::TooLargeToDecide { size_log_p } => {
                write!(f, "search space p^{size_log_p} exceeds the enumeration cap")
            }
            Error::ZeroParameter => write!(f, "parameter must be nonzero"),
            Error::LiftFailed { degree } => write!(f, "chain map lift failed in degree {degree}"),
            Error::CutoffExceeded { degree, cutoff } => {
                write!(f, "degree {degree} exceeds resolution cutoff {cutoff}")
            }
            Error::ModulusMismatch { left, right } => {
                write!(f, "characteristic mismatch: {left} vs {right}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
