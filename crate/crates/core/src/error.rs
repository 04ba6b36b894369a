//! Error types for the exact kernel.

use alloc::string::String;
use core::fmt;

/// Failures of the exact arithmetic layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactError {
    /// The zero function has no Laurent expansion, order or residue.
    ZeroFunction,
    /// A window was requested with `hi < lo`.
    WindowBoundsInverted { lo: i64, hi: i64 },
    /// Window arithmetic would drop a nonzero coefficient.
    WindowOverflow { exponent: i64 },
    /// Windows of different spans were combined.
    WindowMismatch,
    /// The supplied roots do not exhaust the denominator.
    RootsInsufficient { remainder_degree: usize },
    /// A factor of degree > 1 over ℚ(i) remains and no root was supplied.
    IrreducibleFactor { degree: usize },
    /// Denominator is the zero polynomial.
    ZeroDenominator,
    /// Anything else worth a message.
    Invalid(String),
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::ZeroFunction => write!(f, "operation undefined for the zero function"),
            ExactError::WindowBoundsInverted { lo, hi } => {
                write!(f, "window bounds inverted: [{lo}, {hi}]")
            }
            ExactError::WindowOverflow { exponent } => {
                write!(f, "window overflow: nonzero coefficient at exponent {exponent}")
            }
            ExactError::WindowMismatch => write!(f, "window spans do not match"),
            ExactError::RootsInsufficient { remainder_degree } => write!(
                f,
                "roots insufficient: unfactored denominator remainder of degree {remainder_degree}"
            ),
            ExactError::IrreducibleFactor { degree } => write!(
                f,
                "irreducible factor of degree {degree} over Q(i) with no supplied root"
            ),
            ExactError::ZeroDenominator => write!(f, "denominator is zero"),
            ExactError::Invalid(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for ExactError {}
