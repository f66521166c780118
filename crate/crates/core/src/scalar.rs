//! Scalar field tags.

use serde::{Deserialize, Serialize};

pub use num_complex::Complex64;

/// The underlying field of a matrix or frame.
///
/// Real-field values are stored as [`Complex64`] with a zero imaginary part;
/// every operation in the crate preserves that exactly (no operation routes a
/// real matrix through a genuinely complex code path).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    /// The smallest field containing both operands.
    pub fn join(self, other: Field) -> Field {
        if self == Field::Real && other == Field::Real {
            Field::Real
        } else {
            Field::Complex
        }
    }

    /// Field inferred from a scalar: real iff the imaginary part is zero.
    pub fn of(z: Complex64) -> Field {
        if z.im == 0.0 {
            Field::Real
        } else {
            Field::Complex
        }
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Real => write!(f, "real"),
            Field::Complex => write!(f, "complex"),
        }
    }
}
