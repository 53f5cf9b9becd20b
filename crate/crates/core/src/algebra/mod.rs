//! Exact polynomial and matrix arithmetic.

mod det;
mod matrix;
mod modular;
pub mod numeric;
mod poly;
mod ratfunc;

pub use det::{bareiss_int, det, det_bareiss, det_interpolate, det_rational, interpolate};
pub use modular::det_modular;
pub use matrix::{PolyMatrix, QMatrix};
pub use poly::{parse_rational, poly_gcd, reverse_transform, Polynomial};
pub use ratfunc::RationalFunction;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division is not exact")]
    NotDivisible,
    #[error("matrix is not square")]
    NotSquare,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("degree {degree} exceeds bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("cannot parse rational {0:?}")]
    Parse(String),
    #[error("internal arithmetic error: {0}")]
    Internal(String),
}
