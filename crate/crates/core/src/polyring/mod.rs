//! Exact multivariate polynomials over the rationals.
//!
//! Every polynomial lives in a [`VarContext`], an ordered list of variable
//! names. Terms are kept in graded-lexicographic order with zero
//! coefficients removed after every operation, so structural equality is
//! polynomial identity.

mod context;
mod matrix;
mod monomial;
mod polynomial;
mod resultant;
pub mod univariate;

pub use context::VarContext;
pub use matrix::{poly_adjugate, poly_determinant, PolyMatrix};
pub use monomial::Monomial;
pub use polynomial::{Polynomial, Substitution};
pub use resultant::{discriminant, sylvester_matrix, sylvester_resultant};

use serde::Serializer;
use thiserror::Error;

/// Coefficient field. Always normalized: reduced, positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds a rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Builds the reduced fraction `num/den`. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Formats a rational as `num/den`, denominator included even when it is 1.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Serializes a rational as its [`rational_string`].
pub fn serialize_rational<S: Serializer>(
    r: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(r))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("context mismatch: [{left}] vs [{right}]")]
    ContextMismatch { left: String, right: String },
    #[error("duplicate variable `{0}` in context")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no assignment for variable `{0}`")]
    MissingAssignment(String),
    #[error("point has {got} coordinates, context has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
    #[error("target degree {target} is below the polynomial degree {degree}")]
    DegreeTooLow { target: u32, degree: u32 },
    #[error("polynomial is constant in `{0}`")]
    ConstantInVariable(String),
    #[error("expected degree {expected} in `{var}`, found {found}")]
    WrongDegree {
        var: String,
        expected: u32,
        found: u32,
    },
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

pub type Result<T> = std::result::Result<T, PolyError>;
