//! Points of P^4, exact rational matrices, and the adapted moving frame.

mod frame;
mod matrix;
mod point;

pub use frame::{
    bourgain_frame_symbolic, change_polynomial_coordinates, change_polynomial_coordinates_into,
    frame_bourgain, invert, symbolic_inverse, FrameMatrix,
};
pub use matrix::{rank, relative_rank, Matrix};
pub use point::ProjPoint;

use thiserror::Error;

use crate::polyring::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("matrix is singular")]
    Singular,
    #[error("expected a {expected}x{expected} matrix, got {rows}x{cols}")]
    Shape {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("rows have unequal lengths")]
    Ragged,
    #[error("projective point needs a nonzero coordinate")]
    ZeroPoint,
    #[error("context has {got} variables, matrix acts on {expected}")]
    ContextSize { expected: usize, got: usize },
    #[error("symbolic determinant is not a nonzero constant: {0}")]
    NonConstantDeterminant(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub type Result<T> = std::result::Result<T, GeomError>;
