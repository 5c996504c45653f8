use num_traits::Zero;

use super::{GeomError, Matrix, Result};
use crate::polyring::{
    poly_adjugate, poly_determinant, rat, PolyMatrix, Polynomial, Rational, Substitution,
    VarContext,
};

/// Invertible 5x5 matrix. Row `i` holds the coordinates of the new basis
/// point `B_i` in the old basis `A_0..A_4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameMatrix(Matrix);

impl FrameMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        if m.nrows() != 5 || m.ncols() != 5 {
            return Err(GeomError::Shape {
                expected: 5,
                rows: m.nrows(),
                cols: m.ncols(),
            });
        }
        if m.determinant()?.is_zero() {
            return Err(GeomError::Singular);
        }
        Ok(Self(m))
    }

    pub fn identity() -> Self {
        Self(Matrix::identity(5))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    /// Coordinates in the new basis of a point with old coordinates `z`,
    /// i.e. `y` with `z = sum_i y_i B_i`.
    pub fn to_frame_coords(&self, z: &[Rational]) -> Result<Vec<Rational>> {
        let inv = self.0.inverse()?;
        Ok(inv.combine_rows(z))
    }
}

impl AsRef<Matrix> for FrameMatrix {
    fn as_ref(&self) -> &Matrix {
        &self.0
    }
}

/// Rows of the moving frame at numeric `(p, q)`:
///
/// ```text
/// B0 = A0 + p A4
/// B1 = A1 - 2p A2 - p^2 A3
/// B2 = A2 + p A3 + q A0 + pq A4
/// B3 = A3
/// B4 = A4
/// ```
pub fn frame_bourgain(p: &Rational, q: &Rational) -> FrameMatrix {
    let z = Rational::zero;
    let one = || rat(1);
    let rows = vec![
        vec![one(), z(), z(), z(), p.clone()],
        vec![z(), one(), -(p * rat(2)), -(p * p), z()],
        vec![q.clone(), z(), one(), p.clone(), p * q],
        vec![z(), z(), z(), one(), z()],
        vec![z(), z(), z(), z(), one()],
    ];
    FrameMatrix::new(Matrix::new(rows).expect("5x5")).expect("unit determinant")
}

pub fn invert(m: &FrameMatrix) -> Result<FrameMatrix> {
    FrameMatrix::new(m.0.inverse()?)
}

/// The same frame with `p` and `q` kept as variables of `ctx`.
pub fn bourgain_frame_symbolic(ctx: &VarContext) -> Result<PolyMatrix> {
    let p = Polynomial::var(ctx, "p")?;
    let q = Polynomial::var(ctx, "q")?;
    let k = |n: i64| Polynomial::constant(ctx, rat(n));
    Ok(vec![
        vec![k(1), k(0), k(0), k(0), p.clone()],
        vec![k(0), k(1), p.scale(&rat(-2)), -p.pow(2), k(0)],
        vec![q.clone(), k(0), k(1), p.clone(), &p * &q],
        vec![k(0), k(0), k(0), k(1), k(0)],
        vec![k(0), k(0), k(0), k(0), k(1)],
    ])
}

/// Inverse of a polynomial matrix whose determinant is a nonzero constant.
pub fn symbolic_inverse(ctx: &VarContext, m: &[Vec<Polynomial>]) -> Result<PolyMatrix> {
    let det = poly_determinant(ctx, m)?;
    let c = det
        .as_constant()
        .filter(|c| !c.is_zero())
        .ok_or_else(|| GeomError::NonConstantDeterminant(det.to_string()))?;
    let inv_c = c.recip();
    Ok(poly_adjugate(ctx, m)?
        .into_iter()
        .map(|row| row.into_iter().map(|e| e.scale(&inv_c)).collect())
        .collect())
}

/// Replaces coordinate `i` of `f` by the linear form `sum_j m[i][j] x_j`
/// over the same variables.
pub fn change_polynomial_coordinates(f: &Polynomial, m: &Matrix) -> Result<Polynomial> {
    change_polynomial_coordinates_into(f, m, f.context())
}

/// As [`change_polynomial_coordinates`], with the linear forms written in
/// the variables of `target`.
pub fn change_polynomial_coordinates_into(
    f: &Polynomial,
    m: &Matrix,
    target: &VarContext,
) -> Result<Polynomial> {
    let n = f.context().len();
    if m.nrows() != n || m.ncols() != target.len() {
        return Err(GeomError::ContextSize {
            expected: m.nrows(),
            got: n,
        });
    }
    let mut subst = Substitution::new(target);
    for (i, name) in f.context().names().iter().enumerate() {
        let form = m
            .row(i)
            .iter()
            .enumerate()
            .fold(Polynomial::zero(target), |acc, (j, c)| {
                acc + Polynomial::var_at(target, j).scale(c)
            });
        subst = subst.with(name, form);
    }
    Ok(f.substitute(&subst)?)
}
