use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{GeomError, Result};
use crate::polyring::Rational;

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: Vec<Vec<Rational>>,
    ncols: usize,
}

impl Matrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(GeomError::Ragged);
        }
        Ok(Self { rows, ncols })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            rows: vec![vec![Rational::zero(); ncols]; nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = Rational::one();
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Rational>]) -> Result<Self> {
        Ok(Self::new(cols.to_vec())?.transpose())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    pub fn transpose(&self) -> Matrix {
        let rows = (0..self.ncols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        Matrix {
            rows,
            ncols: self.nrows(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.ncols != other.nrows() {
            return Err(GeomError::Shape {
                expected: self.ncols,
                rows: other.nrows(),
                cols: other.ncols,
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                (0..other.ncols)
                    .map(|j| {
                        r.iter()
                            .zip(&other.rows)
                            .fold(Rational::zero(), |acc, (a, row)| acc + a * &row[j])
                    })
                    .collect()
            })
            .collect();
        Matrix::new(rows)
    }

    /// `v^T * self`: the combination of rows weighted by `v`.
    pub fn combine_rows(&self, weights: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.ncols];
        for (w, row) in weights.iter().zip(&self.rows) {
            for (o, x) in out.iter_mut().zip(row) {
                *o += w * x;
            }
        }
        out
    }

    /// Rows scaled to integers; rank and the sign of pivots are unchanged.
    /// Returns the integer rows and the product of the scale factors.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                scale *= &l;
                r.iter().map(|x| (x * &l).to_integer()).collect()
            })
            .collect();
        (rows, scale)
    }

    pub fn rank(&self) -> usize {
        let (mut a, _) = self.integer_rows();
        bareiss(&mut a, self.ncols).0
    }

    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(GeomError::Shape {
                expected: self.ncols,
                rows: self.nrows(),
                cols: self.ncols,
            });
        }
        let (mut a, scale) = self.integer_rows();
        let (rank, det) = bareiss(&mut a, self.ncols);
        if rank < self.ncols {
            return Ok(Rational::zero());
        }
        Ok(Rational::new(det, scale))
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(GeomError::Shape {
                expected: self.ncols,
                rows: self.nrows(),
                cols: self.ncols,
            });
        }
        let n = self.ncols;
        let mut a = self.rows.clone();
        let mut inv = Matrix::identity(n).rows;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(GeomError::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] /= &p;
                inv[col][j] /= &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
        Matrix::new(inv)
    }
}

/// Fraction-free elimination in place. Returns the rank and, for a full
/// rank square input, the determinant.
fn bareiss(a: &mut [Vec<BigInt>], ncols: usize) -> (usize, BigInt) {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    let det = if r == nrows && nrows == ncols {
        sign * prev
    } else {
        BigInt::zero()
    };
    (r, det)
}

/// Exact rank of any rectangular matrix.
pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// `rank([span | extra]) - rank(span)`: the rank of the columns of `extra`
/// modulo the column space of `span`.
pub fn relative_rank(span: &[Vec<Rational>], extra: &[Vec<Rational>]) -> Result<usize> {
    let all: Vec<Vec<Rational>> = span.iter().chain(extra).cloned().collect();
    let base = if span.is_empty() {
        0
    } else {
        Matrix::new(span.to_vec())?.rank()
    };
    let total = if all.is_empty() {
        0
    } else {
        Matrix::new(all)?.rank()
    };
    Ok(total - base)
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix [")?;
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
