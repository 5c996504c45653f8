use super::{poly_determinant, PolyError, PolyMatrix, Polynomial, Rational, Result};

/// Sylvester matrix of `f` and `g` with respect to `var`.
///
/// Layout: `deg g` rows of `f`'s coefficients (leading first, each row
/// shifted one column right), followed by `deg f` rows of `g`'s.
pub fn sylvester_matrix(f: &Polynomial, g: &Polynomial, var: &str) -> Result<PolyMatrix> {
    f.context().check_same(g.context())?;
    let fc = f.coefficients_in(var)?;
    let gc = g.coefficients_in(var)?;
    let m = fc.len() - 1;
    let n = gc.len() - 1;
    if m == 0 {
        return Err(PolyError::ConstantInVariable(var.to_string()));
    }
    if n == 0 {
        return Err(PolyError::ConstantInVariable(var.to_string()));
    }
    let ctx = f.context();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (shift, count, coeffs) in [(n, m, &fc), (m, n, &gc)] {
        for i in 0..shift {
            let mut row = vec![Polynomial::zero(ctx); size];
            for k in 0..=count {
                row[i + k] = coeffs[count - k].clone();
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Determinant of [`sylvester_matrix`]. With this layout
/// `Res(x - a, x - b) = a - b`.
pub fn sylvester_resultant(f: &Polynomial, g: &Polynomial, var: &str) -> Result<Polynomial> {
    let m = sylvester_matrix(f, g, var)?;
    poly_determinant(f.context(), &m)
}

/// `b^2 - 4ac` for `f = a*var^2 + b*var + c`.
///
/// Relation to the resultant: `Res(f, df/dvar, var) = -a * disc`.
pub fn discriminant(f: &Polynomial, var: &str) -> Result<Polynomial> {
    let c = f.coefficients_in(var)?;
    if c.len() != 3 {
        return Err(PolyError::WrongDegree {
            var: var.to_string(),
            expected: 2,
            found: (c.len() - 1) as u32,
        });
    }
    let four = Rational::from_integer(4.into());
    Ok(&c[1] * &c[1] - (&c[2] * &c[0]).scale(&four))
}
