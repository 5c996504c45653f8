use super::{PolyError, Polynomial, Result, VarContext};

/// Dense matrix with polynomial entries, all in one context.
pub type PolyMatrix = Vec<Vec<Polynomial>>;

fn check_square(m: &[Vec<Polynomial>]) -> Result<usize> {
    let n = m.len();
    match m.iter().find(|row| row.len() != n) {
        Some(row) => Err(PolyError::NotSquare {
            rows: n,
            cols: row.len(),
        }),
        None => Ok(n),
    }
}

/// Determinant by cofactor expansion. Each step expands along the row
/// with the most zero entries; sizes here stay at or below 6.
pub fn poly_determinant(ctx: &VarContext, m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = check_square(m)?;
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    Ok(minor_det(ctx, m, &rows, &cols))
}

fn minor_det(
    ctx: &VarContext,
    m: &[Vec<Polynomial>],
    rows: &[usize],
    cols: &[usize],
) -> Polynomial {
    match rows.len() {
        0 => return Polynomial::one(ctx),
        1 => return m[rows[0]][cols[0]].clone(),
        _ => {}
    }
    let (pivot_pos, _) = rows
        .iter()
        .enumerate()
        .max_by_key(|(_, &r)| cols.iter().filter(|&&c| m[r][c].is_zero()).count())
        .expect("nonempty");
    let r = rows[pivot_pos];
    let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
    let mut acc = Polynomial::zero(ctx);
    for (j, &c) in cols.iter().enumerate() {
        let entry = &m[r][c];
        if entry.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &minor_det(ctx, m, &sub_rows, &sub_cols);
        if (pivot_pos + j) % 2 == 0 {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    acc
}

/// Adjugate (transposed cofactor matrix), so `m * adj(m) = det(m) * I`.
pub fn poly_adjugate(ctx: &VarContext, m: &[Vec<Polynomial>]) -> Result<PolyMatrix> {
    let n = check_square(m)?;
    let mut adj = vec![vec![Polynomial::zero(ctx); n]; n];
    for i in 0..n {
        for j in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&r| r != i).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let minor = minor_det(ctx, m, &rows, &cols);
            adj[j][i] = if (i + j) % 2 == 0 { minor } else { -minor };
        }
    }
    Ok(adj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    #[test]
    fn determinant_and_adjugate_of_symbolic_2x2() {
        let ctx = VarContext::new(&["a", "b", "c", "d"]).unwrap();
        let [a, b, c, d] = ["a", "b", "c", "d"].map(|n| Polynomial::var(&ctx, n).unwrap());
        let m = vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]];
        assert_eq!(poly_determinant(&ctx, &m).unwrap(), &a * &d - &b * &c);
        let adj = poly_adjugate(&ctx, &m).unwrap();
        assert_eq!(adj, vec![vec![d, -b], vec![-c, a]]);
    }

    #[test]
    fn upper_triangular_determinant_is_diagonal_product() {
        let ctx = VarContext::new(&["t"]).unwrap();
        let t = Polynomial::var(&ctx, "t").unwrap();
        let k = |n| Polynomial::constant(&ctx, rat(n));
        let m = vec![
            vec![t.clone(), k(5), k(-1)],
            vec![k(0), k(2), t.clone()],
            vec![k(0), k(0), t.clone()],
        ];
        assert_eq!(
            poly_determinant(&ctx, &m).unwrap(),
            (&t * &t).scale(&rat(2))
        );
    }

    #[test]
    fn non_square_is_rejected() {
        let ctx = VarContext::new(&["t"]).unwrap();
        let m = vec![vec![Polynomial::one(&ctx); 2]];
        assert!(matches!(
            poly_determinant(&ctx, &m),
            Err(PolyError::NotSquare { rows: 1, cols: 2 })
        ));
    }
}
