use crate::hypersurface::{Hypersurface, ParamMap, SurfaceError};
use crate::polyring::univariate::UniPoly;
use crate::polyring::{poly_determinant, Polynomial, Rational, Substitution, VarContext};
use crate::projgeom::{bourgain_frame_symbolic, symbolic_inverse, ProjPoint};

use super::envelope::conic_polynomial;
use super::{Result, RuledError};

pub const CHART_NOTE: &str =
    "lambda is the affine coordinate of Z = B1 + lambda*B2 on the ruling; \
the point B2 (lambda = infinity) lies outside this chart and is not examined";

/// `Z = B1 + lambda * B2` in the coordinates `z0..z4`, over `(p, q, lambda)`.
pub fn generator_map() -> ParamMap {
    let ctx = VarContext::new(&["p", "q", "lambda"]).expect("distinct");
    let frame = bourgain_frame_symbolic(&ctx).expect("p and q present");
    let lambda = Polynomial::var(&ctx, "lambda").expect("present");
    let comps = (0..5)
        .map(|j| &frame[1][j] + &(&lambda * &frame[2][j]))
        .collect();
    ParamMap::new(comps).expect("B1 has a unit coordinate")
}

/// Linear system on `(dp, dq)` whose nontrivial solutions mark focal
/// points of the ruling through `Z`.
///
/// Row 0 is the `B0` coefficient of `dZ` modulo `B1, B2`; row 1 the
/// coefficient of `B3 + q B4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FocalSystem {
    pub matrix: [[Polynomial; 2]; 2],
    pub determinant: Polynomial,
}

/// Differentiates `Z = B1 + lambda B2`, rewrites `dZ` in the moving frame
/// through the symbolic inverse frame, and reads off the coefficients.
///
/// Fails unless the `B4` row is `q` times the `B3` row and the entries are
/// free of `p`, which is how the system comes out for the standard frame.
pub fn focal_system() -> Result<FocalSystem> {
    let frame_coords = differential_in_frame()?;
    let ctx = frame_coords[0][0].context().clone();
    let q = Polynomial::var(&ctx, "q")?;
    for k in 0..2 {
        if frame_coords[k][4] != &q * &frame_coords[k][3] {
            return Err(RuledError::Verification(format!(
                "B4 coefficient {} is not q times the B3 coefficient {}",
                frame_coords[k][4], frame_coords[k][3]
            )));
        }
    }
    let out_ctx = VarContext::new(&["q", "lambda"])?;
    let entry = |row: usize, col: usize| frame_coords[col][row].reembed(&out_ctx);
    let matrix = [[entry(0, 0)?, entry(0, 1)?], [entry(3, 0)?, entry(3, 1)?]];
    let rows: Vec<Vec<Polynomial>> = matrix.iter().map(|r| r.to_vec()).collect();
    let determinant = poly_determinant(&out_ctx, &rows)?;
    Ok(FocalSystem {
        matrix,
        determinant,
    })
}

/// `[dZ/dp, dZ/dq]` as coordinates in `B0..B4`, over `(p, q, lambda)`.
fn differential_in_frame() -> Result<[Vec<Polynomial>; 2]> {
    let z = generator_map();
    let ctx = z.context().clone();
    let frame = bourgain_frame_symbolic(&ctx)?;
    let inv = symbolic_inverse(&ctx, &frame)?;
    let to_frame = |v: &[Polynomial]| -> Vec<Polynomial> {
        // z = sum_i v_i A_i and A_i = sum_j inv[i][j] B_j.
        (0..5)
            .map(|j| {
                v.iter()
                    .enumerate()
                    .fold(Polynomial::zero(&ctx), |acc, (i, vi)| acc + vi * &inv[i][j])
            })
            .collect()
    };
    let d = |k: usize| -> Vec<Polynomial> {
        z.components().iter().map(|c| c.derivative_at(k)).collect()
    };
    Ok([to_frame(&d(0)), to_frame(&d(1))])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FocalRoot {
    pub lambda: Rational,
    pub multiplicity: u32,
    pub point: ProjPoint,
    pub at_infinity: bool,
    pub on_conic: bool,
    pub singular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FocalReport {
    pub p: Rational,
    pub q: Rational,
    /// The focal determinant at this `(p, q)`, a polynomial in `lambda`.
    pub determinant: Polynomial,
    pub roots: Vec<FocalRoot>,
    /// Factor without rational roots left after dividing them out.
    pub residual: Polynomial,
    pub chart_note: &'static str,
}

/// Focal points on the ruling `B1(p) ∧ B2(p, q)`.
///
/// The roots are those of the gcd of all 2x2 minors of the `B0, B3, B4`
/// coefficient block of `dZ`. Each root is mapped back to its point and
/// checked against `h`.
pub fn focal_points_on_generator(
    h: &Hypersurface,
    p: &Rational,
    q: &Rational,
) -> Result<FocalReport> {
    let gen = generator_map();
    let lctx = VarContext::new(&["lambda"])?;
    let lambda = Polynomial::var(&lctx, "lambda")?;
    let line = Substitution::new(&lctx)
        .with("p", Polynomial::constant(&lctx, p.clone()))
        .with("q", Polynomial::constant(&lctx, q.clone()))
        .with("lambda", lambda);
    let ruling = ParamMap::new(
        gen.components()
            .iter()
            .map(|c| c.substitute(&line))
            .collect::<std::result::Result<Vec<_>, _>>()?,
    )?;
    let residual = h.pullback(&ruling);
    if !residual.is_zero() {
        return Err(RuledError::NotContained(residual.to_string()));
    }

    let [dp, dq] = differential_in_frame()?;
    let block: Vec<[UniPoly; 2]> = [0usize, 3, 4]
        .iter()
        .map(|&row| {
            let restrict = |c: &Polynomial| -> Result<UniPoly> {
                Ok(UniPoly::from_polynomial(&c.substitute(&line)?, "lambda")?)
            };
            Ok([restrict(&dp[row])?, restrict(&dq[row])?])
        })
        .collect::<Result<_>>()?;
    let minor = |a: usize, b: usize| -> UniPoly {
        let lhs = mul(&block[a][0], &block[b][1]);
        let rhs = mul(&block[a][1], &block[b][0]);
        sub(&lhs, &rhs)
    };
    let det = minor(0, 1);
    let focal = [minor(0, 2), minor(1, 2)]
        .iter()
        .fold(det.clone(), |g, m| g.gcd(m));

    let (found, rest) = focal.rational_roots();
    let conic = conic_polynomial();
    let mut roots = Vec::with_capacity(found.len());
    for (l, multiplicity) in found {
        let coords = ruling.evaluate(std::slice::from_ref(&l))?;
        let point = ProjPoint::from_slice(&coords)?;
        let singular = matches!(
            h.tangent_hyperplane(&point),
            Err(SurfaceError::SingularPoint { .. })
        );
        roots.push(FocalRoot {
            lambda: l,
            multiplicity,
            at_infinity: coords[0] == Rational::from_integer(0.into())
                && coords[4] == Rational::from_integer(0.into()),
            on_conic: num_traits::Zero::is_zero(&conic.evaluate(&coords)?),
            singular,
            point,
        });
    }
    Ok(FocalReport {
        p: p.clone(),
        q: q.clone(),
        determinant: det.to_polynomial(&lctx, "lambda")?,
        roots,
        residual: rest.to_polynomial(&lctx, "lambda")?,
        chart_note: CHART_NOTE,
    })
}

fn mul(a: &UniPoly, b: &UniPoly) -> UniPoly {
    if a.is_zero() || b.is_zero() {
        return UniPoly::new(vec![]);
    }
    let mut out = vec![Rational::from_integer(0.into()); a.coeffs().len() + b.coeffs().len() - 1];
    for (i, x) in a.coeffs().iter().enumerate() {
        for (j, y) in b.coeffs().iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    UniPoly::new(out)
}

fn sub(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let n = a.coeffs().len().max(b.coeffs().len());
    let zero = Rational::from_integer(0.into());
    let out = (0..n)
        .map(|i| a.coeffs().get(i).unwrap_or(&zero) - b.coeffs().get(i).unwrap_or(&zero))
        .collect();
    UniPoly::new(out)
}
