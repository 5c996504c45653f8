//! Linear identification of the Sacksteder hypersurface
//! `x4 = x1 cos x3 + x2 sin x3` with the Bourgain cubic.
//!
//! The trigonometric equation is made rational by the half-angle
//! substitution `u/v = tan(x3/2)`, then mapped onto
//! `z1 z4^2 + z0 z2 z4 - z0^2 z3` by a linear change of coordinates. Every
//! step carries a certificate that can be replayed.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::cli::expr;
use crate::hypersurface::{Hypersurface, ParamMap, SurfaceError};
use crate::polyring::{
    rat, serialize_rational, PolyError, Polynomial, Rational, Substitution, VarContext,
};
use crate::projgeom::{change_polynomial_coordinates_into, GeomError, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivalenceError {
    #[error("expected variables [{expected}], got [{got}]")]
    WrongContext { expected: String, got: String },
    #[error("term {0} has degree above 1 in the trigonometric symbols c, s")]
    TrigDegree(String),
    #[error("step `{0}` failed to verify")]
    Verification(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

pub type Result<T> = std::result::Result<T, EquivalenceError>;

/// Variables of a trigonometric surface: `c`, `s` stand for `cos x3`, `sin x3`.
pub fn trig_context() -> VarContext {
    VarContext::parse_list("x1,x2,x4,c,s").expect("distinct names")
}

/// Variables after the half-angle substitution.
pub fn rational_context() -> VarContext {
    VarContext::parse_list("x1,x2,x4,u,v").expect("distinct names")
}

/// Affine coordinates of R^4.
pub fn affine_context() -> VarContext {
    VarContext::parse_list("x1,x2,x3,x4").expect("distinct names")
}

fn parse_in(text: &str, ctx: &VarContext) -> Polynomial {
    expr::parse(text, ctx).expect("built-in expression")
}

/// A polynomial in `x1, x2, x4, c, s` with every term of degree at most 1 in
/// `{c, s}` jointly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigSurface {
    poly: Polynomial,
}

impl TrigSurface {
    pub fn new(poly: Polynomial) -> Result<Self> {
        let ctx = trig_context();
        if poly.context() != &ctx {
            return Err(EquivalenceError::WrongContext {
                expected: ctx.to_string(),
                got: poly.context().to_string(),
            });
        }
        for (m, c) in poly.terms() {
            if m.exponent(3) + m.exponent(4) > 1 {
                let term = Polynomial::from_terms(&ctx, [(m.clone(), c.clone())]);
                return Err(EquivalenceError::TrigDegree(term.to_string()));
            }
        }
        Ok(Self { poly })
    }

    /// `x1 c + x2 s - x4`.
    pub fn sacksteder() -> Self {
        Self::new(parse_in("x1*c + x2*s - x4", &trig_context())).expect("linear in c, s")
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }
}

/// Replaces `c` by `v^2 - u^2`, `s` by `2uv`, and multiplies every
/// trig-free term by `u^2 + v^2`. The result is homogeneous of degree 2 in
/// `(u, v)`.
pub fn weierstrass_substitute(ts: &TrigSurface) -> Polynomial {
    let ctx = rational_context();
    let cos = parse_in("v^2 - u^2", &ctx);
    let sin = parse_in("2*u*v", &ctx);
    let one = parse_in("u^2 + v^2", &ctx);
    let mut out = Polynomial::zero(&ctx);
    for (m, c) in ts.poly.terms() {
        let e = m.exponents();
        let head = Polynomial::from_terms(
            &ctx,
            [(
                crate::polyring::Monomial::from_exponents(vec![e[0], e[1], e[2], 0, 0]),
                c.clone(),
            )],
        );
        let factor = match (e[3], e[4]) {
            (1, 0) => &cos,
            (0, 1) => &sin,
            _ => &one,
        };
        out = out + head * factor.clone();
    }
    out
}

/// How the output of a step relates to its transformed input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `transform(input) == output`.
    Identity,
    /// `transform(input) == scalar * output`.
    ScalarMultiple {
        #[serde(serialize_with = "serialize_rational")]
        scalar: Rational,
    },
}

/// The map a step applies to its input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transform {
    /// The polynomial is unchanged; only its written form differs.
    Regroup,
    /// Input variable `i` becomes `sum_j matrix[i][j] * target_j`.
    LinearChange {
        matrix: Matrix,
        target: VarContext,
    },
    /// Variables renamed positionally into `target`, then homogenized by
    /// `var` to `degree`.
    Homogenize {
        target: VarContext,
        var: String,
        degree: u32,
    },
    Weierstrass,
}

impl Transform {
    pub fn apply(&self, input: &Polynomial) -> Result<Polynomial> {
        Ok(match self {
            Transform::Regroup => input.clone(),
            Transform::LinearChange { matrix, target } => {
                change_polynomial_coordinates_into(input, matrix, target)?
            }
            Transform::Homogenize {
                target,
                var,
                degree,
            } => {
                let mut subst = Substitution::new(target);
                let shift = target.len() - input.context().len();
                for (i, name) in input.context().names().iter().enumerate() {
                    subst = subst.try_with(name, Polynomial::var_at(target, i + shift))?;
                }
                input.substitute(&subst)?.homogenize(var, *degree)?
            }
            Transform::Weierstrass => weierstrass_substitute(&TrigSurface::new(input.clone())?),
        })
    }

    fn kind(&self) -> &'static str {
        match self {
            Transform::Regroup => "regroup",
            Transform::LinearChange { .. } => "linear_change",
            Transform::Homogenize { .. } => "homogenize",
            Transform::Weierstrass => "weierstrass",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub name: String,
    #[serde(serialize_with = "serialize_transform")]
    pub transform: Transform,
    pub input: Polynomial,
    pub output: Polynomial,
    pub certificate: Certificate,
}

fn serialize_transform<S: serde::Serializer>(
    t: &Transform,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(t.kind())
}

impl Step {
    /// Applies the transform and records how the result relates to
    /// `output`, or fails when they are not proportional.
    fn certify(
        name: &str,
        transform: Transform,
        input: Polynomial,
        output: Polynomial,
    ) -> Result<Self> {
        let image = transform.apply(&input)?;
        let certificate = match image.equal_up_to_scalar(&output) {
            Some(c) if c.is_one() => Certificate::Identity,
            Some(c) => Certificate::ScalarMultiple { scalar: c },
            None => return Err(EquivalenceError::Verification(name.to_string())),
        };
        Ok(Self {
            name: name.to_string(),
            transform,
            input,
            output,
            certificate,
        })
    }

    /// Re-applies the transform and checks the certificate.
    pub fn verify(&self) -> bool {
        let Ok(image) = self.transform.apply(&self.input) else {
            return false;
        };
        match &self.certificate {
            Certificate::Identity => image == self.output,
            Certificate::ScalarMultiple { scalar } => image == self.output.scale(scalar),
        }
    }
}

/// Applies each step's transform in turn, starting from `p`.
pub fn replay(steps: &[Step], p: &Polynomial) -> Result<Vec<Polynomial>> {
    let mut out = Vec::with_capacity(steps.len());
    let mut cur = p.clone();
    for s in steps {
        cur = s.transform.apply(&cur)?;
        out.push(cur.clone());
    }
    Ok(out)
}

/// From `x1 x4^2 + x2 (x4 - 1) + x3 (x4 - 2)` to the homogeneous cubic in
/// `z0..z4`, through the regrouped form and the coordinate change
/// `x2 + x3 -> x2, x2 + 2 x3 -> x3`.
pub fn bourgain_affine_chain() -> Vec<Step> {
    let ctx = affine_context();
    let original = parse_in("x1*x4^2 + x2*(x4 - 1) + x3*(x4 - 2)", &ctx);
    let regrouped = parse_in("x1*x4^2 + (x2 + x3)*x4 - (x2 + 2*x3)", &ctx);
    let reduced = parse_in("x1*x4^2 + x2*x4 - x3", &ctx);
    // New coordinates in terms of old; the substitution needs the inverse.
    let forward = Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 1, 1, 0], &[0, 1, 2, 0], &[0, 0, 0, 1]])
        .expect("rectangular");
    let backward = forward.inverse().expect("unimodular");
    let z = VarContext::projective();
    let cubic = Hypersurface::bourgain().polynomial().clone();
    [
        Step::certify("regroup", Transform::Regroup, original, regrouped.clone()),
        Step::certify(
            "coordinate change x2 + x3 -> x2, x2 + 2*x3 -> x3",
            Transform::LinearChange {
                matrix: backward,
                target: ctx,
            },
            regrouped,
            reduced.clone(),
        ),
        Step::certify(
            "homogenize by z0",
            Transform::Homogenize {
                target: z,
                var: "z0".into(),
                degree: 3,
            },
            reduced,
            cubic,
        ),
    ]
    .into_iter()
    .collect::<Result<Vec<_>>>()
    .expect("affine chain verifies")
}

/// `z0..z4` as linear forms in `(x1, x2, x4, u, v)`, rows indexed by `z`.
/// `z3_sign` multiplies `x1 + x4`.
fn forward_matrix(z3_sign: i64) -> Matrix {
    Matrix::from_i64(&[
        &[0, 0, 0, 1, 0],
        &[-1, 0, 1, 0, 0],
        &[0, -2, 0, 0, 0],
        &[z3_sign, 0, z3_sign, 0, 0],
        &[0, 0, 0, 0, 1],
    ])
    .expect("rectangular")
}

/// `(x4 + x1) u^2 + (x4 - x1) v^2 - 2 x2 u v`.
pub fn rational_sacksteder() -> Polynomial {
    parse_in(
        "(x4 + x1)*u^2 + (x4 - x1)*v^2 - 2*x2*u*v",
        &rational_context(),
    )
}

/// Chart data for the half-angle substitution. The covering statement is
/// carried as text only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicityNote {
    pub half_angle: String,
    pub chart_bound: String,
    pub excluded_locus: String,
    pub covering: String,
    pub covering_status: String,
}

pub fn periodicity_note() -> PeriodicityNote {
    PeriodicityNote {
        half_angle: "u/v = tan(x3/2), x3 = 2*arctan(u/v)".into(),
        chart_bound: "|x3| < pi".into(),
        excluded_locus: "v = 0".into(),
        covering: "with x3 ranging over all of R, the Sacksteder hypersurface is the standard covering of the Bourgain hypersurface".into(),
        covering_status: "recorded, not machine-checked".into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignCheck {
    /// The sign in `z3 = sign * (x1 + x4)` that was certified.
    pub z3_sign: i64,
    /// `z3 = x1 + x4` as commonly printed reproduces the target cubic.
    pub printed_sign_verifies: bool,
    /// The substituted rational cubic under `z3 = x1 + x4`.
    pub printed_sign_result: Polynomial,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub steps: Vec<Step>,
    pub bourgain_chain: Vec<Step>,
    /// `z_i` as linear forms in `x1, x2, x4, u, v`.
    pub forward_substitution: BTreeMap<String, Polynomial>,
    /// `x1, x2, x4, u, v` as linear forms in `z0..z4`, as applied.
    pub final_substitution: BTreeMap<String, Polynomial>,
    /// Substituted rational cubic equals this scalar times the Bourgain cubic.
    #[serde(serialize_with = "serialize_rational")]
    pub final_scalar: Rational,
    pub sign_check: SignCheck,
    /// Coordinate index sets whose vanishing certifies singular points of
    /// the final cubic.
    pub final_singular_subspaces: Vec<Vec<usize>>,
    pub periodicity: PeriodicityNote,
}

impl EquivalenceReport {
    /// Every step of both chains replays to its certificate.
    pub fn verify(&self) -> bool {
        self.steps
            .iter()
            .chain(&self.bourgain_chain)
            .all(Step::verify)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

fn linear_forms(m: &Matrix, rows: &VarContext, cols: &VarContext) -> BTreeMap<String, Polynomial> {
    rows.names()
        .iter()
        .enumerate()
        .map(|(i, name)| {
            let form = m
                .row(i)
                .iter()
                .enumerate()
                .fold(Polynomial::zero(cols), |acc, (j, c)| {
                    acc + Polynomial::var_at(cols, j).scale(c)
                });
            (name.clone(), form)
        })
        .collect()
}

/// Runs the trigonometric equation through the half-angle substitution and
/// the linear identification with the Bourgain cubic. Both signs of `z3`
/// are tried; the one that certifies is used and the printed sign is
/// reported separately.
pub fn sacksteder_to_bourgain() -> Result<EquivalenceReport> {
    let x = rational_context();
    let z = VarContext::projective();
    let cubic = Hypersurface::bourgain().polynomial().clone();
    let eq22 = rational_sacksteder();

    let half_angle = Step::certify(
        "half-angle substitution",
        Transform::Weierstrass,
        TrigSurface::sacksteder().polynomial().clone(),
        eq22.clone(),
    )?;

    let attempt = |sign: i64| -> Result<(Matrix, Matrix, Polynomial)> {
        let forward = forward_matrix(sign);
        let backward = forward.inverse()?;
        let image = change_polynomial_coordinates_into(&eq22, &backward, &z)?;
        Ok((forward, backward, image))
    };
    let (_, _, printed_image) = attempt(1)?;
    let printed_ok = printed_image.equal_up_to_scalar(&cubic).is_some();
    let sign = if printed_ok { 1 } else { -1 };
    let (forward, backward, _) = attempt(sign)?;

    let identify = Step::certify(
        "linear identification",
        Transform::LinearChange {
            matrix: backward.clone(),
            target: z.clone(),
        },
        eq22,
        cubic.clone(),
    )?;
    let final_scalar = match &identify.certificate {
        Certificate::Identity => rat(1),
        Certificate::ScalarMultiple { scalar } => scalar.clone(),
    };
    debug_assert!(!final_scalar.is_zero());

    let note = if printed_ok {
        "z3 = x1 + x4 reproduces the cubic".to_string()
    } else {
        format!(
            "z3 = x1 + x4 gives {printed_image}, which is not proportional to the cubic; z3 = -(x1 + x4) is used"
        )
    };
    let final_cubic = Hypersurface::new(identify.output.clone())?;

    Ok(EquivalenceReport {
        steps: vec![half_angle, identify],
        bourgain_chain: bourgain_affine_chain(),
        forward_substitution: linear_forms(&forward, &z, &x),
        final_substitution: linear_forms(&backward, &x, &z),
        final_scalar,
        sign_check: SignCheck {
            z3_sign: sign,
            printed_sign_verifies: printed_ok,
            printed_sign_result: printed_image,
            note,
        },
        final_singular_subspaces: final_cubic.certified_singular_subspaces(),
        periodicity: periodicity_note(),
    })
}

/// The rational cubic as a hypersurface in `(x1, x2, x4, u, v)`.
pub fn rational_sacksteder_surface() -> Hypersurface {
    Hypersurface::new(rational_sacksteder()).expect("homogeneous cubic")
}

/// The ruling parametrization `(1, u, v - p u, p v, p)` of the Bourgain
/// cubic carried back to `(x1, x2, x4, u, v)` through the linear
/// identification with sign `z3_sign`.
pub fn rational_sacksteder_parametrization(z3_sign: i64) -> Result<ParamMap> {
    let ctx = VarContext::parse_list("p,u,v").expect("distinct names");
    let zs: Vec<Polynomial> = ["1", "u", "v - p*u", "p*v", "p"]
        .iter()
        .map(|t| parse_in(t, &ctx))
        .collect();
    let backward = forward_matrix(z3_sign).inverse()?;
    let comps = (0..5)
        .map(|i| {
            backward
                .row(i)
                .iter()
                .zip(&zs)
                .fold(Polynomial::zero(&ctx), |acc, (c, zj)| acc + zj.scale(c))
        })
        .collect();
    Ok(ParamMap::new(comps)?)
}
