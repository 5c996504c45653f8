use std::fmt;

use crate::polyring::{
    discriminant, rat, sylvester_resultant, Polynomial, Rational, Result as PolyResult, VarContext,
};
use crate::projgeom::ProjPoint;

use super::{Result, RuledError};

/// One-parameter family of lines `f(param; x) = 0` in a projective plane:
/// `f` is linear in the plane coordinates and polynomial in `param`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineFamily {
    f: Polynomial,
    param: usize,
}

impl LineFamily {
    pub fn new(f: Polynomial, param: &str) -> Result<Self> {
        let param = f.context().require(param)?;
        let linear = f.terms().all(|(m, _)| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != param)
                .map(|(_, e)| e)
                .sum::<u32>()
                == 1
        });
        if !linear || f.is_zero() {
            return Err(RuledError::NotLinear(f.to_string()));
        }
        Ok(Self { f, param })
    }

    /// `p^2 z1 + p z2 - z3` over the variables `p, z1, z2, z3`.
    pub fn tangent_lines() -> Self {
        let ctx = VarContext::new(&["p", "z1", "z2", "z3"]).expect("distinct");
        let v = |i| Polynomial::var_at(&ctx, i);
        let f = &v(0).pow(2) * &v(1) + &v(0) * &v(2) - v(3);
        Self::new(f, "p").expect("linear family")
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.f
    }

    pub fn param(&self) -> &str {
        self.f.context().name(self.param)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnvelopeMethod {
    Discriminant,
    Resultant,
}

impl fmt::Display for EnvelopeMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnvelopeMethod::Discriminant => "discriminant",
            EnvelopeMethod::Resultant => "resultant",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Envelope {
    pub polynomial: Polynomial,
    pub method: EnvelopeMethod,
}

/// Eliminates the family parameter between `f` and `df/dparam`.
///
/// Quadratic families use the discriminant directly. Higher degrees take
/// the Sylvester resultant and strip its content. Linear families are
/// pencils through a point and have no envelope curve.
pub fn envelope(lf: &LineFamily) -> Result<Envelope> {
    let param = lf.param().to_string();
    let deg = lf.f.degree_in(&param)?;
    match deg {
        0 => Err(RuledError::ConstantInParameter(param)),
        1 => Err(RuledError::PencilFamily(param)),
        2 => Ok(Envelope {
            polynomial: discriminant(&lf.f, &param)?,
            method: EnvelopeMethod::Discriminant,
        }),
        _ => {
            let df = lf.f.partial_derivative(&param)?;
            let res = sylvester_resultant(&lf.f, &df, &param)?;
            Ok(Envelope {
                polynomial: res.primitive_part(),
                method: EnvelopeMethod::Resultant,
            })
        }
    }
}

/// `z2^2 + 4 z1 z3` over `z0..z4`.
pub fn conic_polynomial() -> Polynomial {
    let ctx = VarContext::projective();
    let z = |i| Polynomial::var_at(&ctx, i);
    z(2).pow(2) + (&z(1) * &z(3)).scale(&rat(4))
}

/// Point where the line of parameter `p` touches the conic:
/// `(0, 1, -2p, -p^2, 0)`.
pub fn conic_tangency_point(p: &Rational) -> ProjPoint {
    ProjPoint::new([rat(0), rat(1), -(p * rat(2)), -(p * p), rat(0)])
        .expect("second coordinate is 1")
}

/// Symbolic tangency point, with `p` a variable of `ctx`.
pub fn conic_tangency_map(ctx: &VarContext) -> PolyResult<[Polynomial; 5]> {
    let p = Polynomial::var(ctx, "p")?;
    let zero = Polynomial::zero(ctx);
    Ok([
        zero.clone(),
        Polynomial::one(ctx),
        p.scale(&rat(-2)),
        -p.pow(2),
        zero,
    ])
}
