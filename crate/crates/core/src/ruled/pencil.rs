use crate::hypersurface::{Hypersurface, ParamMap};
use crate::polyring::{rat, Polynomial, VarContext};
use crate::projgeom::Matrix;
use crate::sampling::SampleConfig;

use super::envelope::{conic_polynomial, conic_tangency_map, conic_tangency_point};
use super::focal::generator_map;
use super::steiner::{steiner_construction, torsal_plane_family};
use super::{Result, RuledError};

pub const VERDICT: &str = "torsal: pencils of lines, centers on conic C";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilCheck {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilReport {
    pub checks: Vec<PencilCheck>,
    pub verdict: &'static str,
}

/// Verifies that the rulings `B1 ∧ B2(q)` at fixed `p` form a pencil with
/// center `B1(p)` on the conic inside the plane `tau(p)`.
///
/// Symbolic checks are identities in all parameters; the two rank checks
/// use seeded samples. Any failed check is an error.
pub fn pencil_structure_report(h: &Hypersurface, cfg: &SampleConfig) -> Result<PencilReport> {
    let mut checks = Vec::new();
    let mut record = |name: &'static str, passed: bool| -> Result<()> {
        checks.push(PencilCheck { name, passed });
        if passed {
            Ok(())
        } else {
            Err(RuledError::Verification(name.to_string()))
        }
    };

    record(
        "tangent planes tau(p) lie on the hypersurface",
        h.contains_parametrized(&torsal_plane_family()),
    )?;
    let gen = generator_map();
    record(
        "rulings B1 + lambda*B2 lie on the hypersurface",
        h.contains_parametrized(&gen),
    )?;
    record("B2(p,q) lies in tau(p) for all q", b2_in_tangent_plane()?)?;
    record(
        "pencil centers B1(p) lie on the conic at infinity",
        centers_on_conic()?,
    )?;

    let pts = cfg.nonzero_points(3);
    let mut spans = true;
    let mut distinct_centers = true;
    for s in &pts {
        let (p, q1, q2) = (&s[0], &s[1], &s[2]);
        if q1 == q2 {
            continue;
        }
        let b0 = vec![rat(1), rat(0), rat(0), rat(0), p.clone()];
        let b1 = conic_tangency_point(p).coords().to_vec();
        let at = |q| gen.evaluate(&[p.clone(), q, rat(1)]);
        let z1 = at(q1.clone())?;
        let z2 = at(q2.clone())?;
        spans &= Matrix::new(vec![b0, b1, z1, z2])?.rank() == 3;
        let other = conic_tangency_point(&(p + rat(1)));
        distinct_centers &= other != conic_tangency_point(p);
    }
    record(
        "two rulings at fixed p together with B0 span a 2-plane",
        spans,
    )?;
    record(
        "pencil centers move with p (not a cylinder)",
        distinct_centers,
    )?;
    record(
        "tangent planes sweep out the same cubic",
        steiner_construction().is_ok(),
    )?;

    Ok(PencilReport {
        checks,
        verdict: VERDICT,
    })
}

/// `B2 = q B0 - 1/2 dB1/dp` identically.
fn b2_in_tangent_plane() -> Result<bool> {
    let ctx = VarContext::new(&["p", "q"])?;
    let frame = crate::projgeom::bourgain_frame_symbolic(&ctx)?;
    let b1 = conic_tangency_map(&ctx)?;
    let q = Polynomial::var(&ctx, "q")?;
    Ok((0..5).all(|j| {
        let db1 = b1[j].partial_derivative("p").expect("p");
        let combo = &q * &frame[0][j] - db1.scale(&crate::polyring::ratio(1, 2));
        frame[2][j] == combo && frame[1][j] == b1[j]
    }))
}

fn centers_on_conic() -> Result<bool> {
    let ctx = VarContext::new(&["p"])?;
    let b1 = ParamMap::new(conic_tangency_map(&ctx)?.to_vec())?;
    let conic = Hypersurface::new(conic_polynomial())?;
    let c = b1.components();
    Ok(conic.contains_parametrized(&b1) && c[0].is_zero() && c[4].is_zero())
}
