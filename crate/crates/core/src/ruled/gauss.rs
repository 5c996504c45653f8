use crate::hypersurface::{Hypersurface, ParamMap};
use crate::polyring::{Polynomial, Rational, Substitution};
use crate::projgeom::Matrix;
use crate::sampling::SampleConfig;

use super::{Result, RuledError};

/// Gradient of a hypersurface composed with a parametrization of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussImage(ParamMap);

impl GaussImage {
    pub fn map(&self) -> &ParamMap {
        &self.0
    }
}

pub fn gauss_map(h: &Hypersurface, pm: &ParamMap) -> Result<GaussImage> {
    let residual = h.pullback(pm);
    if !residual.is_zero() {
        return Err(RuledError::NotContained(residual.to_string()));
    }
    let mut subst = Substitution::new(pm.context());
    for (name, c) in h.context().names().iter().zip(pm.components()) {
        subst = subst.with(name, c.clone());
    }
    let comps = h
        .gradient()
        .iter()
        .map(|g| g.substitute(&subst))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    // A map into the singular locus has a zero image and is rejected here.
    Ok(GaussImage(ParamMap::new(comps)?))
}

/// `5 x k` matrix: entry `(i, j)` is the derivative of component `i` by
/// parameter `j`.
pub fn jacobian(pm: &ParamMap) -> Vec<Vec<Polynomial>> {
    pm.components()
        .iter()
        .map(|c| {
            (0..pm.context().len())
                .map(|j| c.derivative_at(j))
                .collect()
        })
        .collect()
}

/// Jacobian columns evaluated at `t`, one vector per parameter.
pub fn jacobian_at(pm: &ParamMap, t: &[Rational]) -> Result<Vec<Vec<Rational>>> {
    let jac = jacobian(pm);
    (0..pm.context().len())
        .map(|j| {
            jac.iter()
                .map(|row| row[j].evaluate(t).map_err(Into::into))
                .collect()
        })
        .collect()
}

/// `rank([image | Jacobian]) - 1` at `t`, or `None` when the image
/// vector vanishes there.
pub fn projective_rank_at(pm: &ParamMap, t: &[Rational]) -> Result<Option<usize>> {
    let image = pm.evaluate(t)?;
    if image.iter().all(num_traits::Zero::is_zero) {
        return Ok(None);
    }
    let mut cols = vec![image];
    cols.extend(jacobian_at(pm, t)?);
    Ok(Some(Matrix::new(cols)?.rank() - 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub rank: usize,
    pub per_sample: Vec<Option<usize>>,
    pub config: SampleConfig,
}

/// Maximum projective rank over the seeded sample points.
pub fn generic_rank(target: &ParamMap, cfg: &SampleConfig) -> Result<RankReport> {
    let points = cfg.points(target.context().len());
    let per_sample = points
        .iter()
        .map(|t| projective_rank_at(target, t))
        .collect::<Result<Vec<_>>>()?;
    let rank = per_sample
        .iter()
        .flatten()
        .copied()
        .max()
        .ok_or(RuledError::AllSamplesDegenerate(points.len()))?;
    Ok(RankReport {
        rank,
        per_sample,
        config: *cfg,
    })
}

impl GaussImage {
    pub fn generic_rank(&self, cfg: &SampleConfig) -> Result<RankReport> {
        generic_rank(&self.0, cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{rat, VarContext};

    fn vars(names: &[&str]) -> (VarContext, Vec<Polynomial>) {
        let ctx = VarContext::new(names).unwrap();
        let v = names
            .iter()
            .map(|n| Polynomial::var(&ctx, n).unwrap())
            .collect();
        (ctx, v)
    }

    fn z(i: usize) -> Polynomial {
        Polynomial::var_at(&VarContext::projective(), i)
    }

    fn eq5() -> ParamMap {
        let (ctx, v) = vars(&["p", "u", "v"]);
        let (p, u, w) = (&v[0], &v[1], &v[2]);
        ParamMap::new(vec![
            Polynomial::one(&ctx),
            u.clone(),
            w - &(p * u),
            p * w,
            p.clone(),
        ])
        .unwrap()
    }

    fn cylinder() -> (Hypersurface, ParamMap) {
        let h = Hypersurface::new(z(1).pow(2) - &z(0) * &z(4)).unwrap();
        let (ctx, v) = vars(&["t", "u", "v"]);
        let pm = ParamMap::new(vec![
            Polynomial::one(&ctx),
            v[0].clone(),
            v[1].clone(),
            v[2].clone(),
            v[0].pow(2),
        ])
        .unwrap();
        (h, pm)
    }

    fn quadric() -> (Hypersurface, ParamMap) {
        let h = Hypersurface::new(&z(0) * &z(4) - z(1).pow(2) - z(2).pow(2) - z(3).pow(2)).unwrap();
        let (ctx, v) = vars(&["a", "b", "c"]);
        let s = v[0].pow(2) + v[1].pow(2) + v[2].pow(2);
        let pm = ParamMap::new(vec![
            Polynomial::one(&ctx),
            v[0].clone(),
            v[1].clone(),
            v[2].clone(),
            s,
        ])
        .unwrap();
        (h, pm)
    }

    #[test]
    fn gauss_image_of_the_cubic() {
        let gi = gauss_map(&Hypersurface::bourgain(), &eq5()).unwrap();
        let (_, v) = vars(&["p", "u", "v"]);
        let (p, u, w) = (&v[0], &v[1], &v[2]);
        let s = &(p * u) + w;
        let one = Polynomial::one(p.context());
        assert_eq!(
            gi.map().components(),
            &[-(p * &s), p.pow(2), p.clone(), -one, s.clone()]
        );
    }

    #[test]
    fn gauss_image_of_cylinder() {
        let (h, pm) = cylinder();
        let gi = gauss_map(&h, &pm).unwrap();
        let t = Polynomial::var(pm.context(), "t").unwrap();
        let zero = Polynomial::zero(pm.context());
        let one = Polynomial::one(pm.context());
        assert_eq!(
            gi.map().components(),
            &[-t.pow(2), t.scale(&rat(2)), zero.clone(), zero, -one]
        );
    }

    #[test]
    fn gauss_map_into_singular_locus_is_rejected() {
        let h = Hypersurface::new(z(0).pow(2)).unwrap();
        let (ctx, v) = vars(&["a", "b"]);
        let zero = Polynomial::zero(&ctx);
        let pm = ParamMap::new(vec![
            zero.clone(),
            v[0].clone(),
            v[1].clone(),
            zero.clone(),
            zero,
        ])
        .unwrap();
        // Image (2*0, 0, 0, 0, 0) is identically zero.
        assert_eq!(
            gauss_map(&h, &pm).unwrap_err(),
            RuledError::Surface(crate::hypersurface::SurfaceError::ZeroMap)
        );
    }

    #[test]
    fn not_contained_is_an_error() {
        let (ctx, v) = vars(&["p", "u", "v"]);
        let pm = ParamMap::new(vec![
            Polynomial::one(&ctx),
            v[1].clone(),
            v[2].clone(),
            Polynomial::zero(&ctx),
            v[0].clone(),
        ])
        .unwrap();
        assert!(matches!(
            gauss_map(&Hypersurface::bourgain(), &pm),
            Err(RuledError::NotContained(_))
        ));
    }

    #[test]
    fn jacobian_of_eq5() {
        let pm = eq5();
        let cols = jacobian_at(&pm, &[rat(2), rat(3), rat(5)]).unwrap();
        assert_eq!(cols[0], [0, 0, -3, 5, 1].map(rat));
        assert_eq!(cols[1], [0, 1, -2, 0, 0].map(rat));
        assert_eq!(cols[2], [0, 0, 1, 2, 0].map(rat));
        let (ctx, _) = vars(&["s"]);
        let k = Polynomial::one(&ctx);
        let constant = ParamMap::new(vec![k.clone(), k.clone(), k.clone(), k.clone(), k]).unwrap();
        assert!(jacobian(&constant)
            .iter()
            .flatten()
            .all(Polynomial::is_zero));
    }

    #[test]
    fn rank_triple() {
        let cfg = SampleConfig::default();
        let gi = gauss_map(&Hypersurface::bourgain(), &eq5()).unwrap();
        assert_eq!(gi.generic_rank(&cfg).unwrap().rank, 2);
        let (h, pm) = cylinder();
        assert_eq!(
            gauss_map(&h, &pm).unwrap().generic_rank(&cfg).unwrap().rank,
            1
        );
        let (h, pm) = quadric();
        assert_eq!(
            gauss_map(&h, &pm).unwrap().generic_rank(&cfg).unwrap().rank,
            3
        );
    }

    #[test]
    fn rank_at_the_unit_point() {
        let gi = gauss_map(&Hypersurface::bourgain(), &eq5()).unwrap();
        assert_eq!(
            projective_rank_at(gi.map(), &[rat(1), rat(1), rat(1)]).unwrap(),
            Some(2)
        );
    }

    #[test]
    fn dummy_parameter_leaves_rank_unchanged() {
        let gi = gauss_map(&Hypersurface::bourgain(), &eq5()).unwrap();
        let wider = gi.map().context().extended(&["w"]).unwrap();
        let comps: Vec<Polynomial> = gi
            .map()
            .components()
            .iter()
            .map(|c| c.reembed(&wider).unwrap())
            .collect();
        let padded = ParamMap::new(comps).unwrap();
        let cfg = SampleConfig::default();
        assert_eq!(
            generic_rank(&padded, &cfg).unwrap().rank,
            gi.generic_rank(&cfg).unwrap().rank
        );
    }

    #[test]
    fn degenerate_samples_error() {
        let (ctx, v) = vars(&["t"]);
        let zero = Polynomial::zero(&ctx);
        // Vanishes only at t = 0; a single-sample config forced there.
        let pm = ParamMap::new(vec![
            v[0].clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            zero,
        ])
        .unwrap();
        assert_eq!(projective_rank_at(&pm, &[rat(0)]).unwrap(), None);
        let cfg = SampleConfig::default().with_count(0);
        assert_eq!(
            generic_rank(&pm, &cfg).unwrap_err(),
            RuledError::AllSamplesDegenerate(0)
        );
    }
}
