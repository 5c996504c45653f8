//! Hypersurfaces of P^4 cut out by one homogeneous polynomial.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::polyring::{rat, PolyError, Polynomial, Rational, Substitution, VarContext};
use crate::projgeom::{GeomError, ProjPoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("hypersurface needs 5 coordinates, context [{0}] has {1}")]
    WrongArity(String, usize),
    #[error("defining polynomial is zero")]
    Zero,
    #[error("not homogeneous of degree {degree}; offending terms: {}", offending.join(", "))]
    NotHomogeneous { degree: u32, offending: Vec<String> },
    #[error("parametrization needs 5 components, got {0}")]
    ParamArity(usize),
    #[error("parametrization components are all zero")]
    ZeroMap,
    #[error("point {0} is not on the hypersurface")]
    NotOnSurface(String),
    #[error("point {point} is singular: the gradient vanishes")]
    SingularPoint { point: Box<ProjPoint> },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

pub type Result<T> = std::result::Result<T, SurfaceError>;

/// Zero set of a nonzero homogeneous polynomial in five coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypersurface {
    f: Polynomial,
    degree: u32,
}

impl Hypersurface {
    /// Takes the degree from the leading term and rejects every term of
    /// another degree.
    pub fn new(f: Polynomial) -> Result<Self> {
        let degree = f.total_degree();
        Self::with_degree(f, degree)
    }

    pub fn with_degree(f: Polynomial, degree: u32) -> Result<Self> {
        let ctx = f.context();
        if ctx.len() != 5 {
            return Err(SurfaceError::WrongArity(ctx.to_string(), ctx.len()));
        }
        if f.is_zero() {
            return Err(SurfaceError::Zero);
        }
        let offending: Vec<String> = f
            .terms()
            .filter(|(m, _)| m.degree() != degree)
            .map(|(m, c)| Polynomial::from_terms(ctx, [(m.clone(), c.clone())]).to_string())
            .collect();
        if !offending.is_empty() {
            return Err(SurfaceError::NotHomogeneous { degree, offending });
        }
        Ok(Self { f, degree })
    }

    /// `z1 z4^2 + z0 z2 z4 - z0^2 z3` in the coordinates `z0..z4`.
    pub fn bourgain() -> Self {
        let ctx = VarContext::projective();
        let z = |i| Polynomial::var_at(&ctx, i);
        let f = &z(1) * &z(4).pow(2) + &z(0) * &z(2) * &z(4) - &z(0).pow(2) * &z(3);
        Self::new(f).expect("homogeneous cubic")
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn context(&self) -> &VarContext {
        self.f.context()
    }

    pub fn gradient(&self) -> [Polynomial; 5] {
        std::array::from_fn(|i| self.f.derivative_at(i))
    }

    /// Generators of the ideal whose zero set is the singular locus.
    pub fn singular_locus_generators(&self) -> [Polynomial; 5] {
        self.gradient()
    }

    /// True when every generator vanishes identically on the coordinate
    /// subspace `{z_i = 0 : i in zero_coords}`, the remaining coordinates
    /// kept symbolic.
    pub fn singular_on_coordinate_subspace(&self, zero_coords: &[usize]) -> bool {
        let ctx = self.context();
        let mut subst = Substitution::identity(ctx);
        for &i in zero_coords {
            subst = subst.with(ctx.name(i), Polynomial::zero(ctx));
        }
        self.singular_locus_generators()
            .iter()
            .all(|g| g.substitute(&subst).is_ok_and(|r| r.is_zero()))
    }

    /// Minimal coordinate subspaces (as lists of vanishing coordinates)
    /// on which the whole gradient vanishes identically. The full
    /// coordinate set (the empty subspace) is never reported.
    pub fn certified_singular_subspaces(&self) -> Vec<Vec<usize>> {
        let mut found: Vec<Vec<usize>> = Vec::new();
        let mut masks: Vec<u32> = (1..31).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        for mask in masks {
            let coords: Vec<usize> = (0..5).filter(|i| mask & (1 << i) != 0).collect();
            if found.iter().any(|f| f.iter().all(|i| coords.contains(i))) {
                continue;
            }
            if self.singular_on_coordinate_subspace(&coords) {
                found.push(coords);
            }
        }
        found
    }

    pub fn gradient_at(&self, pt: &ProjPoint) -> [Rational; 5] {
        let g = self.gradient();
        std::array::from_fn(|i| g[i].evaluate(pt.coords()).expect("five coordinates"))
    }

    pub fn contains_point(&self, pt: &ProjPoint) -> bool {
        self.f
            .evaluate(pt.coords())
            .expect("five coordinates")
            .is_zero()
    }

    /// `f` composed with the parametrization.
    pub fn pullback(&self, pm: &ParamMap) -> Polynomial {
        let mut subst = Substitution::new(pm.context());
        for (name, c) in self.context().names().iter().zip(pm.components()) {
            subst = subst.with(name, c.clone());
        }
        self.f
            .substitute(&subst)
            .expect("every coordinate assigned")
    }

    /// The map lands in the hypersurface identically in its parameters.
    pub fn contains_parametrized(&self, pm: &ParamMap) -> bool {
        self.pullback(pm).is_zero()
    }

    /// The gradient at `pt` as dual coordinates of the tangent hyperplane.
    pub fn tangent_hyperplane(&self, pt: &ProjPoint) -> Result<ProjPoint> {
        if !self.contains_point(pt) {
            return Err(SurfaceError::NotOnSurface(pt.to_string()));
        }
        ProjPoint::new(self.gradient_at(pt)).map_err(|_| SurfaceError::SingularPoint {
            point: Box::new(pt.clone()),
        })
    }

    /// `sum_i z_i df/dz_i - deg * f`; zero for every homogeneous `f`.
    pub fn euler_defect(&self) -> Polynomial {
        let ctx = self.context();
        let sum = self
            .gradient()
            .iter()
            .enumerate()
            .fold(Polynomial::zero(ctx), |acc, (i, g)| {
                acc + &Polynomial::var_at(ctx, i) * g
            });
        sum - self.f.scale(&rat(self.degree as i64))
    }
}

impl fmt::Display for Hypersurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0", self.f)
    }
}

/// Five polynomials in shared parameters: a map from parameter space to P^4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamMap {
    ctx: VarContext,
    components: [Polynomial; 5],
}

impl ParamMap {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let n = components.len();
        let components: [Polynomial; 5] = components
            .try_into()
            .map_err(|_| SurfaceError::ParamArity(n))?;
        let ctx = components[0].context().clone();
        for c in &components[1..] {
            if c.context() != &ctx {
                return Err(PolyError::ContextMismatch {
                    left: ctx.to_string(),
                    right: c.context().to_string(),
                }
                .into());
            }
        }
        if components.iter().all(Polynomial::is_zero) {
            return Err(SurfaceError::ZeroMap);
        }
        Ok(Self { ctx, components })
    }

    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    pub fn params(&self) -> &[String] {
        self.ctx.names()
    }

    pub fn components(&self) -> &[Polynomial; 5] {
        &self.components
    }

    pub fn evaluate(&self, t: &[Rational]) -> Result<Vec<Rational>> {
        self.components
            .iter()
            .map(|c| c.evaluate(t).map_err(SurfaceError::from))
            .collect()
    }

    /// The image point, or `None` where every component vanishes.
    pub fn point(&self, t: &[Rational]) -> Result<Option<ProjPoint>> {
        let v = self.evaluate(t)?;
        Ok(ProjPoint::from_slice(&v).ok())
    }
}

impl fmt::Display for ParamMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::SampleConfig;

    fn z(i: usize) -> Polynomial {
        Polynomial::var_at(&VarContext::projective(), i)
    }

    fn pt(c: [i64; 5]) -> ProjPoint {
        ProjPoint::new(c.map(rat)).unwrap()
    }

    fn quadric() -> Hypersurface {
        Hypersurface::new(&z(0) * &z(4) - z(1).pow(2) - z(2).pow(2) - z(3).pow(2)).unwrap()
    }

    fn eq5() -> ParamMap {
        let ctx = VarContext::new(&["p", "u", "v"]).unwrap();
        let [p, u, v] = ["p", "u", "v"].map(|n| Polynomial::var(&ctx, n).unwrap());
        ParamMap::new(vec![
            Polynomial::one(&ctx),
            u.clone(),
            &v - &(&p * &u),
            &p * &v,
            p,
        ])
        .unwrap()
    }

    #[test]
    fn gradient_of_the_cubic() {
        let g = Hypersurface::bourgain().gradient();
        assert_eq!(g[0], &z(2) * &z(4) - (&z(0) * &z(3)).scale(&rat(2)));
        assert_eq!(g[1], z(4).pow(2));
        assert_eq!(g[2], &z(0) * &z(4));
        assert_eq!(g[3], -z(0).pow(2));
        assert_eq!(g[4], (&z(1) * &z(4)).scale(&rat(2)) + &z(0) * &z(2));
    }

    #[test]
    fn gradient_of_controls() {
        let double = Hypersurface::new(z(0).pow(2)).unwrap();
        let g = double.gradient();
        assert_eq!(g[0], z(0).scale(&rat(2)));
        assert!(g[1..].iter().all(Polynomial::is_zero));
        let q = quadric().gradient();
        assert_eq!(
            q,
            [
                z(4),
                z(1).scale(&rat(-2)),
                z(2).scale(&rat(-2)),
                z(3).scale(&rat(-2)),
                z(0)
            ]
        );
    }

    #[test]
    fn singular_plane_at_infinity() {
        let h = Hypersurface::bourgain();
        assert!(h.singular_on_coordinate_subspace(&[0, 4]));
        assert!(!h.singular_on_coordinate_subspace(&[0]));
        assert_eq!(h.certified_singular_subspaces(), vec![vec![0, 4]]);
        assert_eq!(
            h.gradient_at(&pt([1, 1, 0, 1, 1])),
            [-2, 1, 1, -1, 2].map(rat)
        );
    }

    #[test]
    fn smooth_quadric_has_only_the_trivial_zero() {
        let q = quadric();
        assert!(q.certified_singular_subspaces().is_empty());
        // The generators are linear forms; their coefficient matrix has full rank.
        let rows: Vec<Vec<Rational>> = q
            .singular_locus_generators()
            .iter()
            .map(|g| {
                (0..5)
                    .map(|j| g.coefficient(&z(j).terms().next().unwrap().0.clone()))
                    .collect()
            })
            .collect();
        assert_eq!(crate::projgeom::Matrix::new(rows).unwrap().rank(), 5);
    }

    #[test]
    fn point_membership() {
        let h = Hypersurface::bourgain();
        for t in [-3, 0, 2, 7] {
            assert!(h.contains_point(&pt([1, 0, 0, 0, t])));
        }
        for (a, b, c) in [(1, 2, 3), (-4, 0, 5)] {
            assert!(h.contains_point(&pt([0, a, b, c, 0])));
        }
        assert!(!h.contains_point(&pt([1, 1, 1, 1, 1])));
        assert_eq!(
            h.polynomial().evaluate(&[1, 1, 1, 1, 1].map(rat)).unwrap(),
            rat(1)
        );
    }

    #[test]
    fn parametrized_membership() {
        let h = Hypersurface::bourgain();
        assert!(h.contains_parametrized(&eq5()));
        let ctx = VarContext::new(&["alpha", "beta", "gamma", "p"]).unwrap();
        let [a, b, g, p] =
            ["alpha", "beta", "gamma", "p"].map(|n| Polynomial::var(&ctx, n).unwrap());
        let eq12 = ParamMap::new(vec![
            a.clone(),
            b.clone(),
            &g - &(&p * &b).scale(&rat(2)),
            &p * &(&g - &(&p * &b)),
            &p * &a,
        ])
        .unwrap();
        assert!(h.contains_parametrized(&eq12));

        let pc = VarContext::new(&["p", "u", "v"]).unwrap();
        let [p, u, v] = ["p", "u", "v"].map(|n| Polynomial::var(&pc, n).unwrap());
        let bad = ParamMap::new(vec![
            Polynomial::one(&pc),
            u.clone(),
            v.clone(),
            Polynomial::zero(&pc),
            p.clone(),
        ])
        .unwrap();
        assert!(!h.contains_parametrized(&bad));
        assert_eq!(h.pullback(&bad), &u * &p.pow(2) + &v * &p);
    }

    #[test]
    fn containment_specializes_to_points() {
        let h = Hypersurface::bourgain();
        let pm = eq5();
        for t in SampleConfig::default().with_count(20).points(3) {
            let p = pm.point(&t).unwrap().unwrap();
            assert!(h.contains_point(&p));
        }
    }

    #[test]
    fn tangent_hyperplane_along_a_ruling() {
        let h = Hypersurface::bourgain();
        for l in [1, -2, 5] {
            let dual = h.tangent_hyperplane(&pt([l, 1, l, 0, 0])).unwrap();
            assert_eq!(dual, pt([0, 0, 0, -1, 1]));
        }
        let err = h.tangent_hyperplane(&pt([0, 1, 0, 0, 0])).unwrap_err();
        assert!(matches!(err, SurfaceError::SingularPoint { .. }));
        let err = h.tangent_hyperplane(&pt([1, 1, 1, 1, 1])).unwrap_err();
        assert!(matches!(err, SurfaceError::NotOnSurface(_)));
        assert_eq!(
            quadric().tangent_hyperplane(&pt([1, 0, 0, 0, 0])).unwrap(),
            pt([0, 0, 0, 0, 1])
        );
    }

    #[test]
    fn construction_checks() {
        let err = Hypersurface::new(z(1).pow(2) - z(0)).unwrap_err();
        match err {
            SurfaceError::NotHomogeneous { degree, offending } => {
                assert_eq!(degree, 2);
                assert_eq!(offending, vec!["-z0".to_string()]);
            }
            other => panic!("{other}"),
        }
        assert_eq!(
            Hypersurface::new(Polynomial::zero(&VarContext::projective())).unwrap_err(),
            SurfaceError::Zero
        );
        let small = VarContext::new(&["a"]).unwrap();
        assert!(matches!(
            Hypersurface::new(Polynomial::var(&small, "a").unwrap()),
            Err(SurfaceError::WrongArity(_, 1))
        ));
    }

    #[test]
    fn euler_identity() {
        assert!(Hypersurface::bourgain().euler_defect().is_zero());
        assert!(quadric().euler_defect().is_zero());
    }
}
