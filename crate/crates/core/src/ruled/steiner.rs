//! The cubic as the locus swept by the planes through `B0(p)` tangent to
//! the conic at `B1(p)`, with the corresponding points of the line and the
//! conic in projective correspondence.

use std::collections::BTreeMap;

use crate::hypersurface::{Hypersurface, ParamMap};
use crate::polyring::{ratio, Monomial, Polynomial, Rational, Substitution, VarContext};

use super::envelope::conic_tangency_map;
use super::{Result, RuledError};

const INVERSE: &str = "__inverse";

/// `alpha B0 + beta B1 - gamma/2 dB1/dp` over `(alpha, beta, gamma, p)`.
pub fn torsal_plane_family() -> ParamMap {
    let ctx = VarContext::new(&["alpha", "beta", "gamma", "p"]).expect("distinct");
    let v = |n| Polynomial::var(&ctx, n).expect("present");
    let (alpha, beta, gamma, p) = (v("alpha"), v("beta"), v("gamma"), v("p"));
    let zero = Polynomial::zero(&ctx);
    let b0 = [Polynomial::one(&ctx), zero.clone(), zero.clone(), zero, p];
    let b1 = conic_tangency_map(&ctx).expect("p present");
    let db1: Vec<Polynomial> = b1
        .iter()
        .map(|c| c.partial_derivative("p").expect("p"))
        .collect();
    let half = gamma.scale(&ratio(-1, 2));
    let comps = (0..5)
        .map(|i| &alpha * &b0[i] + &beta * &b1[i] + &half * &db1[i])
        .collect();
    ParamMap::new(comps).expect("nonzero")
}

/// Implicit equation of a parametrization that can be solved for its
/// parameters one at a time.
///
/// Each step picks an unused coordinate `z_i = c * t + r` where `t` is the
/// only unsolved parameter left in it and `c` is a constant or a constant
/// times a single coordinate `z_k` (only one such `z_k` overall). Once all
/// parameters are solved the one unused coordinate gives the equation,
/// cleared of the `z_k` denominators and stripped of content.
pub fn implicitize_triangular(pm: &ParamMap, coords: &VarContext) -> Result<Polynomial> {
    let params = pm.context();
    if coords.len() != 5 {
        return Err(RuledError::NotTriangular(format!(
            "need 5 coordinates, got {}",
            coords.len()
        )));
    }
    let mut all: Vec<String> = params.names().to_vec();
    all.extend(coords.names().iter().cloned());
    all.push(INVERSE.to_string());
    let big = VarContext::new(&all)?;
    let np = params.len();
    let inverse_at = big.len() - 1;

    let lifted: Vec<Polynomial> = pm
        .components()
        .iter()
        .map(|c| c.reembed(&big))
        .collect::<std::result::Result<_, _>>()?;
    let mut solved: BTreeMap<usize, Polynomial> = BTreeMap::new();
    let mut used = [false; 5];
    let mut pivot: Option<usize> = None;

    let apply = |f: &Polynomial, solved: &BTreeMap<usize, Polynomial>| -> Result<Polynomial> {
        let mut s = Substitution::identity(&big);
        for (&t, image) in solved {
            s = s.with(big.name(t), image.clone());
        }
        Ok(f.substitute(&s)?)
    };

    while solved.len() < np {
        let mut progress = false;
        for i in 0..5 {
            if used[i] {
                continue;
            }
            let comp = apply(&lifted[i], &solved)?;
            let open: Vec<usize> = comp.support().into_iter().filter(|&j| j < np).collect();
            let [t] = open[..] else { continue };
            let name = big.name(t).to_string();
            let coeffs = comp.coefficients_in(&name)?;
            if coeffs.len() != 2 {
                continue;
            }
            let (rest, lead) = (&coeffs[0], &coeffs[1]);
            let zi = Polynomial::var_at(&big, np + i);
            let numer = &zi - rest;
            let solution = if let Some(c) = lead.as_constant() {
                numer.scale(&c.recip())
            } else if let Some((k, c)) = single_coordinate(lead, np, inverse_at) {
                if pivot.is_some_and(|pk| pk != k) {
                    continue;
                }
                pivot = Some(k);
                (&numer * &Polynomial::var_at(&big, inverse_at)).scale(&c.recip())
            } else {
                continue;
            };
            solved.insert(t, solution);
            used[i] = true;
            progress = true;
            break;
        }
        if !progress {
            let missing: Vec<&str> = (0..np)
                .filter(|t| !solved.contains_key(t))
                .map(|t| big.name(t))
                .collect();
            return Err(RuledError::NotTriangular(format!(
                "cannot solve for {}",
                missing.join(", ")
            )));
        }
    }

    let left: Vec<usize> = (0..5).filter(|&i| !used[i]).collect();
    let [r] = left[..] else {
        return Err(RuledError::NotTriangular(format!(
            "{} equations remain, expected 1",
            left.len()
        )));
    };
    let residual = Polynomial::var_at(&big, np + r) - apply(&lifted[r], &solved)?;
    let cleared = clear_inverse(&residual, pivot, inverse_at);
    Ok(cleared.reembed(coords)?.primitive_part())
}

/// `c * z_k` with `z_k` a coordinate variable.
fn single_coordinate(lead: &Polynomial, np: usize, inverse_at: usize) -> Option<(usize, Rational)> {
    if lead.num_terms() != 1 {
        return None;
    }
    let (m, c) = lead.terms().next()?;
    let e = m.exponents();
    let k = (np..inverse_at).find(|&k| e[k] == 1)?;
    (m.degree() == 1).then(|| (k, c.clone()))
}

/// Multiplies through by `z_k^K` where `K` is the top power of the
/// inverse symbol, replacing `inverse^j` by `z_k^(K - j)`.
fn clear_inverse(f: &Polynomial, pivot: Option<usize>, inverse_at: usize) -> Polynomial {
    let Some(k) = pivot else { return f.clone() };
    let top = f.degree_in(f.context().name(inverse_at)).unwrap_or(0);
    let terms = f.terms().map(|(m, c)| {
        let mut e = m.exponents().to_vec();
        let j = e[inverse_at];
        e[inverse_at] = 0;
        e[k] += top - j;
        (Monomial::from_exponents(e), c.clone())
    });
    Polynomial::from_terms(f.context(), terms)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerReport {
    pub plane_family: ParamMap,
    pub cubic: Polynomial,
    /// `cubic = scalar * f` for the standard cubic `f`.
    pub scalar: Rational,
}

/// Sweeps the tangent planes, eliminates the parameters, and compares the
/// result with the standard cubic.
pub fn steiner_construction() -> Result<SteinerReport> {
    let plane_family = torsal_plane_family();
    let target = Hypersurface::bourgain();
    if !target.contains_parametrized(&plane_family) {
        return Err(RuledError::Verification(
            "plane family leaves the cubic".into(),
        ));
    }
    let cubic = implicitize_triangular(&plane_family, target.context())?;
    let scalar = cubic
        .equal_up_to_scalar(target.polynomial())
        .ok_or_else(|| {
            RuledError::Verification(format!("implicit equation {cubic} differs from the cubic"))
        })?;
    Ok(SteinerReport {
        plane_family,
        cubic,
        scalar,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    #[test]
    fn plane_family_coordinates() {
        let pm = torsal_plane_family();
        let ctx = pm.context().clone();
        let v = |n| Polynomial::var(&ctx, n).unwrap();
        let (a, b, g, p) = (v("alpha"), v("beta"), v("gamma"), v("p"));
        assert_eq!(
            pm.components(),
            &[
                a.clone(),
                b.clone(),
                &g - &(&p * &b).scale(&rat(2)),
                &p * &(&g - &(&p * &b)),
                &p * &a,
            ]
        );
    }

    #[test]
    fn implicitization_recovers_the_cubic() {
        let rep = steiner_construction().unwrap();
        assert_eq!(rep.scalar, rat(-1));
        assert_eq!(rep.cubic.to_string(), "z0^2*z3 - z0*z2*z4 - z1*z4^2");
    }

    #[test]
    fn non_triangular_map_rejected() {
        let ctx = VarContext::new(&["s", "t"]).unwrap();
        let v = |n| Polynomial::var(&ctx, n).unwrap();
        let (s, t) = (v("s"), v("t"));
        let pm = ParamMap::new(vec![&s + &t, &s - &t, &s * &t, s.pow(2), t.pow(2)]).unwrap();
        assert!(matches!(
            implicitize_triangular(&pm, &VarContext::projective()),
            Err(RuledError::NotTriangular(_))
        ));
    }
}
