mod common;

use common::z;
use num_traits::Zero;
use proptest::prelude::*;
use torsal::cli::catalog::CATALOG;
use torsal::equivalence::{
    rational_sacksteder_parametrization, rational_sacksteder_surface, sacksteder_to_bourgain,
};
use torsal::hypersurface::{Hypersurface, ParamMap};
use torsal::polyring::{rat, ratio, Rational};
use torsal::projgeom::{change_polynomial_coordinates, frame_bourgain, invert, ProjPoint};
use torsal::ruled::{gauss_map, generator_map, steiner_construction};
use torsal::sampling::SampleConfig;

fn eval_point(pm: &ParamMap, t: &[Rational]) -> ProjPoint {
    pm.point(t).unwrap().expect("nonzero")
}

#[test]
fn gauss_image_is_constant_along_rulings() {
    let h = Hypersurface::bourgain();
    let g = gauss_map(&h, &generator_map()).unwrap();
    let pq = SampleConfig::default().with_count(10).points(2);
    let ls = SampleConfig::with_seed(99).with_count(10).nonzero_points(2);
    for (pq, ls) in pq.iter().zip(&ls) {
        if ls[0] == ls[1] {
            continue;
        }
        let a = eval_point(g.map(), &[pq[0].clone(), pq[1].clone(), ls[0].clone()]);
        let b = eval_point(g.map(), &[pq[0].clone(), pq[1].clone(), ls[1].clone()]);
        assert_eq!(a, b, "p={}, q={}", pq[0], pq[1]);
    }
}

#[test]
fn no_singular_points_in_the_affine_part() {
    let h = Hypersurface::bourgain();
    let rulings = ParamMap::new(
        ["1", "u", "v - p*u", "p*v", "p"]
            .iter()
            .map(|c| common::poly(c, "p,u,v"))
            .collect(),
    )
    .unwrap();
    for t in SampleConfig::default().with_count(20).points(3) {
        let pt = eval_point(&rulings, &t);
        assert!(!pt.is_at_infinity());
        assert!(h.contains_point(&pt));
        assert!(h.gradient_at(&pt).iter().any(|c| !c.is_zero()), "{pt}");
    }
}

#[test]
fn catalog_entries_satisfy_euler() {
    for e in CATALOG {
        assert!(e.hypersurface().euler_defect().is_zero(), "{}", e.name);
    }
}

#[test]
fn steiner_sweep_recovers_the_cubic() {
    let r = steiner_construction().unwrap();
    assert!(r
        .cubic
        .equal_up_to_scalar(Hypersurface::bourgain().polynomial())
        .is_some());
}

#[test]
fn rank_survives_the_linear_identification() {
    let cfg = SampleConfig::default();
    let h = rational_sacksteder_surface();
    let pm = rational_sacksteder_parametrization(-1).unwrap();
    let rational_rank = gauss_map(&h, &pm).unwrap().generic_rank(&cfg).unwrap().rank;
    let bourgain = Hypersurface::bourgain();
    let rulings = ParamMap::new(
        ["1", "u", "v - p*u", "p*v", "p"]
            .iter()
            .map(|c| common::poly(c, "p,u,v"))
            .collect(),
    )
    .unwrap();
    let bourgain_rank = gauss_map(&bourgain, &rulings)
        .unwrap()
        .generic_rank(&cfg)
        .unwrap()
        .rank;
    assert_eq!(rational_rank, 2);
    assert_eq!(rational_rank, bourgain_rank);
}

#[test]
fn identified_cubic_is_singular_only_on_the_plane_at_infinity() {
    let r = sacksteder_to_bourgain().unwrap();
    let h = Hypersurface::new(r.steps.last().unwrap().output.clone()).unwrap();
    assert!(h.singular_on_coordinate_subspace(&[0, 4]));
    assert_eq!(r.final_singular_subspaces, vec![vec![0, 4]]);
}

#[test]
fn seeds_change_points_not_answers() {
    let h = Hypersurface::bourgain();
    let g = gauss_map(&h, &generator_map()).unwrap();
    for seed in [1, 2, 3] {
        let report = g.generic_rank(&SampleConfig::with_seed(seed)).unwrap();
        assert_eq!(report.rank, 2, "seed {seed}");
    }
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn frame_change_round_trips(p in small_rational(), q in small_rational(), k in 1i64..5) {
        let f = z("z1*z4^2 + z0*z2*z4 - z0^2*z3").scale(&rat(k)) + z("z0^3 - z1*z2*z3");
        let frame = frame_bourgain(&p, &q);
        let inv = invert(&frame).unwrap();
        let there = change_polynomial_coordinates(&f, frame.matrix()).unwrap();
        let back = change_polynomial_coordinates(&there, inv.matrix()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn scaling_is_detected(c in small_rational()) {
        prop_assume!(!c.is_zero());
        let f = Hypersurface::bourgain().polynomial().clone();
        prop_assert_eq!(f.scale(&c).equal_up_to_scalar(&f), Some(c));
    }
}
