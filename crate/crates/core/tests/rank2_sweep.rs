mod common;

use common::{canonical, dot, small};
use num_traits::Zero;
use ulrich_core::rank2::{
    extension_chern_check, half_split_extension, semistable_family_bound, special_target,
    threshold_extension, threshold_family_dimension,
};
use ulrich_core::{DivisorClass, Error, Polarization, RuledSurfaceParams};

fn grid() -> impl Iterator<Item = (i64, i64, i64, i64)> {
    (0..=5i64).flat_map(|g| {
        let lo = if g == 0 { 0 } else { -g };
        (lo..=g)
            .flat_map(move |e| (1..=6i64).flat_map(move |a| (0..=20i64).map(move |b| (g, e, a, b))))
    })
}

fn target(g: i64, e: i64, h: (i64, i64)) -> ((i64, i64), i64) {
    let k = canonical(g, e);
    let c1 = (3 * h.0 + k.0, 3 * h.1 + k.1);
    let c2 = (5 * dot(e, h, h) + 3 * dot(e, h, k)) / 2 + 2 - 2 * g;
    (c1, c2)
}

fn setup(g: i64, e: i64, a: i64, b: i64) -> (RuledSurfaceParams, Polarization) {
    (
        RuledSurfaceParams::new(g, e).unwrap(),
        Polarization::new(DivisorClass::new(a, b)).unwrap(),
    )
}

#[test]
fn threshold_extension_has_the_special_chern_classes() {
    let mut built = 0;
    for (g, e, a, b) in grid() {
        let (s, h) = setup(g, e, a, b);
        match threshold_extension(&s, &h) {
            Ok(report) => {
                let t = special_target(&s, &h).unwrap();
                assert!(extension_chern_check(&s, &report.datum, &t));
                let (c1, c2) = target(g, e, (a, b));
                let sub = (small(&report.datum.sub.a), small(&report.datum.sub.b));
                let quot = (small(&report.datum.quot.a), small(&report.datum.quot.b));
                assert_eq!((sub.0 + quot.0, sub.1 + quot.1), c1);
                assert_eq!(dot(e, sub, quot) + small(&report.datum.z_degree), c2);
                assert_eq!(sub, (a, b + g - 1));
                assert_eq!(quot, (2 * a - 2, 2 * b + g - 1 - e));
                assert_eq!(2 * small(&report.datum.z_degree), (a - 1) * (2 * b - e * a));
                built += 1;
            }
            Err(Error::Hypothesis(_)) => {
                let z_twice = (a - 1) * (2 * b - e * a);
                assert!(g == 0 || a < 2 || z_twice < 0 || z_twice % 2 != 0);
            }
            Err(other) => panic!("({g}, {e}, {a}, {b}): {other}"),
        }
    }
    assert!(built > 1000);
}

#[test]
fn half_split_extension_has_the_special_chern_classes() {
    let mut built = 0;
    for (g, e, a, b) in grid() {
        let (s, h) = setup(g, e, a, b);
        match half_split_extension(&s, &h) {
            Ok(report) => {
                let t = special_target(&s, &h).unwrap();
                assert!(extension_chern_check(&s, &report.datum, &t));
                let (c1, c2) = target(g, e, (a, b));
                let sub = (small(&report.datum.sub.a), small(&report.datum.sub.b));
                let quot = (small(&report.datum.quot.a), small(&report.datum.quot.b));
                assert_eq!((sub.0 + quot.0, sub.1 + quot.1), c1);
                assert_eq!(dot(e, sub, quot) + small(&report.datum.z_degree), c2);
                let (alpha, eps) = (a / 2, a % 2);
                assert_eq!(small(&report.datum.z_degree), (alpha + eps) * b);
                built += 1;
            }
            Err(Error::Hypothesis(_)) => assert!(e != 0 || g == 0 || a < 2 || b < 3),
            Err(other) => panic!("({g}, {e}, {a}, {b}): {other}"),
        }
    }
    assert!(built > 300);
}

#[test]
fn quadric_special_target() {
    let (s, h) = setup(0, 0, 1, 1);
    let t = special_target(&s, &h).unwrap();
    assert_eq!(t.c1, DivisorClass::new(1, 1));
    assert_eq!(t.c2, 1.into());
}

#[test]
fn semistable_bound_stays_below_family_dimension() {
    let mut checked = 0;
    for (g, e, a, b) in grid() {
        if g == 0 || e > 0 || a < 2 {
            continue;
        }
        let (s, h) = setup(g, e, a, b);
        let Ok(report) = threshold_extension(&s, &h) else {
            continue;
        };
        if !report.sufficient || !s.very_ample_necessary(&h) {
            continue;
        }
        let bound = semistable_family_bound(&s, &h).unwrap();
        let dim = 2 * a * b - e * a * a - (a - 4) * (g - 1);
        assert_eq!(small(&threshold_family_dimension(&s, &h)), dim);
        // 4 * bound = (a-1)(2b + 4 - ae) - 4
        let four_bound = (a - 1) * (2 * b + 4 - a * e) - 4;
        assert!(four_bound < 4 * dim, "({g}, {e}, {a}, {b})");
        assert!(bound.dominated());
        checked += 1;
    }
    assert!(checked > 100);
}

#[test]
fn elliptic_quadric_example() {
    let (s, h) = setup(1, 0, 2, 2);
    let bound = semistable_family_bound(&s, &h).unwrap();
    assert!(bound.bound.is_integer() && bound.bound.to_integer() == 1.into());
    assert_eq!(bound.family_dimension, 8.into());
    assert!(!bound.family_dimension.is_zero());
}

#[test]
fn special_first_chern_class_is_self_dual() {
    for (g, e, a, b) in grid() {
        let (s, h) = setup(g, e, a, b);
        let t = special_target(&s, &h).unwrap();
        let dual = |d: &DivisorClass| h.class().scale(&3.into()) + s.canonical_class() - d;
        for x in [DivisorClass::new(a, b), DivisorClass::new(1 - a, 2 * b - g)] {
            let y = &t.c1 - &x;
            assert_eq!(dual(&x) + dual(&y), t.c1);
            assert_eq!(&dual(&x) + &x, t.c1);
        }
    }
}
