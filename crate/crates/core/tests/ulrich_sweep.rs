mod common;

use common::{canonical, chi_by_projection, dot, small, ulrich_classes_g0};
use ulrich_core::ulrich::{
    brute_force_ulrich_g0, candidate_classes, numerical_ulrich_check, ulrich_dual,
};
use ulrich_core::{DivisorClass, Polarization, RuledSurfaceParams};

fn pair(d: &DivisorClass) -> (i64, i64) {
    (small(&d.a), small(&d.b))
}

/// Every `(g, e, a, b)` with `g <= 6`, `-g <= e <= 6`, `1 <= a <= 6`,
/// `0 <= b <= 20`, skipping `g = 0, e < 0`.
fn grid() -> impl Iterator<Item = (i64, i64, i64, i64)> {
    (0..=6i64).flat_map(|g| {
        (-g..=6i64)
            .flat_map(move |e| (1..=6i64).flat_map(move |a| (0..=20i64).map(move |b| (g, e, a, b))))
    })
}

#[test]
fn candidates_satisfy_ulrich_numerics_over_the_sweep() {
    let mut checked = 0;
    for (g, e, a, b) in grid() {
        let s = RuledSurfaceParams::new(g, e).unwrap();
        let h = Polarization::new(DivisorClass::new(a, b)).unwrap();
        let result = candidate_classes(&s, &h);
        if ((a - 1) * e) % 2 != 0 {
            assert!(result.is_err(), "odd twist accepted at {g} {e} {a} {b}");
            continue;
        }
        let cands = result.unwrap();
        let hh = (a, b);
        let k = canonical(g, e);
        let target_dh = (3 * dot(e, hh, hh) + dot(e, hh, k)) / 2;
        for c in &cands {
            let d = pair(&c.class);
            assert!(numerical_ulrich_check(&s, &h, &c.class).unwrap());
            assert_eq!(dot(e, d, hh), target_dh);
            assert_eq!(dot(e, d, d), 2 * (dot(e, hh, hh) - 1 + g) + dot(e, d, k));
            assert_eq!(chi_by_projection(g, e, (d.0 - a, d.1 - b)), 0);
            assert_eq!(chi_by_projection(g, e, (d.0 - 2 * a, d.1 - 2 * b)), 0);
            assert_eq!(ulrich_dual(&s, &h, &ulrich_dual(&s, &h, &c.class)), c.class);
        }
        let (high, low) = (pair(&cands[0].class), pair(&cands[1].class));
        assert_eq!(high.0 + low.0, 3 * a + k.0);
        assert_eq!(high.1 + low.1, 3 * b + k.1);
        // untwisted by h, the two families sum to (a-2)C0 + (b + 2g - 2 - e)f
        assert_eq!(
            (high.0 - a + low.0 - a, high.1 - b + low.1 - b),
            (a - 2, b + 2 * g - 2 - e)
        );
        assert_eq!(ulrich_dual(&s, &h, &cands[0].class), cands[1].class);
        checked += 1;
    }
    assert!(checked > 5000, "only {checked} sweep points checked");
}

#[test]
fn brute_force_finds_exactly_the_candidates_for_sections() {
    for e in 0..=2i64 {
        let s = RuledSurfaceParams::hirzebruch(e).unwrap();
        for b in e + 1..=e + 4 {
            let h = Polarization::new(DivisorClass::new(1, b)).unwrap();
            let found = brute_force_ulrich_g0(&s, &h, 15).unwrap();
            let mut expected: Vec<DivisorClass> = candidate_classes(&s, &h)
                .unwrap()
                .into_iter()
                .map(|c| c.class)
                .collect();
            expected.sort();
            expected.dedup();
            assert_eq!(found, expected, "F_{e}, h = (1, {b})");
            let reference: Vec<_> = ulrich_classes_g0(e, (1, b), 15);
            let found: Vec<_> = found.iter().map(pair).collect();
            assert_eq!(found, reference, "F_{e}, h = (1, {b})");
        }
    }
}

#[test]
fn no_ulrich_line_bundles_for_higher_degree_on_positive_invariant() {
    for e in 1..=2i64 {
        let s = RuledSurfaceParams::hirzebruch(e).unwrap();
        for a in 2..=3i64 {
            let b = a * e + 1;
            let h = Polarization::very_ample(&s, DivisorClass::new(a, b)).unwrap();
            assert!(brute_force_ulrich_g0(&s, &h, 15).unwrap().is_empty());
            assert!(ulrich_classes_g0(e, (a, b), 15).is_empty());
        }
    }
}
