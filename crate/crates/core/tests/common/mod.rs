//! Plain `i64` reference arithmetic, written independently of the library.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn small(x: &BigInt) -> i64 {
    x.to_i64().expect("fits in i64")
}

/// `(a1 C0 + b1 f).(a2 C0 + b2 f)` with `C0^2 = -e`, `C0.f = 1`, `f^2 = 0`.
pub fn dot(e: i64, x: (i64, i64), y: (i64, i64)) -> i64 {
    -e * x.0 * y.0 + x.0 * y.1 + x.1 * y.0
}

pub fn canonical(g: i64, e: i64) -> (i64, i64) {
    (-2, 2 * g - 2 - e)
}

/// Euler characteristic from the pushforward to the base curve: for `a >= 0`,
/// `pi_* O(aC0 + bf)` is a sum of `a+1` line bundles of degrees `b - ie`
/// (numerically), `a = -1` has no cohomology, and `a <= -2` uses Serre duality.
pub fn chi_by_projection(g: i64, e: i64, d: (i64, i64)) -> i64 {
    let (a, b) = d;
    if a >= 0 {
        (0..=a).map(|i| b - i * e + 1 - g).sum()
    } else if a == -1 {
        0
    } else {
        let k = canonical(g, e);
        chi_by_projection(g, e, (k.0 - a, k.1 - b))
    }
}

pub fn h0_p1(n: i64) -> i64 {
    (n + 1).max(0)
}

pub fn h1_p1(n: i64) -> i64 {
    (-n - 1).max(0)
}

/// `h^i(F_e, O(tC0 + bf))` via the Leray spectral sequence, using relative
/// duality `R^1 pi_* O(D) = (pi_* O(K_rel - D))^*` for `t <= -2`.
pub fn leray_g0(e: i64, d: (i64, i64)) -> [i64; 3] {
    let (t, b) = d;
    if t >= 0 {
        let h0 = (0..=t).map(|i| h0_p1(b - i * e)).sum();
        let h1 = (0..=t).map(|i| h1_p1(b - i * e)).sum();
        [h0, h1, 0]
    } else if t == -1 {
        [0, 0, 0]
    } else {
        let m = -2 - t;
        let h1 = (0..=m).map(|i| h0_p1(b + e + i * e)).sum();
        let h2 = (0..=m).map(|i| h1_p1(b + e + i * e)).sum();
        [0, h1, h2]
    }
}

/// Classes `D` with the four Ulrich vanishings on `F_e`, by direct Leray
/// computation, inside `|t|, |b'| <= limit`.
pub fn ulrich_classes_g0(e: i64, h: (i64, i64), limit: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for t in -limit..=limit {
        for b in -limit..=limit {
            let once = leray_g0(e, (t - h.0, b - h.1));
            let twice = leray_g0(e, (t - 2 * h.0, b - 2 * h.1));
            if once[0] == 0 && once[1] == 0 && twice[1] == 0 && twice[2] == 0 {
                out.push((t, b));
            }
        }
    }
    out
}
