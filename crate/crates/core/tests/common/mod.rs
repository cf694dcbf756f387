//! Test-only oracles, written from the definitions and sharing no code
//! with the library.
#![allow(dead_code)]

/// `max_{0 <= l <= min(r, g-d+r-1)} rho(g, r-l, d) - l k`.
pub fn rho_k(g: i64, r: i64, d: i64, k: i64) -> Option<i64> {
    let top = r.min(g - d + r - 1);
    (0..=top)
        .map(|l| g - (r - l + 1) * (g - d + r - l) - l * k)
        .max()
}

/// Largest k >= 1 with `rho_k >= 0`, searching up to `g + 1`.
pub fn kappa(g: i64, r: i64, d: i64) -> Option<i64> {
    (1..=g + 1)
        .rev()
        .find(|&k| rho_k(g, r, d, k).is_some_and(|v| v >= 0))
}

/// `d_max` as "the largest d with rho < 0", by search.
pub fn d_max(g: i64, r: i64) -> i64 {
    (0..=2 * g)
        .rev()
        .find(|&d| g - (r + 1) * (g - d + r) < 0)
        .unwrap()
}

/// Floor square root by bisection.
pub fn sqrt_floor(n: u128) -> u128 {
    let (mut lo, mut hi) = (0u128, 1u128 << 64);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if mid.checked_mul(mid).is_some_and(|sq| sq <= n) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Sign of `a + b sqrt(m)` from a fixed-point evaluation with 56
/// fractional bits. Reliable for |a|, |b| <= 1e6, m <= 1e3 away from exact
/// zeros.
pub fn fixed_point_sign(a: i128, b: i128, m: u128) -> i8 {
    const SHIFT: u32 = 56;
    let root = sqrt_floor(m << (2 * SHIFT)) as i128;
    let lower = (a << SHIFT) + b * root;
    let upper = (a << SHIFT) + b * (root + 1);
    // The true value lies between the two evaluations.
    if lower > 0 && upper > 0 {
        1
    } else if lower < 0 && upper < 0 {
        -1
    } else {
        0
    }
}
