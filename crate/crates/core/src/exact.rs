//! Exact integer primitives: integer square roots, the scaled square-root
//! floors that appear in the gonality formulas, and sign tests for
//! quadratic surds `a + b*sqrt(m)`.
//!
//! Nothing here touches floating point.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Floor square root of a non-negative integer.
///
/// Newton iteration from a power-of-two overestimate, followed by a
/// correction step so that `s*s <= n < (s+1)*(s+1)` holds unconditionally.
pub fn isqrt(n: i128) -> Result<i128> {
    if n < 0 {
        return domain(format!("isqrt of negative integer {n}"));
    }
    Ok(isqrt_u128(n as u128) as i128)
}

pub(crate) fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let bits = 128 - n.leading_zeros();
    // 2^ceil(bits/2) > sqrt(n)
    let mut x: u128 = 1 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            break;
        }
        x = y;
    }
    while x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}

/// `true` when `n` is a perfect square.
pub fn is_square(n: i128) -> bool {
    n >= 0 && {
        let s = isqrt_u128(n as u128) as i128;
        s * s == n
    }
}

/// `floor(-2*sqrt(n))` for `n >= 1`, i.e. `-ceil(sqrt(4n))`.
pub fn floor_neg_2sqrt(n: i64) -> Result<i64> {
    if n <= 0 {
        return domain(format!("floor(-2 sqrt(n)) requires n >= 1, got {n}"));
    }
    let four_n = 4 * n as i128;
    let m = isqrt_u128(four_n as u128) as i128;
    let ceil = if m * m == four_n { m } else { m + 1 };
    Ok(-(ceil as i64))
}

/// `ceil(2*sqrt(n))` for `n >= 1`.
pub fn ceil_2sqrt(n: i64) -> Result<i64> {
    floor_neg_2sqrt(n).map(|v| -v)
}

/// An exact real number `a + b*sqrt(m)` with integer `a`, `b` and `m >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Surd {
    pub a: i128,
    pub b: i128,
    pub m: i128,
}

impl Surd {
    pub fn new(a: i128, b: i128, m: i128) -> Result<Self> {
        if m < 0 {
            return domain(format!("surd radicand must be non-negative, got {m}"));
        }
        Ok(Surd { a, b, m })
    }

    pub fn rational(a: i128) -> Self {
        Surd { a, b: 0, m: 0 }
    }

    /// Sign of the represented value, decided by integer comparisons.
    pub fn signum(&self) -> Result<i8> {
        surd_sign(*self)
    }

    pub fn cmp_zero(&self) -> Result<Ordering> {
        Ok(self.signum()?.cmp(&0))
    }

    /// `self - k` for an integer `k`.
    pub fn sub_int(&self, k: i128) -> Result<Surd> {
        let a = self.a.checked_sub(k).ok_or(Error::Overflow("surd shift"))?;
        Ok(Surd { a, ..*self })
    }

    /// `k * self` for an integer `k`.
    pub fn scale(&self, k: i128) -> Result<Surd> {
        let a = self.a.checked_mul(k).ok_or(Error::Overflow("surd scale"))?;
        let b = self.b.checked_mul(k).ok_or(Error::Overflow("surd scale"))?;
        Ok(Surd { a, b, m: self.m })
    }

    /// Floating point approximation. Display only.
    pub fn approx(&self) -> f64 {
        self.a as f64 + self.b as f64 * (self.m as f64).sqrt()
    }
}

/// Sign of `a + b*sqrt(m)` in `{-1, 0, 1}`.
///
/// Mixed-sign cases compare `a^2` against `b^2 * m` in checked 128-bit
/// arithmetic; an overflow is reported rather than wrapped.
pub fn surd_sign(x: Surd) -> Result<i8> {
    let Surd { a, b, m } = x;
    if m < 0 {
        return domain(format!("surd radicand must be non-negative, got {m}"));
    }
    if b == 0 || m == 0 {
        return Ok(a.signum() as i8);
    }
    let (sa, sb) = (a.signum(), b.signum());
    if sa >= 0 && sb > 0 {
        return Ok(1);
    }
    if sa <= 0 && sb < 0 {
        return Ok(-1);
    }
    // a and b have strictly opposite signs.
    let a2 = a.checked_mul(a).ok_or(Error::Overflow("surd_sign a^2"))?;
    let b2m = b
        .checked_mul(b)
        .and_then(|b2| b2.checked_mul(m))
        .ok_or(Error::Overflow("surd_sign b^2 m"))?;
    let ord = a2.cmp(&b2m);
    Ok(match ord {
        Ordering::Equal => 0,
        // The term with the larger square wins.
        Ordering::Greater => sa as i8,
        Ordering::Less => sb as i8,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(0).unwrap(), 0);
        assert_eq!(isqrt(16).unwrap(), 4);
        assert_eq!(isqrt(17).unwrap(), 4);
        assert!(matches!(isqrt(-1), Err(Error::Domain(_))));
    }

    #[test]
    fn isqrt_floor_property_up_to_a_million() {
        for n in 0..=1_000_000i128 {
            let s = isqrt(n).unwrap();
            assert!(s * s <= n && n < (s + 1) * (s + 1), "n = {n}");
        }
    }

    #[test]
    fn isqrt_near_perfect_squares_at_the_top_of_the_range() {
        let max = u128::MAX;
        let s = isqrt_u128(max);
        assert_eq!(s, u64::MAX as u128);
        for k in [u64::MAX as u128 - 1, 1 << 62, 3_037_000_499] {
            assert_eq!(isqrt_u128(k * k), k);
            assert_eq!(isqrt_u128(k * k - 1), k - 1);
            assert_eq!(isqrt_u128(k * k + 1), k);
        }
    }

    #[test]
    fn floor_neg_2sqrt_examples() {
        assert_eq!(floor_neg_2sqrt(1).unwrap(), -2);
        assert_eq!(floor_neg_2sqrt(4).unwrap(), -4);
        assert_eq!(floor_neg_2sqrt(3).unwrap(), -4);
        assert_eq!(floor_neg_2sqrt(5).unwrap(), -5);
        assert!(floor_neg_2sqrt(0).is_err());
        assert!(floor_neg_2sqrt(-3).is_err());
    }

    #[test]
    fn ceil_2sqrt_examples() {
        assert_eq!(ceil_2sqrt(1).unwrap(), 2);
        assert_eq!(ceil_2sqrt(2).unwrap(), 3);
        assert_eq!(ceil_2sqrt(9).unwrap(), 6);
        assert!(ceil_2sqrt(0).is_err());
    }

    // ceil(sqrt(4n)) == ceil(sqrt(4n - 1)): the quarter shift inside the
    // square root never changes the floor.
    #[test]
    fn quarter_shift_does_not_move_the_floor() {
        let ceil_sqrt = |x: i128| {
            let s = isqrt(x).unwrap();
            if s * s == x {
                s
            } else {
                s + 1
            }
        };
        for n in 1..=100_000i128 {
            assert_eq!(ceil_sqrt(4 * n), ceil_sqrt(4 * n - 1), "n = {n}");
        }
    }

    #[test]
    fn surd_sign_examples() {
        assert_eq!(surd_sign(Surd::new(0, 0, 5).unwrap()).unwrap(), 0);
        assert_eq!(surd_sign(Surd::new(-8, 24, 3).unwrap()).unwrap(), 1);
        assert_eq!(surd_sign(Surd::new(-42, 24, 3).unwrap()).unwrap(), -1);
    }

    #[test]
    fn surd_exact_zeros() {
        // -6 + 3 sqrt(4) = 0, 12 - 2 sqrt(36) = 0
        assert_eq!(surd_sign(Surd::new(-6, 3, 4).unwrap()).unwrap(), 0);
        assert_eq!(surd_sign(Surd::new(12, -2, 36).unwrap()).unwrap(), 0);
        assert_eq!(surd_sign(Surd::new(7, 100, 0).unwrap()).unwrap(), 1);
        assert_eq!(surd_sign(Surd::new(0, -1, 2).unwrap()).unwrap(), -1);
    }

    #[test]
    fn surd_overflow_is_reported() {
        let x = Surd::new(-i128::MAX, 1, 2).unwrap();
        assert_eq!(surd_sign(x), Err(Error::Overflow("surd_sign a^2")));
        assert!(Surd::new(1, 1, -1).is_err());
    }
}
