//! Expected maximal Brill-Noether loci `M^r_g = M^r_{g, d_max(g, r)}` and
//! the gonality comparisons between them.
//!
//! The bounds on kappa carry a `sqrt(r+1)` term, so every comparison against
//! them goes through [`Surd`] sign tests after clearing the `r+1`
//! denominator.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bn::{kappa, rho, KappaResult, Locus};
use crate::error::{inconsistent, Error, Result};
use crate::exact::{floor_neg_2sqrt, is_square, isqrt, Surd};

/// The largest `d` with `rho(g, r, d) < 0`: `r + ceil(g r / (r+1)) - 1`.
pub fn d_max(g: i64, r: i64) -> i64 {
    // ceil(x / y) = -floor(-x / y) for y > 0
    r - (-g * r).div_euclid(r + 1) - 1
}

pub fn is_expected_maximal(g: i64, r: i64, d: i64) -> bool {
    r >= 1
        && 2 * r <= d
        && d < g
        && rho(g, r, d) < 0
        && rho(g, r, d + 1) >= 0
        && rho(g, r - 1, d - 1) >= 0
}

/// `ceil(sqrt(g) - 1)`, computed with `isqrt`.
pub fn rank_bound(g: i64) -> i64 {
    let s = isqrt(g as i128).expect("genus is non-negative") as i64;
    if is_square(g as i128) {
        s - 1
    } else {
        s
    }
}

/// The largest rank of an expected maximal locus in genus `g`.
pub fn r_max_expected(g: i64) -> i64 {
    let s = isqrt(g as i128).expect("genus is non-negative") as i64;
    if g >= s * s + s {
        rank_bound(g)
    } else {
        s - 1
    }
}

/// `floor(sqrt(g) - 1/2)`: the largest `s` with `(2s+1)^2 <= 4g`.
pub fn half_shift_rank_bound(g: i64) -> i64 {
    let four_g = 4 * g as i128;
    let root = isqrt(four_g).expect("genus is non-negative") as i64;
    // (2s+1)^2 <= 4g  <=>  2s+1 <= isqrt(4g)
    (root - 1).div_euclid(2)
}

/// An expected maximal locus together with its kappa and exact bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalLocusRecord {
    pub locus: Locus,
    pub rho: i64,
    pub kappa: KappaResult,
    /// Exclusive lower bound `g/(r+1) + r - 2 sqrt(r+1)`.
    pub lower: SurdBound,
    /// Inclusive upper bound `g/(r+1) + r`.
    pub upper: SurdBound,
}

/// A real number `numer / denom` with `denom > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurdBound {
    pub numer: Surd,
    pub denom: i128,
}

impl SurdBound {
    /// Compares the integer `k` with this bound.
    pub fn cmp_int(&self, k: i64) -> Result<Ordering> {
        // k - numer/denom has the sign of k*denom - numer
        let scaled = (k as i128)
            .checked_mul(self.denom)
            .ok_or(Error::Overflow("bound comparison"))?;
        self.numer.scale(-1)?.sub_int(-scaled)?.cmp_zero()
    }

    pub fn approx(&self) -> f64 {
        self.numer.approx() / self.denom as f64
    }
}

impl fmt::Display for SurdBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Surd { a, b, m } = self.numer;
        if b == 0 || m == 0 {
            write!(f, "{a}/{}", self.denom)
        } else {
            write!(
                f,
                "({a} {} {}*sqrt({m}))/{}",
                if b < 0 { '-' } else { '+' },
                b.abs(),
                self.denom
            )
        }
    }
}

/// `-(r + 1 - (g mod (r+1)))`.
pub fn rho_at_dmax(g: i64, r: i64) -> i64 {
    -(r + 1 - g.rem_euclid(r + 1))
}

/// kappa of `M^r_g` through the specialized formula. The floor of
/// `-g r / (r+1)` rounds toward minus infinity.
pub fn kappa_at_dmax(g: i64, r: i64) -> i64 {
    if r == 1 {
        return (g + 1) / 2;
    }
    let neg_rho = r + 1 - g.rem_euclid(r + 1);
    g + r
        + 2
        + (-g * r).div_euclid(r + 1)
        + floor_neg_2sqrt(neg_rho).expect("-rho at d_max lies in [1, r+1]")
}

/// `(lower, upper)` bounds on kappa of `M^r_g` as exact surds over `r + 1`.
pub fn kappa_bounds(g: i64, r: i64) -> (SurdBound, SurdBound) {
    let n = (r + 1) as i128;
    let g = g as i128;
    let r = r as i128;
    // upper = (g + r(r+1)) / (r+1); lower = (g + r(r+1) - 2(r+1) sqrt(r+1)) / (r+1)
    let base = g + r * n;
    let upper = SurdBound {
        numer: Surd::rational(base),
        denom: n,
    };
    let lower = SurdBound {
        numer: Surd {
            a: base,
            b: -2 * n,
            m: n,
        },
        denom: n,
    };
    (lower, upper)
}

/// Exact test of `lower < k <= upper`.
pub fn bounds_sandwich(k: i64, lower: &SurdBound, upper: &SurdBound) -> Result<bool> {
    Ok(lower.cmp_int(k)? == Ordering::Greater && upper.cmp_int(k)? != Ordering::Greater)
}

/// Builds the record for rank `r`, checking the specialized rho and kappa
/// formulas and the bounds against the general machinery.
pub fn maximal_record(g: i64, r: i64) -> Result<MaximalLocusRecord> {
    let d = d_max(g, r);
    let locus = Locus::new(g, r, d)?;
    let rho = locus.rho();
    if rho != rho_at_dmax(g, r) {
        return inconsistent(format!("rho at d_max disagrees for (g, r) = ({g}, {r})"));
    }
    let kappa = kappa(locus)?;
    if kappa.value != kappa_at_dmax(g, r) {
        return inconsistent(format!(
            "kappa at d_max formula gives {} but kappa gives {} for {locus:?}",
            kappa_at_dmax(g, r),
            kappa.value
        ));
    }
    let (lower, upper) = kappa_bounds(g, r);
    if !bounds_sandwich(kappa.value, &lower, &upper)? {
        return inconsistent(format!("kappa bounds violated for {locus:?}"));
    }
    Ok(MaximalLocusRecord {
        locus,
        rho,
        kappa,
        lower,
        upper,
    })
}

/// All expected maximal loci of genus `g`, ordered by rank. The rank range
/// from [`r_max_expected`] is cross-checked against a definitional filter.
pub fn enumerate_expected_maximal(g: i64) -> Result<Vec<MaximalLocusRecord>> {
    if g < 3 {
        return crate::error::domain(format!("expected maximal loci need g >= 3, got {g}"));
    }
    let top = r_max_expected(g);
    let filtered: Vec<i64> = (1..=g)
        .filter(|&r| is_expected_maximal(g, r, d_max(g, r)))
        .collect();
    let closed: Vec<i64> = (1..=top).collect();
    if filtered != closed {
        return inconsistent(format!(
            "rank range 1..={top} disagrees with definitional filter {filtered:?} in genus {g}"
        ));
    }
    closed.into_iter().map(|r| maximal_record(g, r)).collect()
}

/// `f(g, r, delta) <= 0`, which forces `M^r_g` out of `M^{r+delta}_g`.
///
/// `f = A + B sqrt(r+1)` with `A = (r+1) delta^2 + ((r+1)^2 - g) delta` and
/// `B = 2 (r+1) delta + 2 (r+1)^2`.
pub fn f_criterion(g: i64, r: i64, delta: i64) -> Result<bool> {
    let n = (r + 1) as i128;
    let (g, delta) = (g as i128, delta as i128);
    let ovf = Error::Overflow("f criterion");
    let a = n
        .checked_mul(delta * delta)
        .and_then(|x| x.checked_add((n * n - g).checked_mul(delta)?))
        .ok_or(ovf.clone())?;
    let b = (2 * n)
        .checked_mul(delta)
        .and_then(|x| x.checked_add(2 * n * n))
        .ok_or(ovf)?;
    Ok(Surd::new(a, b, n)?.signum()? <= 0)
}

/// `g >= 4(r+1)^{5/2} + (r+1)^2 + 2(r+1)^{3/2}`, decided as
/// `t >= 0 && t^2 >= (4(r+1)^2 + 2(r+1))^2 (r+1)` with `t = g - (r+1)^2`.
pub fn genus_threshold_holds(g: i64, r: i64) -> Result<bool> {
    let n = (r + 1) as i128;
    let coeff = n
        .checked_mul(n)
        .and_then(|x| x.checked_mul(4))
        .and_then(|x| x.checked_add(2 * n));
    let coeff = coeff.ok_or(Error::Overflow("genus threshold"))?;
    let t = Surd::new((g as i128) - n * n, -coeff, n)?;
    Ok(t.signum()? >= 0)
}

/// The smallest genus satisfying [`genus_threshold_holds`] for rank `r`.
pub fn genus_threshold(r: i64) -> Result<i64> {
    // The threshold exceeds (r+1)^2, so start there.
    let mut g = ((r + 1) * (r + 1)).max(3);
    while !genus_threshold_holds(g, r)? {
        g += 1;
    }
    Ok(g)
}

/// Which higher ranks `s` the gonality inequality is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum SRange {
    /// `s <= r_max_expected(g)`: exactly the ranks of expected maximal loci.
    #[default]
    MaximalRanks,
    /// `s <= floor(sqrt(g) - 1/2)`.
    HalfShift,
    /// `s <= ceil(sqrt(g) - 1)`, the coarse bound on expected maximal ranks.
    RankBound,
}

impl SRange {
    pub fn top(self, g: i64) -> i64 {
        match self {
            SRange::MaximalRanks => r_max_expected(g),
            SRange::HalfShift => half_shift_rank_bound(g),
            SRange::RankBound => rank_bound(g),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SRange::MaximalRanks => "maximal",
            SRange::HalfShift => "half",
            SRange::RankBound => "bound",
        }
    }
}

impl FromStr for SRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "maximal" => Ok(SRange::MaximalRanks),
            "half" => Ok(SRange::HalfShift),
            "bound" => Ok(SRange::RankBound),
            other => crate::error::domain(format!("unknown s-range {other:?}")),
        }
    }
}

/// `kappa(M^r_g) > kappa(M^s_g)` for every `s > r` in the chosen range.
pub fn ineq_holds_all_s(g: i64, r: i64, range: SRange) -> bool {
    let here = kappa_at_dmax(g, r);
    (r + 1..=range.top(g)).all(|s| here > kappa_at_dmax(g, s))
}

/// Result of scanning the genera relevant to `G(r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GScan {
    pub r: i64,
    pub start: i64,
    pub end: i64,
    pub failures: BTreeSet<i64>,
}

impl GScan {
    pub fn g_value(&self) -> i64 {
        self.failures.last().map_or(self.start, |g| g + 1)
    }
}

/// Smallest genus where `r` is the rank of an expected maximal locus.
pub fn scan_start(r: i64) -> i64 {
    (3..)
        .find(|&g| r_max_expected(g) >= r)
        .expect("ranks grow with genus")
}

/// Scans `g` from [`scan_start`] up to the exact genus threshold.
pub fn scan_g(r: i64, range: SRange) -> Result<GScan> {
    if r < 2 {
        return crate::error::domain(format!("G(r) needs r >= 2, got {r}"));
    }
    let start = scan_start(r);
    let end = genus_threshold(r)?.max(start);
    let mut failures = BTreeSet::new();
    for g in start..=end {
        if !ineq_holds_all_s(g, r, range) {
            failures.insert(g);
        }
    }
    Ok(GScan {
        r,
        start,
        end,
        failures,
    })
}

pub fn compute_g(r: i64, range: SRange) -> Result<i64> {
    Ok(scan_g(r, range)?.g_value())
}

/// Genera below `G(r)` where the inequality fails for some `s > r`.
pub fn exceptional_genera(r: i64, range: SRange) -> Result<BTreeSet<i64>> {
    let scan = scan_g(r, range)?;
    let bound = scan.g_value();
    Ok(scan.failures.into_iter().filter(|&g| g < bound).collect())
}
