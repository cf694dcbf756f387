//! Brill-Noether numbers, Pflueger's refinement for k-gonal curves, and the
//! gonality invariant kappa: the largest k for which the general k-gonal
//! curve of genus g carries a g^r_d.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, inconsistent, Result};
use crate::exact::floor_neg_2sqrt;

/// A Brill-Noether locus `M^r_{g,d}`, named by genus, rank and degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Locus {
    pub g: i64,
    pub r: i64,
    pub d: i64,
}

impl Locus {
    pub fn new(g: i64, r: i64, d: i64) -> Result<Self> {
        if g < 1 || r < 0 || d < 0 {
            return domain(format!(
                "locus needs g >= 1, r >= 0, d >= 0; got ({g}, {r}, {d})"
            ));
        }
        Ok(Locus { g, r, d })
    }

    pub fn rho(&self) -> i64 {
        rho(self.g, self.r, self.d)
    }

    pub fn gamma(&self) -> i64 {
        clifford_index(self.r, self.d)
    }

    pub fn r_prime(&self) -> i64 {
        r_prime(self.g, self.r, self.d)
    }

    pub fn rho_k(&self, k: i64) -> Result<i64> {
        rho_pflueger(self.g, self.r, self.d, k)
    }

    /// The standing assumption for kappa: the locus is a proper subvariety.
    pub fn is_admissible(&self) -> bool {
        self.rho() < 0
    }

    pub fn serre_dual(&self) -> Result<Locus> {
        serre_dual(self.g, self.r, self.d)
    }

    /// `floor(d/r) + d >= g + 1`: selects the second case of the closed formula.
    pub fn in_second_case(&self) -> bool {
        self.r >= 1 && self.g < self.d / self.r + self.d
    }
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M^{}_{{{},{}}}", self.r, self.g, self.d)
    }
}

/// `g - (r+1)(g - d + r)`.
pub fn rho(g: i64, r: i64, d: i64) -> i64 {
    g - (r + 1) * (g - d + r)
}

/// The Clifford index `d - 2r`.
pub fn clifford_index(r: i64, d: i64) -> i64 {
    d - 2 * r
}

/// `min(r, g - d + r - 1)`; equals `r` exactly when `d <= g - 1`.
pub fn r_prime(g: i64, r: i64, d: i64) -> i64 {
    r.min(g - d + r - 1)
}

/// Pflueger's Brill-Noether number for the general k-gonal curve, by direct
/// enumeration over `l` in `0..=r'`.
pub fn rho_pflueger(g: i64, r: i64, d: i64, k: i64) -> Result<i64> {
    if k < 2 {
        return domain(format!("gonality k must be at least 2, got {k}"));
    }
    let top = r_prime(g, r, d);
    (0..=top)
        .map(|l| rho(g, r - l, d) - l * k)
        .max()
        .map_or_else(|| domain(format!("r' = {top} < 0 for ({g}, {r}, {d})")), Ok)
}

/// Evaluates the same maximum through the vertex of the parabola
/// `rho + (g - k - gamma + 1) l - l^2`, clamped to `[0, r']`.
pub fn rho_pflueger_vertex(g: i64, r: i64, d: i64, k: i64) -> Result<i64> {
    if k < 2 {
        return domain(format!("gonality k must be at least 2, got {k}"));
    }
    let top = r_prime(g, r, d);
    if top < 0 {
        return domain(format!("r' = {top} < 0 for ({g}, {r}, {d})"));
    }
    // ceil((g - k - gamma + 1) / 2)
    let twice_vertex = g - k - clifford_index(r, d) + 1;
    let l = (twice_vertex + 1).div_euclid(2).clamp(0, top);
    Ok(rho(g, r - l, d) - l * k)
}

/// Which route produced a kappa value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KappaBranch {
    /// `floor(d/r)`, used when `g + 1 > floor(d/r) + d`.
    ClosedFirstCase,
    /// `g + 1 - gamma + floor(-2 sqrt(-rho))`.
    ClosedSecondCase,
    BruteForce,
    /// Closed formula evaluated on the Serre dual locus.
    SerreDualReduction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KappaResult {
    pub value: i64,
    pub branch: KappaBranch,
    pub rho: i64,
    pub gamma: i64,
}

/// Gonality of the general curve of genus `g`.
pub fn general_gonality(g: i64) -> i64 {
    (g + 3) / 2
}

/// The largest `k` in `[2, floor((g+3)/2)]` with `rho_k >= 0`, found by
/// scanning every `k` in the range.
pub fn kappa_brute(locus: Locus) -> Result<KappaResult> {
    let Locus { g, r, d } = locus;
    let rho = locus.rho();
    let gamma = locus.gamma();
    if rho >= 0 {
        return domain(format!(
            "kappa undefined outside rho<0: {locus} has rho = {rho}"
        ));
    }
    if gamma < 0 {
        return domain(format!("Clifford index d - 2r = {gamma} < 0 for {locus:?}"));
    }
    if g - d + r < 1 {
        return domain(format!("g - d + r < 1 for {locus:?}"));
    }
    let cap = general_gonality(g);
    let mut best = None;
    let mut went_negative = false;
    for k in 2..=cap {
        let value = rho_pflueger(g, r, d, k)?;
        if value >= 0 {
            if went_negative {
                return inconsistent(format!("rho_k not monotone in k for {locus:?} at k = {k}"));
            }
            best = Some(k);
        } else {
            went_negative = true;
        }
    }
    match best {
        Some(k) if k == cap => inconsistent(format!(
            "rho_k >= 0 at the general gonality {cap} although rho < 0 for {locus:?}"
        )),
        Some(value) => Ok(KappaResult {
            value,
            branch: KappaBranch::BruteForce,
            rho,
            gamma,
        }),
        None => inconsistent(format!("no k >= 2 with rho_k >= 0 for {locus:?}")),
    }
}

/// Closed formula for kappa, valid for `d <= g - 1`.
pub fn kappa_closed(locus: Locus) -> Result<KappaResult> {
    let Locus { g, r, d } = locus;
    let rho = locus.rho();
    let gamma = locus.gamma();
    if rho >= 0 {
        return domain(format!(
            "kappa undefined outside rho<0: {locus} has rho = {rho}"
        ));
    }
    if r < 1 {
        return domain("closed kappa formula needs r >= 1");
    }
    if d > g - 1 {
        return domain(format!(
            "closed kappa formula needs d <= g - 1, got {locus:?}"
        ));
    }
    if gamma < 0 {
        return domain(format!("Clifford index d - 2r = {gamma} < 0 for {locus:?}"));
    }
    let q = d / r;
    if g + 1 > q + d {
        Ok(KappaResult {
            value: q,
            branch: KappaBranch::ClosedFirstCase,
            rho,
            gamma,
        })
    } else {
        let value = g + 1 - gamma + floor_neg_2sqrt(-rho)?;
        Ok(KappaResult {
            value,
            branch: KappaBranch::ClosedSecondCase,
            rho,
            gamma,
        })
    }
}

/// kappa by the cheapest applicable route: closed formula for `d <= g - 1`,
/// the closed formula on the Serre dual otherwise, brute force as a last
/// resort.
pub fn kappa(locus: Locus) -> Result<KappaResult> {
    let rho = locus.rho();
    if rho >= 0 {
        return domain(format!(
            "kappa undefined outside rho<0: {locus} has rho = {rho}"
        ));
    }
    let result = if locus.d < locus.g {
        kappa_closed(locus)?
    } else {
        match locus.serre_dual() {
            Ok(dual) if dual.d < dual.g && dual.r >= 1 && dual.gamma() >= 0 => {
                let on_dual = kappa_closed(dual)?;
                KappaResult {
                    value: on_dual.value,
                    branch: KappaBranch::SerreDualReduction,
                    rho,
                    gamma: locus.gamma(),
                }
            }
            _ => kappa_brute(locus)?,
        }
    };
    #[cfg(debug_assertions)]
    if result.branch != KappaBranch::BruteForce {
        if let Ok(brute) = kappa_brute(locus) {
            debug_assert_eq!(
                result.value, brute.value,
                "kappa routes disagree on {locus:?}"
            );
        }
    }
    Ok(result)
}

/// `(g, g - d + r - 1, 2g - 2 - d)`.
pub fn serre_dual(g: i64, r: i64, d: i64) -> Result<Locus> {
    let dual_r = g - d + r - 1;
    let dual_d = 2 * g - 2 - d;
    if dual_r < 0 || dual_d < 0 {
        return domain(format!(
            "Serre dual of ({g}, {r}, {d}) has negative rank or degree ({dual_r}, {dual_d})"
        ));
    }
    Ok(Locus {
        g,
        r: dual_r,
        d: dual_d,
    })
}

/// One step of each trivial containment: add a basepoint, and remove a
/// non-basepoint when that keeps rho negative.
pub fn trivial_specializations(locus: Locus) -> Vec<Locus> {
    let Locus { g, r, d } = locus;
    let mut out = vec![Locus { g, r, d: d + 1 }];
    if r >= 1 && d >= 1 && rho(g, r - 1, d - 1) < 0 {
        out.push(Locus {
            g,
            r: r - 1,
            d: d - 1,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn l(g: i64, r: i64, d: i64) -> Locus {
        Locus::new(g, r, d).unwrap()
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(20, 0, 17), 17);
        assert_eq!(rho(20, 3, 17), -4);
        assert_eq!(rho(20, 4, 19), -5);
    }

    #[test]
    fn gamma_and_r_prime() {
        assert_eq!(clifford_index(3, 17), 11);
        assert_eq!(clifford_index(0, 9), 9);
        assert_eq!(clifford_index(4, 19), 11);
        assert_eq!(r_prime(20, 3, 17), 3);
        assert_eq!(r_prime(5, 2, 5), 1);
        for d in 0..20 {
            assert_eq!(r_prime(20, 0, d), 0);
        }
    }

    #[test]
    fn rho_pflueger_examples() {
        assert_eq!(rho_pflueger(20, 3, 17, 6).unwrap(), 0);
        assert_eq!(rho_pflueger(20, 3, 17, 7).unwrap(), -2);
        assert_eq!(rho_pflueger(20, 3, 17, 100).unwrap(), -4);
        assert!(matches!(rho_pflueger(20, 3, 17, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn kappa_brute_examples() {
        assert_eq!(kappa_brute(l(20, 3, 17)).unwrap().value, 6);
        assert_eq!(kappa_brute(l(20, 4, 19)).unwrap().value, 5);
        let k = kappa_brute(l(20, 1, 10)).unwrap();
        assert_eq!((k.value, k.branch), (10, KappaBranch::BruteForce));
    }

    #[test]
    fn kappa_brute_rejects_nonnegative_rho() {
        let err = kappa_brute(l(20, 3, 18)).unwrap_err();
        assert!(matches!(err, Error::Domain(ref m) if m.contains("rho<0")));
    }

    #[test]
    fn kappa_closed_examples() {
        let k = kappa_closed(l(20, 3, 17)).unwrap();
        assert_eq!(
            (k.value, k.branch, k.rho, k.gamma),
            (6, KappaBranch::ClosedSecondCase, -4, 11)
        );
        let k = kappa_closed(l(20, 1, 10)).unwrap();
        assert_eq!((k.value, k.branch), (10, KappaBranch::ClosedFirstCase));
        let k = kappa_closed(l(34, 2, 24)).unwrap();
        assert_eq!((k.value, k.branch), (12, KappaBranch::ClosedSecondCase));
    }

    #[test]
    fn kappa_closed_rejects_large_degree() {
        assert!(matches!(kappa_closed(l(20, 5, 21)), Err(Error::Domain(_))));
        assert!(matches!(kappa_closed(l(20, 3, 18)), Err(Error::Domain(_))));
    }

    #[test]
    fn kappa_dispatch() {
        assert_eq!(kappa(l(20, 4, 19)).unwrap().value, 5);
        assert_eq!(kappa(l(24, 2, 17)).unwrap().value, 8);
        assert_eq!(kappa(l(24, 4, 23)).unwrap().value, 8);
        assert_eq!(kappa(l(27, 3, 23)).unwrap().value, 9);
        assert_eq!(kappa(l(27, 2, 19)).unwrap().value, 9);
        let dual = kappa(l(20, 5, 21)).unwrap();
        assert_eq!(
            (dual.value, dual.branch),
            (6, KappaBranch::SerreDualReduction)
        );
    }

    #[test]
    fn kappa_empty_locus_is_a_domain_error() {
        // d < 2r: Clifford's theorem makes the locus empty.
        assert!(matches!(kappa(l(20, 5, 8)), Err(Error::Domain(_))));
    }

    #[test]
    fn serre_dual_examples() {
        assert_eq!(serre_dual(20, 3, 17).unwrap(), l(20, 5, 21));
        assert_eq!(serre_dual(4, 1, 3).unwrap(), l(4, 1, 3));
        assert_eq!(serre_dual(21, 4, 20).unwrap(), l(21, 4, 20));
        assert!(serre_dual(5, 0, 9).is_err());
        let back = l(20, 5, 21).serre_dual().unwrap();
        assert_eq!(back, l(20, 3, 17));
    }

    #[test]
    fn trivial_specialization_examples() {
        assert_eq!(trivial_specializations(l(20, 4, 19)), vec![l(20, 4, 20)]);
        assert_eq!(
            trivial_specializations(l(21, 4, 19)),
            vec![l(21, 4, 20), l(21, 3, 18)]
        );
        for d in 1..30 {
            assert_eq!(trivial_specializations(l(30, 1, d)), vec![l(30, 1, d + 1)]);
        }
    }

    #[test]
    fn locus_validation() {
        assert!(Locus::new(0, 1, 1).is_err());
        assert!(Locus::new(5, -1, 1).is_err());
        assert!(Locus::new(5, 1, -1).is_err());
        assert_eq!(l(20, 3, 17).to_string(), "M^3_{20,17}");
    }
}
