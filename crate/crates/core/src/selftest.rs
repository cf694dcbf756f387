//! Invariant suites run by `bnloci selftest`.

use serde::{Deserialize, Serialize};

use crate::bn::{
    clifford_index, kappa, kappa_brute, kappa_closed, rho, rho_pflueger, rho_pflueger_vertex, Locus,
};
use crate::certificate::{classify_numeric_type, genus_report, NumericType, Witness};
use crate::error::Result;
use crate::exact::isqrt;
use crate::ledger::Ledger;
use crate::maximal::{
    bounds_sandwich, d_max, kappa_at_dmax, kappa_bounds, r_max_expected, rho_at_dmax,
};

/// Deliberate corruption used as a negative control.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Fault {
    /// Adds one to the closed-formula kappa of the first triple compared.
    FlipKappa,
}

const MAX_REPORTED: usize = 10;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &str) -> Self {
        SuiteResult {
            name: name.to_string(),
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_REPORTED {
                self.failures.push(what());
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub gmax: i64,
    pub suites: Vec<SuiteResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.failed == 0)
    }
}

/// Admissible triples with `2r <= d <= g - 1` for `3 <= g <= gmax`.
fn admissible_triples(gmax: i64) -> impl Iterator<Item = Locus> {
    (3..=gmax).flat_map(|g| {
        (1..g).flat_map(move |r| {
            (2 * r..g).filter_map(move |d| (rho(g, r, d) < 0).then_some(Locus { g, r, d }))
        })
    })
}

fn isqrt_suite() -> SuiteResult {
    let mut s = SuiteResult::new("isqrt_floor");
    for n in 0..=100_000i128 {
        let r = isqrt(n).unwrap_or(-1);
        s.check(r >= 0 && r * r <= n && n < (r + 1) * (r + 1), || {
            format!("isqrt({n}) = {r}")
        });
    }
    s
}

fn quarter_shift_suite() -> SuiteResult {
    let mut s = SuiteResult::new("quarter_shift_lemma");
    let ceil_sqrt = |x: i128| {
        let r = isqrt(x).unwrap_or(0);
        if r * r == x {
            r
        } else {
            r + 1
        }
    };
    for n in 1..=100_000i128 {
        s.check(ceil_sqrt(4 * n) == ceil_sqrt(4 * n - 1), || {
            format!("n = {n}")
        });
    }
    s
}

fn oracle_suite(gmax: i64, fault: Option<Fault>) -> SuiteResult {
    let mut s = SuiteResult::new("kappa_closed_vs_brute");
    let mut flip = fault == Some(Fault::FlipKappa);
    for locus in admissible_triples(gmax) {
        let closed = kappa_closed(locus).map(|k| k.value);
        let brute = kappa_brute(locus).map(|k| k.value);
        let closed = closed.map(|v| if std::mem::take(&mut flip) { v + 1 } else { v });
        s.check(closed.is_ok() && closed == brute, || {
            format!("{locus:?}: closed {closed:?} vs brute {brute:?}")
        });
    }
    s
}

fn rho_k_suite(gmax: i64) -> SuiteResult {
    let mut s = SuiteResult::new("rho_k_shape");
    for locus in admissible_triples(gmax) {
        let Locus { g, r, d } = locus;
        let values: Vec<i64> = (2..=g + 1)
            .map(|k| rho_pflueger(g, r, d, k).unwrap_or(i64::MIN))
            .collect();
        s.check(values.windows(2).all(|w| w[0] >= w[1]), || {
            format!("{locus:?} not monotone")
        });
        s.check(
            rho_pflueger(g, r, d, g + 1).ok() == Some(locus.rho()),
            || format!("{locus:?} does not stabilize at k = g + 1"),
        );
        s.check(
            rho_pflueger(g, r, d, 2).is_ok_and(|v| v >= clifford_index(r, d)),
            || format!("{locus:?}: rho_2 < gamma"),
        );
        for k in 2..=g + 1 {
            s.check(
                rho_pflueger(g, r, d, k).ok() == rho_pflueger_vertex(g, r, d, k).ok(),
                || format!("{locus:?} k = {k}: vertex evaluation differs"),
            );
        }
    }
    s
}

fn serre_suite(gmax: i64) -> SuiteResult {
    let mut s = SuiteResult::new("serre_invariance");
    for g in 3..=gmax.min(30) {
        for r in 1..g {
            for d in 2 * r..=2 * g - 2 {
                let locus = Locus { g, r, d };
                if locus.rho() >= 0 {
                    continue;
                }
                let Ok(dual) = locus.serre_dual() else {
                    continue;
                };
                s.check(dual.rho() == locus.rho(), || {
                    format!("{locus:?}: rho changes")
                });
                s.check(dual.serre_dual().ok() == Some(locus), || {
                    format!("{locus:?}: not involutive")
                });
                for k in 2..=(g + 3) / 2 {
                    s.check(locus.rho_k(k).ok() == dual.rho_k(k).ok(), || {
                        format!("{locus:?} k = {k}: rho_k differs on the dual")
                    });
                }
                if let Ok(k) = kappa(locus) {
                    s.check(kappa_brute(locus).is_ok_and(|b| b.value == k.value), || {
                        format!("{locus:?}: dispatch kappa differs from brute force")
                    });
                }
            }
        }
    }
    s
}

fn classification_suite(gmax: i64) -> SuiteResult {
    let mut s = SuiteResult::new("same_rho_gamma");
    for g in 3..=gmax.min(40) {
        let loci: Vec<Locus> = (0..=g)
            .flat_map(|r| (0..=2 * g - 2).map(move |d| Locus { g, r, d }))
            .collect();
        for a in &loci {
            for b in &loci {
                if a.rho() == b.rho() && a.gamma() == b.gamma() {
                    let t = classify_numeric_type(*a, *b);
                    s.check(
                        t.is_ok_and(|t| t != NumericType::DistinctInvariants),
                        || format!("{a:?} and {b:?} share rho and gamma"),
                    );
                }
            }
        }
    }
    s
}

fn maximal_suite(gmax: i64) -> SuiteResult {
    let mut s = SuiteResult::new("maximal_formulas");
    for g in 3..=gmax * 5 {
        for r in 1..=r_max_expected(g) {
            let locus = Locus {
                g,
                r,
                d: d_max(g, r),
            };
            s.check(rho_at_dmax(g, r) == locus.rho(), || {
                format!("rho at d_max {locus:?}")
            });
            let k = kappa(locus).map(|k| k.value);
            s.check(k == Ok(kappa_at_dmax(g, r)), || {
                format!("kappa at d_max {locus:?}")
            });
            let (lo, hi) = kappa_bounds(g, r);
            s.check(
                bounds_sandwich(kappa_at_dmax(g, r), &lo, &hi).unwrap_or(false),
                || format!("bounds {locus:?}"),
            );
        }
    }
    s
}

fn certificate_suite(gmax: i64) -> SuiteResult {
    let mut s = SuiteResult::new("certificate_reverification");
    let ledger = Ledger::shipped();
    for g in 10..=gmax {
        let Ok(report) = genus_report(g, &ledger) else {
            s.check(false, || format!("genus {g}: report failed"));
            continue;
        };
        for p in &report.pairs {
            let Some(cert) = p.status.certificate() else {
                continue;
            };
            s.check(cert.verify(&ledger).is_ok(), || {
                format!("genus {g}: {cert:?}")
            });
            if let Witness::KappaGap { k, target_kappa } = cert.witness {
                let mut bad = cert.clone();
                bad.witness = Witness::KappaGap {
                    k: k + 1,
                    target_kappa,
                };
                s.check(bad.verify(&ledger).is_err(), || {
                    format!("corrupted {bad:?} verified")
                });
            }
        }
    }
    s
}

/// Runs every suite for genera up to `gmax`.
pub fn run(gmax: i64, fault: Option<Fault>) -> Result<SelftestReport> {
    let suites = vec![
        isqrt_suite(),
        quarter_shift_suite(),
        oracle_suite(gmax, fault),
        rho_k_suite(gmax),
        serre_suite(gmax),
        classification_suite(gmax),
        maximal_suite(gmax),
        certificate_suite(gmax),
    ];
    Ok(SelftestReport { gmax, suites })
}
