//! Non-containment certificates between Brill-Noether loci and per-genus
//! reports on the maximality of the expected maximal loci.
//!
//! Every certificate carries enough witness data to be re-checked from
//! scratch by [`NonContainmentCertificate::verify`]. The engine never
//! claims a containment other than the trivial ones; a pair without a
//! certificate is reported as open.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bn::{kappa, trivial_specializations, Locus};
use crate::error::{domain, Error, Result};
use crate::exact::ceil_2sqrt;
use crate::ledger::Ledger;
use crate::maximal::{enumerate_expected_maximal, MaximalLocusRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    KappaGap,
    Dimension,
    DivisorCriterion,
    EquidimensionalFlip,
    External,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    /// The general curve of gonality `k` lies in the source but not the target.
    KappaGap {
        k: i64,
        target_kappa: i64,
    },
    /// Codimensions `-source_rho < -target_rho <= 3`.
    Dimension {
        source_rho: i64,
        target_rho: i64,
    },
    /// `target_gamma > source_gamma + ceil_term - 2` against a divisor target.
    DivisorCriterion {
        source_gamma: i64,
        target_gamma: i64,
        ceil_term: i64,
    },
    /// Both loci are irreducible divisors; the reverse pair is settled.
    EquidimensionalFlip {
        reverse: Box<NonContainmentCertificate>,
    },
    External {
        cite: String,
    },
}

impl Witness {
    pub fn rule(&self) -> Rule {
        match self {
            Witness::KappaGap { .. } => Rule::KappaGap,
            Witness::Dimension { .. } => Rule::Dimension,
            Witness::DivisorCriterion { .. } => Rule::DivisorCriterion,
            Witness::EquidimensionalFlip { .. } => Rule::EquidimensionalFlip,
            Witness::External { .. } => Rule::External,
        }
    }
}

/// The claim "`source` is not contained in `target`".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonContainmentCertificate {
    pub source: Locus,
    pub target: Locus,
    pub rule: Rule,
    pub witness: Witness,
}

fn failed<T>(cert: &NonContainmentCertificate, why: impl std::fmt::Display) -> Result<T> {
    Err(Error::Inconsistency(format!(
        "certificate {} not in {} ({:?}) fails: {why}",
        cert.source, cert.target, cert.rule
    )))
}

impl NonContainmentCertificate {
    fn new(source: Locus, target: Locus, witness: Witness) -> Self {
        NonContainmentCertificate {
            source,
            target,
            rule: witness.rule(),
            witness,
        }
    }

    /// Re-checks the claim from the witness, recomputing every invariant.
    /// External certificates must match an entry of `ledger`.
    pub fn verify(&self, ledger: &Ledger) -> Result<()> {
        let (s, t) = (self.source, self.target);
        if s.g != t.g {
            return failed(self, "genus mismatch");
        }
        if self.rule != self.witness.rule() {
            return failed(self, "rule does not match witness");
        }
        if !s.is_admissible() || !t.is_admissible() {
            return failed(self, "rho must be negative on both sides");
        }
        match &self.witness {
            Witness::KappaGap { k, target_kappa } => {
                let ks = kappa(s)?.value;
                let kt = kappa(t)?.value;
                if ks != *k || kt != *target_kappa {
                    return failed(self, format!("recomputed kappa ({ks}, {kt})"));
                }
                if ks <= kt {
                    return failed(self, "no kappa gap");
                }
            }
            Witness::Dimension {
                source_rho,
                target_rho,
            } => {
                if (s.rho(), t.rho()) != (*source_rho, *target_rho) {
                    return failed(self, "recomputed rho differs");
                }
                if !dimension_rule_applies(s.rho(), t.rho()) {
                    return failed(self, "codimensions do not separate");
                }
            }
            Witness::DivisorCriterion {
                source_gamma,
                target_gamma,
                ceil_term,
            } => {
                if (s.gamma(), t.gamma()) != (*source_gamma, *target_gamma) {
                    return failed(self, "recomputed gamma differs");
                }
                if *ceil_term != ceil_2sqrt(-s.rho())? {
                    return failed(self, "recomputed ceil(2 sqrt(-rho)) differs");
                }
                if !divisor_rule_applies(s, t)? {
                    return failed(self, "divisor criterion does not hold");
                }
            }
            Witness::EquidimensionalFlip { reverse } => {
                if s.rho() != -1 || t.rho() != -1 || s == t {
                    return failed(self, "flip needs two distinct rho = -1 loci");
                }
                if reverse.source != t || reverse.target != s {
                    return failed(self, "reverse certificate is for a different pair");
                }
                reverse.verify(ledger)?;
            }
            Witness::External { cite } => match ledger.lookup(s, t) {
                Some(entry) if entry.cite == *cite => {}
                _ => return failed(self, "no matching ledger entry"),
            },
        }
        Ok(())
    }
}

fn same_genus(a: Locus, b: Locus) -> Result<()> {
    if a.g != b.g {
        return domain(format!("loci {a} and {b} have different genera"));
    }
    Ok(())
}

fn admissible(a: Locus) -> Result<()> {
    if !a.is_admissible() {
        return domain(format!("{a} has rho = {} >= 0", a.rho()));
    }
    Ok(())
}

/// kappa(source) > kappa(target) separates the loci.
pub fn noncontainment_by_kappa(
    source: Locus,
    target: Locus,
) -> Result<Option<NonContainmentCertificate>> {
    same_genus(source, target)?;
    let ks = kappa(source)?.value;
    let kt = kappa(target)?.value;
    Ok((ks > kt).then(|| {
        NonContainmentCertificate::new(
            source,
            target,
            Witness::KappaGap {
                k: ks,
                target_kappa: kt,
            },
        )
    }))
}

fn dimension_rule_applies(source_rho: i64, target_rho: i64) -> bool {
    source_rho < 0 && -source_rho < -target_rho && -target_rho <= 3
}

/// Codimension is exactly `-rho` for `-3 <= rho <= -1`, so a locus of
/// smaller codimension cannot sit inside one of larger codimension.
pub fn noncontainment_by_dimension(
    source: Locus,
    target: Locus,
) -> Result<Option<NonContainmentCertificate>> {
    same_genus(source, target)?;
    admissible(source)?;
    admissible(target)?;
    let (rs, rt) = (source.rho(), target.rho());
    Ok(dimension_rule_applies(rs, rt).then(|| {
        NonContainmentCertificate::new(
            source,
            target,
            Witness::Dimension {
                source_rho: rs,
                target_rho: rt,
            },
        )
    }))
}

fn divisor_rule_applies(source: Locus, target: Locus) -> Result<bool> {
    Ok(target.rho() == -1
        && source.r >= 2
        && source.in_second_case()
        && target.gamma() > source.gamma() + ceil_2sqrt(-source.rho())? - 2)
}

/// Non-containment in a Brill-Noether divisor (`rho(target) = -1`). Rank-1
/// sources are left to [`noncontainment_by_kappa`].
pub fn divisor_noncontainment(
    source: Locus,
    target: Locus,
) -> Result<Option<NonContainmentCertificate>> {
    same_genus(source, target)?;
    if target.rho() != -1 {
        return domain(format!(
            "divisor criterion needs rho(target) = -1, got {}",
            target.rho()
        ));
    }
    admissible(source)?;
    if !divisor_rule_applies(source, target)? {
        return Ok(None);
    }
    let witness = Witness::DivisorCriterion {
        source_gamma: source.gamma(),
        target_gamma: target.gamma(),
        ceil_term: ceil_2sqrt(-source.rho())?,
    };
    Ok(Some(NonContainmentCertificate::new(
        source, target, witness,
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NumericType {
    Identical,
    SerreDual,
    DistinctInvariants,
}

pub fn classify_numeric_type(a: Locus, b: Locus) -> Result<NumericType> {
    same_genus(a, b)?;
    if a == b {
        return Ok(NumericType::Identical);
    }
    if a.serre_dual().is_ok_and(|dual| dual == b) {
        return Ok(NumericType::SerreDual);
    }
    Ok(NumericType::DistinctInvariants)
}

/// Every locus reachable from `locus` by repeated trivial containments with
/// degree at most `2g - 2`.
pub fn trivial_closure(locus: Locus) -> BTreeSet<Locus> {
    let max_degree = 2 * locus.g - 2;
    let mut seen = BTreeSet::new();
    let mut stack = vec![locus];
    while let Some(next) = stack.pop() {
        for up in trivial_specializations(next) {
            if up.d <= max_degree && seen.insert(up) {
                stack.push(up);
            }
        }
    }
    seen
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairStatus {
    Established(NonContainmentCertificate),
    TrivialContainment,
    Open,
}

impl PairStatus {
    pub fn certificate(&self) -> Option<&NonContainmentCertificate> {
        match self {
            PairStatus::Established(c) => Some(c),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            PairStatus::Established(c) => format!("Established({:?})", c.rule),
            PairStatus::TrivialContainment => "TrivialContainment".to_string(),
            PairStatus::Open => "Open".to_string(),
        }
    }
}

fn first_certificate(
    source: Locus,
    target: Locus,
    ledger: &Ledger,
    allow_flip: bool,
) -> Result<Option<NonContainmentCertificate>> {
    if let Some(c) = noncontainment_by_kappa(source, target)? {
        return Ok(Some(c));
    }
    if let Some(c) = noncontainment_by_dimension(source, target)? {
        return Ok(Some(c));
    }
    if target.rho() == -1 {
        if let Some(c) = divisor_noncontainment(source, target)? {
            return Ok(Some(c));
        }
    }
    if allow_flip && source.rho() == -1 && target.rho() == -1 && source != target {
        if let Some(reverse) = first_certificate(target, source, ledger, false)? {
            let witness = Witness::EquidimensionalFlip {
                reverse: Box::new(reverse),
            };
            return Ok(Some(NonContainmentCertificate::new(
                source, target, witness,
            )));
        }
    }
    Ok(ledger.lookup(source, target).map(|entry| {
        NonContainmentCertificate::new(
            source,
            target,
            Witness::External {
                cite: entry.cite.clone(),
            },
        )
    }))
}

/// Settles the ordered pair with the first applicable rule, in the fixed
/// order kappa gap, dimension, divisor criterion, equidimensional flip,
/// external ledger.
pub fn pair_status(source: Locus, target: Locus, ledger: &Ledger) -> Result<PairStatus> {
    same_genus(source, target)?;
    admissible(source)?;
    admissible(target)?;
    if trivial_closure(source).contains(&target) {
        return Ok(PairStatus::TrivialContainment);
    }
    Ok(match first_certificate(source, target, ledger, true)? {
        Some(c) => PairStatus::Established(c),
        None => PairStatus::Open,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEntry {
    pub source: Locus,
    pub target: Locus,
    pub status: PairStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConjectureStatus {
    Verified,
    OpenPairs(Vec<(Locus, Locus)>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusReport {
    pub g: i64,
    pub loci: Vec<MaximalLocusRecord>,
    pub pairs: Vec<PairEntry>,
    pub conjecture_status: ConjectureStatus,
}

impl GenusReport {
    pub fn status_of(&self, source: Locus, target: Locus) -> Option<&PairStatus> {
        self.pairs
            .iter()
            .find(|p| p.source == source && p.target == target)
            .map(|p| &p.status)
    }

    pub fn open_pairs(&self) -> Vec<(Locus, Locus)> {
        self.pairs
            .iter()
            .filter(|p| p.status == PairStatus::Open)
            .map(|p| (p.source, p.target))
            .collect()
    }
}

/// Evaluates every ordered pair of distinct expected maximal loci of genus `g`.
pub fn genus_report(g: i64, ledger: &Ledger) -> Result<GenusReport> {
    let loci = enumerate_expected_maximal(g)?;
    let mut pairs = Vec::new();
    for a in &loci {
        for b in &loci {
            if a.locus == b.locus {
                continue;
            }
            let status = pair_status(a.locus, b.locus, ledger)?;
            pairs.push(PairEntry {
                source: a.locus,
                target: b.locus,
                status,
            });
        }
    }
    let open: Vec<_> = pairs
        .iter()
        .filter(|p| p.status == PairStatus::Open)
        .map(|p| (p.source, p.target))
        .collect();
    let conjecture_status = if open.is_empty() {
        ConjectureStatus::Verified
    } else {
        ConjectureStatus::OpenPairs(open)
    };
    Ok(GenusReport {
        g,
        loci,
        pairs,
        conjecture_status,
    })
}
