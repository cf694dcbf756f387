//! Exact computation of the gonality invariant of Brill-Noether loci,
//! the expected maximal loci of each genus, and auditable
//! non-containment certificates between them.
//!
//! All decisions use integer arithmetic; the only floating point values
//! are the `_approx` columns of plotting output.

pub mod bn;
pub mod certificate;
pub mod cli;
pub mod error;
pub mod exact;
pub mod ledger;
pub mod maximal;
pub mod selftest;

pub use bn::{
    clifford_index, kappa, kappa_brute, kappa_closed, r_prime, rho, rho_pflueger, serre_dual,
    trivial_specializations, KappaBranch, KappaResult, Locus,
};
pub use certificate::{
    classify_numeric_type, divisor_noncontainment, genus_report, noncontainment_by_dimension,
    noncontainment_by_kappa, pair_status, ConjectureStatus, GenusReport, NonContainmentCertificate,
    NumericType, PairStatus, Rule, Witness,
};
pub use error::{Error, Result};
pub use exact::{ceil_2sqrt, floor_neg_2sqrt, isqrt, surd_sign, Surd};
pub use ledger::{Ledger, LedgerEntry};
pub use maximal::{
    compute_g, d_max, enumerate_expected_maximal, exceptional_genera, f_criterion,
    genus_threshold_holds, ineq_holds_all_s, is_expected_maximal, kappa_at_dmax, kappa_bounds,
    r_max_expected, rho_at_dmax, MaximalLocusRecord, SRange,
};
