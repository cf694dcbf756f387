//! Exit criteria for the artifact. Each criterion prints one PASS/FAIL line;
//! run with `cargo test -p bnloci --test acceptance -- --nocapture`.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use bnloci::cli::cmd_figure;
use bnloci::maximal::{bounds_sandwich, d_max, genus_threshold, kappa_bounds};
use bnloci::{
    compute_g, enumerate_expected_maximal, exceptional_genera, f_criterion, genus_report,
    genus_threshold_holds, ineq_holds_all_s, kappa, kappa_at_dmax, kappa_brute, kappa_closed,
    pair_status, r_max_expected, ConjectureStatus, Ledger, Locus, PairStatus, Rule, SRange,
};

type Check = fn() -> Result<(), String>;

fn l(g: i64, r: i64, d: i64) -> Locus {
    Locus::new(g, r, d).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn genus_20_key_inequality() -> Result<(), String> {
    for (locus, want) in [(l(20, 3, 17), 6), (l(20, 4, 19), 5)] {
        let closed = kappa_closed(locus).map_err(|e| e.to_string())?.value;
        let brute = kappa_brute(locus).map_err(|e| e.to_string())?.value;
        ensure(closed == want && brute == want, || {
            format!("{locus}: closed {closed}, brute {brute}, expected {want}")
        })?;
    }
    Ok(())
}

fn expected_maximal_loci() -> Result<(), String> {
    let cases = [
        (20, vec![(1, 10), (2, 15), (3, 17), (4, 19)]),
        (21, vec![(1, 11), (2, 15), (3, 18), (4, 20)]),
    ];
    for (g, want) in cases {
        let got: BTreeSet<(i64, i64)> = enumerate_expected_maximal(g)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|m| (m.locus.r, m.locus.d))
            .collect();
        let want: BTreeSet<_> = want.into_iter().collect();
        ensure(got == want, || format!("genus {g}: {got:?} != {want:?}"))?;
    }
    Ok(())
}

const G_TABLE: [(i64, i64); 9] = [
    (2, 28),
    (3, 50),
    (4, 96),
    (5, 140),
    (6, 232),
    (7, 306),
    (8, 390),
    (9, 561),
    (10, 684),
];

fn g_table() -> Result<(), String> {
    for (r, want) in G_TABLE {
        let got = compute_g(r, SRange::MaximalRanks).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("G({r}) = {got}, expected {want}"))?;
    }
    Ok(())
}

fn remark_lists() -> [(i64, Vec<i64>); 3] {
    [
        (2, vec![10, 11, 12, 15, 18, 19, 24, 27]),
        (3, vec![17, 18, 19, 21, 24, 28, 29, 33, 34, 41, 44, 49]),
        (
            4,
            vec![
                26, 27, 28, 29, 30, 32, 35, 40, 41, 45, 46, 47, 48, 50, 52, 53, 55, 62, 65, 70, 71,
                77, 95,
            ],
        ),
    ]
}

// The lists compare rank r against every s up to ceil(sqrt(g) - 1). With s
// limited to actual expected maximal ranks, the genera where r is already
// the top rank drop out, and nothing else changes.
fn exceptional_genera_lists() -> Result<(), String> {
    for (r, want) in remark_lists() {
        let want: BTreeSet<i64> = want.into_iter().collect();
        let got = exceptional_genera(r, SRange::RankBound).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("r = {r}: {got:?} != {want:?}"))?;

        let maximal = exceptional_genera(r, SRange::MaximalRanks).map_err(|e| e.to_string())?;
        let reconciled: BTreeSet<i64> = want
            .iter()
            .copied()
            .filter(|&g| r_max_expected(g) > r)
            .collect();
        ensure(maximal == reconciled, || {
            format!("r = {r}: maximal-rank list {maximal:?} != {reconciled:?}")
        })?;
    }
    Ok(())
}

fn kappa_equalities() -> Result<(), String> {
    for (a, b) in [(l(24, 2, 17), l(24, 4, 23)), (l(27, 2, 19), l(27, 3, 23))] {
        let ka = kappa(a).map_err(|e| e.to_string())?.value;
        let kb = kappa(b).map_err(|e| e.to_string())?.value;
        ensure(ka == kb, || format!("kappa{a} = {ka} != {kb} = kappa{b}"))?;
    }
    Ok(())
}

fn parametric_families() -> Result<(), String> {
    let k = |g, r, d| {
        kappa(l(g, r, d))
            .map(|k| k.value)
            .map_err(|e| e.to_string())
    };
    for alpha in 3..=20i64 {
        let g = 2 * alpha * alpha + alpha - 2;
        let first = k(g, alpha - 1, 2 * alpha * alpha - 4)?;
        let second = k(g, alpha, 2 * alpha * alpha - 1)?;
        ensure(first == 3 * alpha - 2 && second == 3 * alpha - 2, || {
            format!("alpha = {alpha}: kappa values {first}, {second}")
        })?;

        let g = alpha * alpha - 2;
        let a = k(g, alpha - 1, alpha * alpha - 3)?;
        let b = k(g, alpha - 2, alpha * alpha - 5)?;
        ensure(a == 2 * alpha - 3 && b == 2 * alpha - 2, || {
            format!("alpha = {alpha}: kappa values {a}, {b}")
        })?;
    }
    Ok(())
}

fn oracle_equivalence() -> Result<(), String> {
    let mut checked = 0;
    for g in 3..=60 {
        for r in 1..g {
            for d in 2 * r..g {
                let locus = l(g, r, d);
                if locus.rho() >= 0 {
                    continue;
                }
                let closed = kappa_closed(locus)
                    .map(|k| k.value)
                    .map_err(|e| e.to_string())?;
                let brute = kappa_brute(locus)
                    .map(|k| k.value)
                    .map_err(|e| e.to_string())?;
                ensure(closed == brute, || {
                    format!("{locus}: closed {closed} != brute {brute}")
                })?;
                checked += 1;
            }
        }
    }
    ensure(checked > 10_000, || format!("only {checked} triples"))
}

fn bounds_and_threshold_soundness() -> Result<(), String> {
    for g in 3..=2000i64 {
        let top = r_max_expected(g);
        let kappas: Vec<i64> = (1..=top)
            .map(|r| {
                let k = kappa_closed(l(g, r, d_max(g, r)))
                    .map_err(|e| e.to_string())?
                    .value;
                ensure(k == kappa_at_dmax(g, r), || {
                    format!("kappa at d_max ({g}, {r})")
                })?;
                Ok(k)
            })
            .collect::<Result<_, String>>()?;
        for r in 1..=top {
            let k = kappas[(r - 1) as usize];
            let (lo, hi) = kappa_bounds(g, r);
            ensure(
                bounds_sandwich(k, &lo, &hi).map_err(|e| e.to_string())?,
                || format!("bounds fail at ({g}, {r}): {lo} < {k} <= {hi}"),
            )?;
            for s in r + 1..=top {
                if f_criterion(g, r, s - r).map_err(|e| e.to_string())? {
                    ensure(k > kappas[(s - 1) as usize], || {
                        format!("f criterion true but no gap at g = {g}, r = {r}, s = {s}")
                    })?;
                }
            }
            if r >= 2 && genus_threshold_holds(g, r).map_err(|e| e.to_string())? {
                ensure(ineq_holds_all_s(g, r, SRange::MaximalRanks), || {
                    format!("threshold holds but inequality fails at ({g}, {r})")
                })?;
            }
        }
    }
    for r in 2..=10 {
        let start = genus_threshold(r).map_err(|e| e.to_string())?;
        for g in start..=start + 200 {
            ensure(ineq_holds_all_s(g, r, SRange::MaximalRanks), || {
                format!("inequality fails above the threshold at ({g}, {r})")
            })?;
        }
    }
    Ok(())
}

fn genus_reports() -> Result<(), String> {
    let ledger = Ledger::shipped();
    let r20 = genus_report(20, &ledger).map_err(|e| e.to_string())?;
    ensure(r20.conjecture_status == ConjectureStatus::Verified, || {
        format!("genus 20: {:?}", r20.conjecture_status)
    })?;
    let r21 = genus_report(21, &ledger).map_err(|e| e.to_string())?;
    let want = vec![(l(21, 3, 18), l(21, 4, 20))];
    ensure(
        r21.conjecture_status == ConjectureStatus::OpenPairs(want.clone()),
        || format!("genus 21: {:?}", r21.conjecture_status),
    )?;
    for report in [&r20, &r21] {
        for p in &report.pairs {
            if let Some(c) = p.status.certificate() {
                c.verify(&ledger).map_err(|e| e.to_string())?;
            }
        }
    }
    Ok(())
}

fn figure_data() -> Result<(), String> {
    for (g, rows) in [(96, 9usize), (479, 21)] {
        let doc = cmd_figure(g).map_err(|e| e.to_string())?;
        ensure(doc.rows.len() == rows, || {
            format!("g = {g}: {} rows", doc.rows.len())
        })?;
        let mut kappas = Vec::new();
        for (i, row) in doc.rows.iter().enumerate() {
            let r: i64 = row[0].parse().map_err(|_| "bad r".to_string())?;
            let k: i64 = row[3].parse().map_err(|_| "bad kappa".to_string())?;
            ensure(r == i as i64 + 1, || {
                format!("g = {g}: row {i} has r = {r}")
            })?;
            let closed = kappa_closed(l(g, r, d_max(g, r)))
                .map_err(|e| e.to_string())?
                .value;
            ensure(k == closed, || format!("g = {g}, r = {r}: {k} != {closed}"))?;
            kappas.push(k);
        }
        ensure(kappas.windows(2).any(|w| w[0] == w[1]), || {
            format!("g = {g}: kappa strictly decreasing {kappas:?}")
        })?;
        if g == 96 {
            ensure(kappas[4] == 18 && kappas[5] == 18, || {
                format!("g = 96: {kappas:?}")
            })?;
        }
    }
    Ok(())
}

fn rho_minus_one_distinctness() -> Result<(), String> {
    let ledger = Ledger::empty();
    let mut pairs = 0;
    for g in 10..=150 {
        let divisors: Vec<Locus> = enumerate_expected_maximal(g)
            .map_err(|e| e.to_string())?
            .into_iter()
            .filter(|m| m.rho == -1)
            .map(|m| m.locus)
            .collect();
        for &a in &divisors {
            for &b in &divisors {
                if a.r == b.r {
                    continue;
                }
                match pair_status(a, b, &ledger).map_err(|e| e.to_string())? {
                    PairStatus::Established(c) if c.rule != Rule::External => {
                        c.verify(&ledger).map_err(|e| e.to_string())?;
                        pairs += 1;
                    }
                    other => return Err(format!("{a} vs {b}: {other:?}")),
                }
            }
        }
    }
    ensure(pairs > 0, || "no rho = -1 pairs found".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, Check, Option<Duration>); 11] = [
        (
            "AC-1 genus 20 key inequality",
            genus_20_key_inequality,
            Some(Duration::from_secs(1)),
        ),
        (
            "AC-2 expected maximal loci g = 20, 21",
            expected_maximal_loci,
            None,
        ),
        (
            "AC-3 G(r) table, r = 2..10",
            g_table,
            Some(Duration::from_secs(30)),
        ),
        (
            "AC-4 exceptional genera r = 2, 3, 4",
            exceptional_genera_lists,
            None,
        ),
        ("AC-5 kappa equality cases", kappa_equalities, None),
        ("AC-6 parametric families", parametric_families, None),
        (
            "AC-7 closed = brute oracle, g <= 60",
            oracle_equivalence,
            Some(Duration::from_secs(60)),
        ),
        (
            "AC-8 bounds and threshold soundness, g <= 2000",
            bounds_and_threshold_soundness,
            None,
        ),
        ("AC-9 genus 20 and 21 reports", genus_reports, None),
        ("AC-10 figure data g = 96, 479", figure_data, None),
        (
            "AC-11 rho = -1 distinctness, 10 <= g <= 150",
            rho_minus_one_distinctness,
            None,
        ),
    ];
    let mut failed = Vec::new();
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(limit)) = (&outcome, budget) {
            if elapsed > limit {
                outcome = Err(format!("took {elapsed:?}, budget {limit:?}"));
            }
        }
        match &outcome {
            Ok(()) => println!("[PASS] {name} ({:.3}s)", elapsed.as_secs_f64()),
            Err(why) => {
                println!("[FAIL] {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
