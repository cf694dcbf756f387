// Loci with rho = -1: no two distinct ones share a gonality, so the kappa
// criterion separates every pair. Also lists the rho = -2 loci that the
// divisor criterion separates from rho = -1 loci of larger Clifford index.

use std::fmt::Write;

use bnloci::{divisor_noncontainment, kappa, noncontainment_by_kappa, Locus, Result};

fn loci_with_rho(g: i64, rho: i64) -> Vec<Locus> {
    (1..g)
        .flat_map(|r| (2 * r..g).map(move |d| Locus { g, r, d }))
        .filter(|l| l.rho() == rho)
        .collect()
}

pub fn run() -> Result<String> {
    let mut out = String::new();
    let mut pairs = 0;
    for g in 3..=120 {
        let loci = loci_with_rho(g, -1);
        for a in &loci {
            for b in &loci {
                if a != b {
                    assert_ne!(kappa(*a)?.value, kappa(*b)?.value, "{a} {b}");
                    let sep = noncontainment_by_kappa(*a, *b)?.is_some()
                        || noncontainment_by_kappa(*b, *a)?.is_some();
                    assert!(sep);
                    pairs += 1;
                }
            }
        }
    }
    writeln!(
        out,
        "rho = -1: {pairs} ordered pairs up to g = 120, all with distinct gonality"
    )
    .unwrap();

    for g in 10..=60 {
        for s in loci_with_rho(g, -2).into_iter().filter(|l| l.r >= 2) {
            for t in loci_with_rho(g, -1) {
                if let Some(c) = divisor_noncontainment(s, t)? {
                    writeln!(out, "{} not in {} ({:?})", c.source, c.target, c.rule).unwrap();
                }
            }
        }
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run()?);
    Ok(())
}
