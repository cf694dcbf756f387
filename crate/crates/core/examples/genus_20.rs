// Pairwise status of the expected maximal loci in genus 20 and 21, with and
// without the shipped ledger of external results.

use std::fmt::Write;

use bnloci::{genus_report, ConjectureStatus, Ledger, Result};

pub fn run() -> Result<String> {
    let mut out = String::new();
    for g in [20, 21] {
        for (name, ledger) in [
            ("no ledger", Ledger::empty()),
            ("shipped ledger", Ledger::shipped()),
        ] {
            let report = genus_report(g, &ledger)?;
            writeln!(out, "g = {g}, {name}").unwrap();
            for p in &report.pairs {
                writeln!(out, "  {} vs {}: {}", p.source, p.target, p.status.label()).unwrap();
            }
            match &report.conjecture_status {
                ConjectureStatus::Verified => writeln!(out, "  all pairs separated").unwrap(),
                ConjectureStatus::OpenPairs(open) => {
                    writeln!(out, "  {} open pair(s)", open.len()).unwrap()
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
