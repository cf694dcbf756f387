// The genus bound G(r) beyond which the gonality inequality holds for every
// rank, and the exceptional genera below it.

use std::fmt::Write;

use bnloci::maximal::{compute_g, exceptional_genera, SRange};
use bnloci::Result;

pub fn run() -> Result<String> {
    let mut out = String::from("r\tG(r)\n");
    for r in 2..=10 {
        writeln!(out, "{r}\t{}", compute_g(r, SRange::MaximalRanks)?).unwrap();
    }
    for r in 2..=4 {
        let genera: Vec<String> = exceptional_genera(r, SRange::RankBound)?
            .iter()
            .map(|g| g.to_string())
            .collect();
        writeln!(out, "exceptional genera for r = {r}: {}", genera.join(" ")).unwrap();
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run()?);
    Ok(())
}
