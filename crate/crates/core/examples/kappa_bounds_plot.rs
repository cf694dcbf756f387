// Gonality of every expected maximal locus in a genus, against the two
// linear bounds in r. Prints CSV suitable for plotting.

use std::fmt::Write;

use bnloci::{enumerate_expected_maximal, Result};

pub fn table(g: i64) -> Result<String> {
    let mut out = String::from("g,r,d,kappa,lower,upper\n");
    for rec in enumerate_expected_maximal(g)? {
        writeln!(
            out,
            "{g},{},{},{},{:.4},{:.4}",
            rec.locus.r,
            rec.locus.d,
            rec.kappa.value,
            rec.lower.approx(),
            rec.upper.approx()
        )
        .unwrap();
    }
    Ok(out)
}

pub fn run() -> Result<String> {
    Ok(table(96)? + &table(479)?)
}

fn main() -> Result<()> {
    print!("{}", run()?);
    Ok(())
}
