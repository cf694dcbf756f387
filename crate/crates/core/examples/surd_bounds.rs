// Exact comparisons of numbers `a + b sqrt(m)`, including cases where a
// double-precision evaluation cannot tell the sign.

use std::fmt::Write;

use bnloci::{surd_sign, Result, Surd};

pub fn run() -> Result<String> {
    let cases = [
        // 3 - sqrt(9) is exactly zero
        Surd::new(3, -1, 9)?,
        // sqrt(2) is just above 1.414
        Surd::new(-1414, 1000, 2)?,
        // 10^9 + 1 - sqrt(10^18 + 2 * 10^9): positive by 1 / (2 * 10^9) or so
        Surd::new(1_000_000_001, -1, 1_000_000_002_000_000_000)?,
        // 10^9 - sqrt(10^18 + 1): negative, invisible to f64
        Surd::new(1_000_000_000, -1, 1_000_000_000_000_000_001)?,
    ];
    let mut out = String::new();
    for x in cases {
        let exact = surd_sign(x)?;
        let float = x.approx();
        writeln!(
            out,
            "{} + {} sqrt({}): exact sign {exact}, f64 gives {float:e}",
            x.a, x.b, x.m
        )
        .unwrap();
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run()?);
    Ok(())
}
