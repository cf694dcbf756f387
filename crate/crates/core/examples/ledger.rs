// Load a ledger of externally established non-containments and use it to
// close pairs that the numeric criteria leave open.

use std::fmt::Write;

use bnloci::{pair_status, Ledger, Locus, Result};

pub fn run() -> Result<String> {
    let text = r#"
{"g": 21, "source": [3, 18], "target": [4, 20], "cite": "hypothetical entry for illustration"}
"#;
    let custom = Ledger::parse(text)?;
    let source = Locus::new(21, 3, 18)?;
    let target = Locus::new(21, 4, 20)?;
    let mut out = String::new();
    for (name, ledger) in [("shipped", Ledger::shipped()), ("custom", custom)] {
        let status = pair_status(source, target, &ledger)?;
        if let Some(cert) = status.certificate() {
            cert.verify(&ledger)?;
        }
        writeln!(
            out,
            "{name} ({} entries): {source} vs {target}: {}",
            ledger.entries().len(),
            status.label()
        )
        .unwrap();
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run()?);
    Ok(())
}
