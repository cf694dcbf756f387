//! Externally established non-containments, each with a citation.
//!
//! The file is either a JSON array of entries or one JSON object per line:
//!
//! ```json
//! {"g": 20, "source": [1, 10], "target": [2, 15], "cite": "..."}
//! ```

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bn::Locus;
use crate::error::{Error, Result};

const SHIPPED: &str = include_str!("../data/known.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LedgerEntry {
    pub g: i64,
    pub source: [i64; 2],
    pub target: [i64; 2],
    pub cite: String,
}

impl LedgerEntry {
    pub fn source_locus(&self) -> Locus {
        Locus {
            g: self.g,
            r: self.source[0],
            d: self.source[1],
        }
    }

    pub fn target_locus(&self) -> Locus {
        Locus {
            g: self.g,
            r: self.target[0],
            d: self.target[1],
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Ledger {
    entries: Vec<LedgerEntry>,
}

impl Ledger {
    pub fn empty() -> Self {
        Ledger::default()
    }

    /// The ledger bundled with the crate (`data/known.json`).
    pub fn shipped() -> Self {
        Ledger::parse(SHIPPED).expect("bundled ledger is valid")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Ledger(format!("cannot read {}: {e}", path.display())))?;
        Ledger::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim_start();
        let entries: Vec<LedgerEntry> = if trimmed.starts_with('[') {
            serde_json::from_str(trimmed).map_err(|e| Error::Ledger(e.to_string()))?
        } else {
            trimmed
                .lines()
                .enumerate()
                .filter(|(_, line)| !line.trim().is_empty())
                .map(|(i, line)| {
                    serde_json::from_str(line)
                        .map_err(|e| Error::Ledger(format!("line {}: {e}", i + 1)))
                })
                .collect::<Result<_>>()?
        };
        Ledger::from_entries(entries)
    }

    pub fn from_entries(entries: Vec<LedgerEntry>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for e in &entries {
            if e.g < 1 || e.source.iter().chain(&e.target).any(|&x| x < 0) {
                return Err(Error::Ledger(format!("invalid locus data in entry {e:?}")));
            }
            if e.cite.trim().is_empty() {
                return Err(Error::Ledger(format!("entry without citation: {e:?}")));
            }
            if !seen.insert((e.g, e.source, e.target)) {
                return Err(Error::Ledger(format!(
                    "duplicate entry for g = {}, {:?} -> {:?}",
                    e.g, e.source, e.target
                )));
            }
        }
        Ok(Ledger { entries })
    }

    pub fn entries(&self) -> &[LedgerEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The entry asserting `source` is not contained in `target`.
    pub fn lookup(&self, source: Locus, target: Locus) -> Option<&LedgerEntry> {
        self.entries
            .iter()
            .find(|e| e.source_locus() == source && e.target_locus() == target)
    }
}
