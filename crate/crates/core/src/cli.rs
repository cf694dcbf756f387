//! Command implementations behind the `bnloci` binary. Each command returns
//! an [`OutputDocument`] that renders as an aligned table, JSON, or CSV.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::bn::{clifford_index, kappa, kappa_brute, rho, rho_pflueger, KappaResult, Locus};
use crate::certificate::{genus_report, pair_status, ConjectureStatus, PairStatus, Witness};
use crate::error::Error;
use crate::ledger::Ledger;
use crate::maximal::{
    d_max, enumerate_expected_maximal, exceptional_genera, r_max_expected, scan_g, SRange,
};
use crate::selftest::{self, Fault};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(CliError::Usage(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    Closed,
    Brute,
    #[default]
    Both,
}

impl FromStr for Method {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "closed" => Ok(Method::Closed),
            "brute" => Ok(Method::Brute),
            "both" => Ok(Method::Both),
            other => Err(CliError::Usage(format!("unknown method {other:?}"))),
        }
    }
}

/// Failure of a command, carrying its process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Lib(Error),
    Io(String),
}

impl CliError {
    /// 1 usage or input, 2 domain, 3 internal inconsistency or overflow.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Lib(Error::Ledger(_)) => 1,
            CliError::Lib(Error::Domain(_)) => 2,
            CliError::Lib(Error::Inconsistency(_) | Error::Overflow(_)) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// A command's structured result plus its tabular view.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputDocument {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Extra lines shown under the table in table format only.
    pub notes: Vec<String>,
}

impl OutputDocument {
    fn new(command: &str, inputs: Value, result: Value, header: &[&str]) -> Self {
        OutputDocument {
            command: command.to_string(),
            inputs,
            result,
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn row<I, S>(mut self, cells: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        self.rows
            .push(cells.into_iter().map(|c| c.to_string()).collect());
        self
    }

    pub fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Table => Ok(self.to_table()),
        }
    }

    pub fn to_json(&self) -> CliResult<String> {
        let doc = json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
        });
        let mut s = serde_json::to_string_pretty(&doc).map_err(|e| CliError::Io(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn to_csv(&self) -> CliResult<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| CliError::Io(e.to_string());
        w.write_record(&self.header).map_err(io)?;
        for row in &self.rows {
            w.write_record(row).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
    }

    pub fn to_table(&self) -> String {
        let cols = self.header.len();
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate().take(cols) {
                widths[i] = widths[i].max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = String::new();
        out.push_str(&line(&self.header));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        for note in &self.notes {
            out.push_str(note);
            out.push('\n');
        }
        out
    }
}

fn approx(x: f64) -> String {
    format!("{x:.4}")
}

fn short(l: Locus) -> String {
    format!("({},{},{})", l.g, l.r, l.d)
}

fn kappa_json(k: &KappaResult) -> Value {
    serde_json::to_value(k).expect("kappa result serializes")
}

pub fn cmd_rho(g: i64, r: i64, d: i64) -> CliResult<OutputDocument> {
    Locus::new(g, r, d)?;
    let v = rho(g, r, d);
    Ok(OutputDocument::new("rho", json!({"g": g, "r": r, "d": d}), json!(v), &["rho"]).row([v]))
}

pub fn cmd_gamma(r: i64, d: i64) -> CliResult<OutputDocument> {
    if r < 0 || d < 0 {
        return Err(Error::Domain(format!("gamma needs r, d >= 0; got ({r}, {d})")).into());
    }
    let v = clifford_index(r, d);
    Ok(OutputDocument::new("gamma", json!({"r": r, "d": d}), json!(v), &["gamma"]).row([v]))
}

pub fn cmd_rhok(g: i64, r: i64, d: i64, k: i64) -> CliResult<OutputDocument> {
    Locus::new(g, r, d)?;
    let v = rho_pflueger(g, r, d, k)?;
    let inputs = json!({"g": g, "r": r, "d": d, "k": k});
    Ok(OutputDocument::new("rhok", inputs, json!(v), &["rho_k"]).row([v]))
}

pub fn cmd_kappa(g: i64, r: i64, d: i64, method: Method) -> CliResult<OutputDocument> {
    let locus = Locus::new(g, r, d)?;
    let inputs = json!({"g": g, "r": r, "d": d, "method": format!("{method:?}").to_lowercase()});
    let header = ["method", "kappa", "branch", "rho", "gamma"];
    let row = |name: &str, k: &KappaResult| {
        vec![
            name.to_string(),
            k.value.to_string(),
            format!("{:?}", k.branch),
            k.rho.to_string(),
            k.gamma.to_string(),
        ]
    };
    let mut doc;
    match method {
        Method::Closed => {
            let k = kappa(locus)?;
            doc = OutputDocument::new(
                "kappa",
                inputs,
                json!({"value": k.value, "closed": kappa_json(&k)}),
                &header,
            );
            doc.rows.push(row("closed", &k));
        }
        Method::Brute => {
            let k = kappa_brute(locus)?;
            doc = OutputDocument::new(
                "kappa",
                inputs,
                json!({"value": k.value, "brute": kappa_json(&k)}),
                &header,
            );
            doc.rows.push(row("brute", &k));
        }
        Method::Both => {
            let closed = kappa(locus)?;
            let brute = kappa_brute(locus)?;
            if closed.value != brute.value {
                return Err(Error::Inconsistency(format!(
                    "closed kappa {} != brute kappa {} for {locus}",
                    closed.value, brute.value
                ))
                .into());
            }
            let result = json!({
                "value": closed.value,
                "closed": kappa_json(&closed),
                "brute": kappa_json(&brute),
            });
            doc = OutputDocument::new("kappa", inputs, result, &header);
            doc.rows.push(row("closed", &closed));
            doc.rows.push(row("brute", &brute));
        }
    }
    Ok(doc)
}

pub fn cmd_dmax(g: i64, r: i64) -> CliResult<OutputDocument> {
    if g < 2 || r < 1 {
        return Err(Error::Domain(format!("d_max needs g >= 2, r >= 1; got ({g}, {r})")).into());
    }
    let v = d_max(g, r);
    Ok(OutputDocument::new("dmax", json!({"g": g, "r": r}), json!(v), &["d_max"]).row([v]))
}

pub fn cmd_maximal(g: i64) -> CliResult<OutputDocument> {
    let records = enumerate_expected_maximal(g)?;
    let header = [
        "r",
        "d",
        "rho",
        "kappa",
        "branch",
        "lower_bound_approx",
        "upper_bound_approx",
    ];
    let result: Vec<Value> = records
        .iter()
        .map(|m| {
            json!({
                "r": m.locus.r,
                "d": m.locus.d,
                "rho": m.rho,
                "kappa": m.kappa.value,
                "branch": m.kappa.branch,
                "lower_bound": m.lower,
                "upper_bound": m.upper,
                "lower_bound_approx": m.lower.approx(),
                "upper_bound_approx": m.upper.approx(),
            })
        })
        .collect();
    let mut doc = OutputDocument::new("maximal", json!({"g": g}), json!(result), &header);
    for m in &records {
        doc = doc.row([
            m.locus.r.to_string(),
            m.locus.d.to_string(),
            m.rho.to_string(),
            m.kappa.value.to_string(),
            format!("{:?}", m.kappa.branch),
            approx(m.lower.approx()),
            approx(m.upper.approx()),
        ]);
    }
    Ok(doc)
}

fn witness_summary(w: &Witness) -> String {
    match w {
        Witness::KappaGap { k, target_kappa } => format!("kappa {k} > {target_kappa}"),
        Witness::Dimension {
            source_rho,
            target_rho,
        } => {
            format!("rho {source_rho} vs {target_rho}")
        }
        Witness::DivisorCriterion {
            source_gamma,
            target_gamma,
            ceil_term,
        } => {
            format!("gamma {target_gamma} > {source_gamma} + {ceil_term} - 2")
        }
        Witness::EquidimensionalFlip { reverse } => {
            format!("reverse {:?}; rho = -1 loci irreducible", reverse.rule)
        }
        Witness::External { cite } => cite.clone(),
    }
}

fn status_row(source: Locus, target: Locus, status: &PairStatus) -> Vec<String> {
    let (rule, witness) = match status {
        PairStatus::Established(c) => (format!("{:?}", c.rule), witness_summary(&c.witness)),
        _ => (String::new(), String::new()),
    };
    let label = match status {
        PairStatus::Established(_) => "Established".to_string(),
        other => other.label(),
    };
    vec![short(source), short(target), label, rule, witness]
}

fn open_summary(open: &[(Locus, Locus)]) -> String {
    let parts: Vec<String> = open
        .iter()
        .map(|(s, t)| format!("({},{}) not in? ({},{})", s.r, s.d, t.r, t.d))
        .collect();
    format!("OpenPairs: {}", parts.join(", "))
}

pub fn cmd_report(g: i64, ledger: &Ledger, ledger_path: Option<&str>) -> CliResult<OutputDocument> {
    let report = genus_report(g, ledger)?;
    let header = ["source", "target", "status", "rule", "witness"];
    let status = match &report.conjecture_status {
        ConjectureStatus::Verified => "Verified".to_string(),
        ConjectureStatus::OpenPairs(open) => open_summary(open),
    };
    let result = serde_json::to_value(&report).map_err(|e| CliError::Io(e.to_string()))?;
    let mut doc = OutputDocument::new(
        "report",
        json!({"g": g, "ledger": ledger_path}),
        result,
        &header,
    );
    for p in &report.pairs {
        doc.rows.push(status_row(p.source, p.target, &p.status));
    }
    doc.notes.push(format!("conjecture_status: {status}"));
    Ok(doc)
}

pub fn cmd_check(source: Locus, target: Locus, ledger: &Ledger) -> CliResult<OutputDocument> {
    let status = pair_status(source, target, ledger)?;
    if let Some(c) = status.certificate() {
        c.verify(ledger)?;
    }
    let inputs = json!({"source": source, "target": target});
    let result = serde_json::to_value(&status).map_err(|e| CliError::Io(e.to_string()))?;
    let header = ["source", "target", "status", "rule", "witness"];
    let mut doc = OutputDocument::new("check", inputs, result, &header);
    doc.rows.push(status_row(source, target, &status));
    Ok(doc)
}

pub fn cmd_gtable(r_min: i64, r_max: i64, range: SRange) -> CliResult<OutputDocument> {
    if r_min < 2 || r_max < r_min {
        return Err(CliError::Usage(format!(
            "need 2 <= r-min <= r-max, got {r_min}..{r_max}"
        )));
    }
    let scans = (r_min..=r_max)
        .map(|r| scan_g(r, range))
        .collect::<Result<Vec<_>, _>>()?;
    let result: Vec<Value> = scans
        .iter()
        .map(|s| json!({"r": s.r, "G": s.g_value(), "scan_start": s.start, "scan_end": s.end}))
        .collect();
    let inputs = json!({"r_min": r_min, "r_max": r_max, "s_range": range.name()});
    let mut doc = OutputDocument::new("gtable", inputs, json!(result), &["r", "G"]);
    for s in &scans {
        doc = doc.row([s.r, s.g_value()]);
    }
    Ok(doc)
}

pub fn cmd_exceptional(r: i64, range: SRange) -> CliResult<OutputDocument> {
    if r < 2 {
        return Err(CliError::Usage(format!(
            "exceptional genera need r >= 2, got {r}"
        )));
    }
    let genera = exceptional_genera(r, range)?;
    let g_value = scan_g(r, range)?.g_value();
    let inputs = json!({"r": r, "s_range": range.name()});
    let result = json!({"G": g_value, "genera": genera});
    let mut doc = OutputDocument::new("exceptional", inputs, result, &["g"]);
    for g in &genera {
        doc = doc.row([g]);
    }
    Ok(doc)
}

/// kappa at `d_max` for every rank, with the bounds as decimals for plotting.
pub fn cmd_figure(g: i64) -> CliResult<OutputDocument> {
    if g < 3 {
        return Err(Error::Domain(format!("figure needs g >= 3, got {g}")).into());
    }
    let records = enumerate_expected_maximal(g)?;
    debug_assert_eq!(records.len() as i64, r_max_expected(g));
    let header = [
        "r",
        "d_max",
        "rho",
        "kappa",
        "lower_bound_approx",
        "upper_bound_approx",
    ];
    let result: Vec<Value> = records
        .iter()
        .map(|m| {
            json!({
                "r": m.locus.r,
                "d_max": m.locus.d,
                "rho": m.rho,
                "kappa": m.kappa.value,
                "lower_bound_approx": m.lower.approx(),
                "upper_bound_approx": m.upper.approx(),
            })
        })
        .collect();
    let mut doc = OutputDocument::new("figure", json!({"g": g}), json!(result), &header);
    for m in &records {
        doc = doc.row([
            m.locus.r.to_string(),
            m.locus.d.to_string(),
            m.rho.to_string(),
            m.kappa.value.to_string(),
            approx(m.lower.approx()),
            approx(m.upper.approx()),
        ]);
    }
    Ok(doc)
}

/// Runs the self-test suites; the flag is `true` when every suite passed.
pub fn cmd_selftest(gmax: i64, fault: Option<Fault>) -> CliResult<(OutputDocument, bool)> {
    if gmax < 10 {
        return Err(CliError::Usage(format!(
            "selftest needs gmax >= 10, got {gmax}"
        )));
    }
    let report = selftest::run(gmax, fault)?;
    let result = serde_json::to_value(&report).map_err(|e| CliError::Io(e.to_string()))?;
    let mut doc = OutputDocument::new(
        "selftest",
        json!({"gmax": gmax}),
        result,
        &["suite", "checked", "failed", "status"],
    );
    for s in &report.suites {
        let status = if s.failures.is_empty() {
            "pass"
        } else {
            "FAIL"
        };
        doc = doc.row([
            s.name.clone(),
            s.checked.to_string(),
            s.failed.to_string(),
            status.into(),
        ]);
    }
    for s in &report.suites {
        for f in &s.failures {
            doc.notes.push(format!("{}: {f}", s.name));
        }
    }
    let passed = report.passed();
    doc.notes.push(if passed {
        "all suites passed".into()
    } else {
        "FAILURES".into()
    });
    Ok((doc, passed))
}

/// Parses `g,r,d`.
pub fn parse_locus(text: &str) -> CliResult<Locus> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let nums = parts
        .iter()
        .map(|p| p.parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Usage(format!("bad locus {text:?}: {e}")))?;
    match nums[..] {
        [g, r, d] => Locus::new(g, r, d).map_err(|e| CliError::Usage(e.to_string())),
        _ => Err(CliError::Usage(format!(
            "locus must be g,r,d; got {text:?}"
        ))),
    }
}
