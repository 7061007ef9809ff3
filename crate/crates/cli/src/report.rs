//! Serializable report types. Field names are part of the output contract.

use serde::{Deserialize, Serialize};

use modinv_core::coinvariants::{CoinvariantReport, LeadTermCertificate};
use modinv_core::invariants::{DegreeRow, NoetherReport};

use crate::catalog::EntryMode;
use crate::expected::BetaRule;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub degree: usize,
    pub dim_poly: u64,
    pub dim_inv: usize,
    pub dim_dec: usize,
    pub dim_indec: usize,
}

impl From<&DegreeRow> for TableRow {
    fn from(r: &DegreeRow) -> Self {
        Self {
            degree: r.degree,
            dim_poly: r.dim_poly,
            dim_inv: r.dim_inv,
            dim_dec: r.dim_dec,
            dim_indec: r.dim_indec,
        }
    }
}

pub fn table_of(report: &NoetherReport) -> Vec<TableRow> {
    report.rows.iter().map(TableRow::from).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoinvariantsJson {
    pub hilbert_function: Vec<u64>,
    pub top_degree: usize,
    pub bound: usize,
}

impl From<&CoinvariantReport> for CoinvariantsJson {
    fn from(r: &CoinvariantReport) -> Self {
        Self {
            hilbert_function: r.hilbert_function.clone(),
            top_degree: r.top_degree,
            bound: r.bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeadTermsJson {
    pub a_monomials: usize,
    pub a_monomials_checked: usize,
    pub sampled: bool,
    pub orbit_products_checked: usize,
    pub staircase_counts: Vec<u64>,
    pub staircase_top_degree: usize,
    pub non_staircase_checked: u64,
    pub top_degree: usize,
    pub bound: usize,
    /// Certificate and dimension route give the same Hilbert function and
    /// top degree.
    pub agrees_with_dimensions: bool,
}

impl LeadTermsJson {
    pub fn new(c: &LeadTermCertificate, dims: Option<&CoinvariantReport>) -> Self {
        let agrees = dims.is_none_or(|d| {
            d.hilbert_function == c.hilbert_function && d.top_degree == c.top_degree && d.bound == c.bound
        });
        Self {
            a_monomials: c.a_monomials,
            a_monomials_checked: c.a_monomials_checked,
            sampled: c.sampled,
            orbit_products_checked: c.orbit_products_checked,
            staircase_counts: c.staircase_counts.clone(),
            staircase_top_degree: c.staircase_top_degree,
            non_staircase_checked: c.non_staircase_checked,
            top_degree: c.top_degree,
            bound: c.bound,
            agrees_with_dimensions: agrees,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    /// "V3" or "V4": the non-V_2 summand the witness is built on.
    pub family: String,
    pub k: usize,
    pub degree: usize,
    pub expected_degree: usize,
    pub invariant: bool,
    pub indecomposable: bool,
}

impl WitnessJson {
    pub fn ok(&self) -> bool {
        self.invariant && self.indecomposable && self.degree == self.expected_degree
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificatesJson {
    pub lead_terms: Option<LeadTermsJson>,
    pub witnesses: Vec<WitnessJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedJson {
    pub value: usize,
    pub rule: BetaRule,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Mismatch,
    TheoremViolation,
    Skipped,
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryReport {
    pub spec: String,
    pub p: u32,
    pub blocks: Vec<usize>,
    pub mode: EntryMode,
    pub beta: Option<usize>,
    pub bound: Option<usize>,
    pub table: Vec<TableRow>,
    pub coinvariants: Option<CoinvariantsJson>,
    pub certificates: CertificatesJson,
    pub expected: Option<ExpectedJson>,
    /// computed beta == expected beta, when both exist
    #[serde(rename = "match")]
    pub matches: Option<bool>,
    pub status: Status,
    pub note: Option<String>,
}

impl EntryReport {
    pub fn empty(spec: &str, p: u32, mode: EntryMode) -> Self {
        Self {
            spec: spec.to_string(),
            p,
            blocks: Vec::new(),
            mode,
            beta: None,
            bound: None,
            table: Vec::new(),
            coinvariants: None,
            certificates: CertificatesJson::default(),
            expected: None,
            matches: None,
            status: Status::Pass,
            note: None,
        }
    }
}

/// Wall-clock microseconds per phase of one entry.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryTiming {
    pub spec: String,
    pub p: u32,
    pub noether_us: u64,
    pub coinvariants_us: u64,
    pub certificate_us: u64,
    pub witnesses_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Environment {
    pub version: String,
    pub os: String,
    pub arch: String,
    pub column_cap: usize,
    pub max_p: Option<u32>,
}

/// Everything except `timings` is a deterministic function of the config.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub entries: Vec<EntryReport>,
    pub pass: bool,
    pub environment: Environment,
    pub timings: Vec<EntryTiming>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// The report with the timing section emptied.
    pub fn without_timings(&self) -> Self {
        Self {
            timings: Vec::new(),
            ..self.clone()
        }
    }

    pub fn exit_code(&self) -> i32 {
        exit_code_for(self.entries.iter().map(|e| e.status))
    }
}

/// 1 beats 2 beats 0; skipped entries are not failures.
pub fn exit_code_for(statuses: impl IntoIterator<Item = Status>) -> i32 {
    let mut code = 0;
    for s in statuses {
        match s {
            Status::Mismatch | Status::TheoremViolation => return 1,
            Status::Invalid => code = 2,
            Status::Pass | Status::Skipped => {}
        }
    }
    code
}

pub fn write_table_csv<W: std::io::Write>(rows: &[TableRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    if rows.is_empty() {
        w.write_record(["degree", "dim_poly", "dim_inv", "dim_dec", "dim_indec"])?;
    }
    w.flush()?;
    Ok(())
}
