//! Module catalogs: the built-in one and JSON catalog files.

use std::path::Path;

use serde::{Deserialize, Serialize};

/// How much of the pipeline an entry runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryMode {
    /// Noether scan, coinvariants, lead-term certificate and witnesses.
    #[default]
    Full,
    /// Noether scan and witnesses only.
    Limited,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub p: u32,
    pub module: String,
    #[serde(default)]
    pub mode: EntryMode,
}

impl CatalogEntry {
    pub fn new(p: u32, module: &str) -> Self {
        Self {
            p,
            module: module.to_string(),
            mode: EntryMode::Full,
        }
    }

    pub fn limited(p: u32, module: &str) -> Self {
        Self {
            mode: EntryMode::Limited,
            ..Self::new(p, module)
        }
    }
}

/// Covers every closed-form rule and both witness families.
pub fn builtin_catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for m in ["V2", "2V2", "3V2", "4V2"] {
        out.push(CatalogEntry::new(2, m));
    }
    for m in ["V2", "V3", "2V2", "3V2", "V2+V3", "2V3", "V1+V3"] {
        out.push(CatalogEntry::new(3, m));
    }
    for m in ["V2", "V3", "V4", "V5", "V2+V4"] {
        out.push(CatalogEntry::new(5, m));
    }
    out.push(CatalogEntry::limited(5, "2V2+V4"));
    out
}

#[derive(Debug)]
pub enum CatalogError {
    Io(std::io::Error),
    Json(serde_json::Error),
}

impl std::fmt::Display for CatalogError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CatalogError::Io(e) => write!(f, "cannot read catalog: {e}"),
            CatalogError::Json(e) => write!(f, "malformed catalog: {e}"),
        }
    }
}

impl std::error::Error for CatalogError {}

/// Reads a JSON array of `{"p": 3, "module": "V2+V3", "mode": "full"}`.
pub fn load_catalog(path: &Path) -> Result<Vec<CatalogEntry>, CatalogError> {
    let text = std::fs::read_to_string(path).map_err(CatalogError::Io)?;
    serde_json::from_str(&text).map_err(CatalogError::Json)
}
