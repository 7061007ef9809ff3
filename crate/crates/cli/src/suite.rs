//! Runs a catalog end to end and collects an [`SuiteReport`].
//!
//! Entries are evaluated one after another; every phase is deterministic,
//! so the report (minus its timing section) depends only on the config.

use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use modinv_core::action::{is_invariant, lower_bound_witness, WitnessFamily};
use modinv_core::coinvariants::{coinvariant_profile_with, leadterm_certificate_with};
use modinv_core::invariants::{
    is_indecomposable_with, noether_number_with, noether_scan_in, search_bound, EngineConfig, InvariantEngine,
    NoetherReport, DEFAULT_COLUMN_CAP,
};
use modinv_core::{Error, ModuleSpec};

use crate::catalog::{builtin_catalog, CatalogEntry, EntryMode};
use crate::expected::expected_beta;
use crate::report::{
    table_of, CoinvariantsJson, EntryReport, EntryTiming, Environment, ExpectedJson, LeadTermsJson, Status,
    SuiteReport, WitnessJson,
};

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Drop entries whose prime exceeds this.
    pub max_p: Option<u32>,
    /// `None` runs the built-in catalog.
    pub entries: Option<Vec<CatalogEntry>>,
    pub column_cap: usize,
    pub output: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            max_p: None,
            entries: None,
            column_cap: DEFAULT_COLUMN_CAP,
            output: None,
        }
    }
}

/// Status an engine error maps to.
pub fn status_of(err: &Error) -> Status {
    match err {
        Error::SizeBudget { .. } => Status::Skipped,
        Error::InvalidPrime(_) | Error::Syntax { .. } | Error::BlockTooLarge { .. } => Status::Invalid,
        _ => Status::TheoremViolation,
    }
}

/// If the reduced module is (k-1)V_2 + V_n for a witness family, return it.
pub fn witness_shape(reduced: &ModuleSpec) -> Option<(WitnessFamily, usize)> {
    let blocks = reduced.blocks();
    let k = blocks.len();
    let twos = blocks.iter().filter(|&&d| d == 2).count();
    if k == 0 || twos != k - 1 {
        return None;
    }
    match blocks.iter().find(|&&d| d != 2) {
        Some(3) => Some((WitnessFamily::V3, k)),
        Some(4) => Some((WitnessFamily::V4, k)),
        _ => None,
    }
}

fn family_name(f: WitnessFamily) -> String {
    format!("V{}", f.block())
}

/// Builds the witness for the family and checks it with `engine` when the
/// engine's module has the same block order, otherwise with a fresh one.
pub fn check_witness(
    engine: &mut InvariantEngine,
    family: WitnessFamily,
    k: usize,
) -> modinv_core::Result<WitnessJson> {
    let p = engine.spec().p();
    let (wspec, h) = lower_bound_witness(p, k, family)?;
    let invariant = is_invariant(&h);
    let degree = h.homogeneous_degree().unwrap_or(0) as usize;
    let indecomposable = if !invariant {
        false
    } else if **engine.spec() == *wspec {
        is_indecomposable_with(engine, &h)?
    } else {
        let mut own = InvariantEngine::new(Arc::clone(&wspec), engine.config());
        is_indecomposable_with(&mut own, &h)?
    };
    Ok(WitnessJson {
        family: family_name(family),
        k,
        degree,
        expected_degree: family.expected_degree(p, k),
        invariant,
        indecomposable,
    })
}

/// Noether scan of the reduced module, keeping the engine for witnesses.
fn scan(spec: &ModuleSpec, config: EngineConfig) -> modinv_core::Result<(NoetherReport, Option<InvariantEngine>)> {
    let reduced = spec.reduced();
    if reduced.k() == 0 {
        return Ok((noether_number_with(spec, config)?, None));
    }
    let bound = search_bound(&reduced);
    let mut engine = InvariantEngine::new(Arc::new(reduced), config);
    let mut report = noether_scan_in(&mut engine, bound)?;
    report.spec = spec.clone();
    Ok((report, Some(engine)))
}

fn us_since(t: Instant) -> u64 {
    t.elapsed().as_micros() as u64
}

pub fn evaluate_entry(entry: &CatalogEntry, config: EngineConfig) -> (EntryReport, EntryTiming) {
    let mut rep = EntryReport::empty(&entry.module, entry.p, entry.mode);
    let mut timing = EntryTiming {
        spec: entry.module.clone(),
        p: entry.p,
        ..EntryTiming::default()
    };
    let spec = match ModuleSpec::parse(&entry.module, entry.p) {
        Ok(s) => s,
        Err(e) => {
            rep.status = Status::Invalid;
            rep.note = Some(e.to_string());
            return (rep, timing);
        }
    };
    rep.spec = spec.to_string();
    rep.blocks = spec.blocks().to_vec();
    let expected = expected_beta(&spec);
    rep.expected = Some(ExpectedJson {
        value: expected.value,
        rule: expected.rule,
    });
    if let Err(e) = run_phases(&spec, entry.mode, config, &mut rep, &mut timing) {
        rep.status = status_of(&e);
        rep.note = Some(e.to_string());
        return (rep, timing);
    }
    let matched = rep.beta == Some(expected.value);
    rep.matches = Some(matched);
    let witnesses_ok = rep.certificates.witnesses.iter().all(WitnessJson::ok);
    let leads_ok = rep.certificates.lead_terms.as_ref().is_none_or(|l| l.agrees_with_dimensions);
    rep.status = if !witnesses_ok || !leads_ok {
        Status::TheoremViolation
    } else if !matched {
        Status::Mismatch
    } else {
        Status::Pass
    };
    (rep, timing)
}

fn run_phases(
    spec: &ModuleSpec,
    mode: EntryMode,
    config: EngineConfig,
    rep: &mut EntryReport,
    timing: &mut EntryTiming,
) -> modinv_core::Result<()> {
    let t = Instant::now();
    let (noether, engine) = scan(spec, config)?;
    timing.noether_us = us_since(t);
    rep.beta = Some(noether.beta);
    rep.bound = Some(noether.search_bound);
    rep.table = table_of(&noether);

    if let Some(mut engine) = engine {
        if let Some((family, k)) = witness_shape(engine.spec()) {
            let t = Instant::now();
            rep.certificates.witnesses.push(check_witness(&mut engine, family, k)?);
            timing.witnesses_us = us_since(t);
        }
    }

    if mode == EntryMode::Full {
        let t = Instant::now();
        let coinv = coinvariant_profile_with(spec, config)?;
        timing.coinvariants_us = us_since(t);
        rep.coinvariants = Some(CoinvariantsJson::from(&coinv));
        if !spec.reduced_blocks().is_empty() {
            let t = Instant::now();
            let cert = leadterm_certificate_with(spec, config)?;
            timing.certificate_us = us_since(t);
            rep.certificates.lead_terms = Some(LeadTermsJson::new(&cert, Some(&coinv)));
        }
    }
    Ok(())
}

pub fn run_suite(config: &SuiteConfig) -> std::io::Result<SuiteReport> {
    let entries = config.entries.clone().unwrap_or_else(builtin_catalog);
    let engine_config = EngineConfig {
        column_cap: config.column_cap,
    };
    let mut reports = Vec::new();
    let mut timings = Vec::new();
    for entry in entries.iter().filter(|e| config.max_p.is_none_or(|m| e.p <= m)) {
        let (r, t) = evaluate_entry(entry, engine_config);
        reports.push(r);
        timings.push(t);
    }
    let pass = reports.iter().all(|r| matches!(r.status, Status::Pass | Status::Skipped));
    let report = SuiteReport {
        entries: reports,
        pass,
        environment: Environment {
            version: env!("CARGO_PKG_VERSION").to_string(),
            os: std::env::consts::OS.to_string(),
            arch: std::env::consts::ARCH.to_string(),
            column_cap: config.column_cap,
            max_p: config.max_p,
        },
        timings,
    };
    if let Some(path) = &config.output {
        std::fs::write(path, report.to_json())?;
    }
    Ok(report)
}
