//! Argument parsing and dispatch. [`run`] returns the process exit code:
//! 0 success, 1 theorem violation or mismatch, 2 invalid input, 3 size budget.

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use modinv_core::coinvariants::{coinvariant_profile_with, leadterm_certificate_with};
use modinv_core::invariants::{invariant_basis_with, noether_number_with, EngineConfig, InvariantEngine, DEFAULT_COLUMN_CAP};
use modinv_core::{DegreeConstraint, Error, ModuleSpec};

use crate::catalog::{load_catalog, EntryMode};
use crate::expected::{expected_beta, BetaRule};
use crate::report::{exit_code_for, table_of, write_table_csv, EntryReport, ExpectedJson, Status, TableRow};
use crate::suite::{run_suite, status_of, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "modinv", version, about = "Exact invariants of Z/p acting on F_p-modules")]
struct Cli {
    /// Largest number of monomials allowed in one multidegree block.
    #[arg(long, global = true, default_value_t = DEFAULT_COLUMN_CAP)]
    column_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ModuleArgs {
    /// The prime p.
    #[arg(long)]
    p: u32,
    /// Module, e.g. "2V2+V4".
    #[arg(long)]
    module: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Noether number and per-degree dimension table.
    Beta {
        #[command(flatten)]
        module: ModuleArgs,
        /// Write the entry report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the per-degree table as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Basis of the invariants of one degree.
    Invariants {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        degree: u32,
        /// Restrict to one multidegree, comma separated.
        #[arg(long, value_delimiter = ',')]
        multidegree: Option<Vec<u32>>,
        /// Write the basis polynomials as JSON.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Hilbert function and top degree of the coinvariant algebra.
    Coinvariants {
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Lead-term certificate for the coinvariant top-degree bound.
    Certify {
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Run a catalog and compare against the closed-form Noether numbers.
    Verify {
        #[arg(long)]
        max_p: Option<u32>,
        /// JSON catalog; the built-in one when absent.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Where to write the suite report.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

/// Basis file written by `invariants --emit`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmittedBasis {
    pub spec: String,
    pub p: u32,
    pub degree: u32,
    pub multidegree: Option<Vec<u32>>,
    pub dimension: usize,
    pub basis: Vec<String>,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match status_of(&e) {
            Status::Skipped => EXIT_BUDGET,
            Status::Invalid => EXIT_INVALID,
            _ => match e {
                Error::Precondition(_) => EXIT_INVALID,
                _ => EXIT_VIOLATION,
            },
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(e: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message: e.to_string(),
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let config = EngineConfig {
        column_cap: cli.column_cap,
    };
    match dispatch(cli.command, config, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn parse_module(m: &ModuleArgs) -> std::result::Result<ModuleSpec, Failure> {
    ModuleSpec::parse(&m.module, m.p).map_err(Failure::from)
}

fn dispatch(command: Command, config: EngineConfig, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Beta { module, json, csv } => cmd_beta(&module, json, csv, config, out),
        Command::Invariants {
            module,
            degree,
            multidegree,
            emit,
        } => cmd_invariants(&module, degree, multidegree, emit, config, out),
        Command::Coinvariants { module } => cmd_coinvariants(&module, config, out),
        Command::Certify { module } => cmd_certify(&module, config, out),
        Command::Verify { max_p, catalog, json } => cmd_verify(max_p, catalog, json, config, out),
    }
}

fn print_table(rows: &[TableRow], out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{:>6} {:>12} {:>8} {:>8} {:>9}", "degree", "dim_poly", "dim_inv", "dim_dec", "dim_indec")?;
    for r in rows {
        writeln!(
            out,
            "{:>6} {:>12} {:>8} {:>8} {:>9}",
            r.degree, r.dim_poly, r.dim_inv, r.dim_dec, r.dim_indec
        )?;
    }
    Ok(())
}

fn cmd_beta(
    m: &ModuleArgs,
    json: Option<PathBuf>,
    csv: Option<PathBuf>,
    config: EngineConfig,
    out: &mut dyn Write,
) -> Outcome {
    let spec = parse_module(m)?;
    let report = noether_number_with(&spec, config)?;
    let expected = expected_beta(&spec);
    let table = table_of(&report);
    let matched = report.beta == expected.value;

    writeln!(out, "module {} over F_{}", spec, spec.p()).map_err(io_failure)?;
    writeln!(out, "beta = {}", report.beta).map_err(io_failure)?;
    if expected.rule == BetaRule::Trivial {
        writeln!(
            out,
            "note: only trivial summands; the closed-form formulas do not apply and beta = 1 by convention"
        )
        .map_err(io_failure)?;
    } else {
        writeln!(
            out,
            "expected = {} ({}): {}",
            expected.value,
            expected.rule.name(),
            if matched { "match" } else { "MISMATCH" }
        )
        .map_err(io_failure)?;
    }
    writeln!(out, "search bound = {}", report.search_bound).map_err(io_failure)?;
    print_table(&table, out).map_err(io_failure)?;

    if let Some(path) = json {
        let mut entry = EntryReport::empty(&spec.to_string(), spec.p(), EntryMode::Limited);
        entry.blocks = spec.blocks().to_vec();
        entry.beta = Some(report.beta);
        entry.bound = Some(report.search_bound);
        entry.table = table.clone();
        entry.expected = Some(ExpectedJson {
            value: expected.value,
            rule: expected.rule,
        });
        entry.matches = Some(matched);
        entry.status = if matched { Status::Pass } else { Status::Mismatch };
        let text = serde_json::to_string_pretty(&entry).map_err(io_failure)?;
        std::fs::write(path, text).map_err(io_failure)?;
    }
    if let Some(path) = csv {
        let file = std::fs::File::create(path).map_err(io_failure)?;
        write_table_csv(&table, file).map_err(io_failure)?;
    }
    Ok(if matched { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_invariants(
    m: &ModuleArgs,
    degree: u32,
    multidegree: Option<Vec<u32>>,
    emit: Option<PathBuf>,
    config: EngineConfig,
    out: &mut dyn Write,
) -> Outcome {
    let spec = Arc::new(parse_module(m)?);
    let constraint = match &multidegree {
        None => DegreeConstraint::Total(degree),
        Some(mu) => {
            if mu.len() != spec.k() || mu.iter().sum::<u32>() != degree {
                return Err(Failure {
                    code: EXIT_INVALID,
                    message: format!(
                        "multidegree must have {} entries summing to the degree {degree}",
                        spec.k()
                    ),
                });
            }
            DegreeConstraint::Multi(mu.clone())
        }
    };
    let mut engine = InvariantEngine::new(Arc::clone(&spec), config);
    let basis = invariant_basis_with(&mut engine, &constraint)?;
    let polys: Vec<String> = basis.basis.iter().map(|f| f.to_string()).collect();
    writeln!(out, "dim F[{}]^G in degree {degree} = {}", spec, basis.dim()).map_err(io_failure)?;
    for f in &polys {
        writeln!(out, "  {f}").map_err(io_failure)?;
    }
    if let Some(path) = emit {
        let emitted = EmittedBasis {
            spec: spec.to_string(),
            p: spec.p(),
            degree,
            multidegree,
            dimension: basis.dim(),
            basis: polys,
        };
        let text = serde_json::to_string_pretty(&emitted).map_err(io_failure)?;
        std::fs::write(path, text).map_err(io_failure)?;
    }
    Ok(EXIT_OK)
}

fn cmd_coinvariants(m: &ModuleArgs, config: EngineConfig, out: &mut dyn Write) -> Outcome {
    let spec = parse_module(m)?;
    let r = coinvariant_profile_with(&spec, config)?;
    let hf: Vec<String> = r.hilbert_function.iter().map(u64::to_string).collect();
    writeln!(out, "module {} over F_{}", r.spec, spec.p()).map_err(io_failure)?;
    writeln!(out, "hilbert function = [{}]", hf.join(",")).map_err(io_failure)?;
    writeln!(out, "top degree = {}", r.top_degree).map_err(io_failure)?;
    writeln!(out, "bound = {}", r.bound).map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn cmd_certify(m: &ModuleArgs, config: EngineConfig, out: &mut dyn Write) -> Outcome {
    let spec = parse_module(m)?;
    let c = leadterm_certificate_with(&spec, config)?;
    let sampled = if c.sampled { " (sampled)" } else { "" };
    writeln!(out, "module {} over F_{}", c.spec, spec.p()).map_err(io_failure)?;
    writeln!(
        out,
        "lead terms: {}/{} degree-{} A-monomials certified{sampled}",
        c.a_monomials_checked,
        c.a_monomials,
        spec.p() - 1
    )
    .map_err(io_failure)?;
    writeln!(out, "orbit products certified: {}", c.orbit_products_checked).map_err(io_failure)?;
    writeln!(out, "monomials outside the staircase checked: {}", c.non_staircase_checked).map_err(io_failure)?;
    writeln!(
        out,
        "top degree = {} <= staircase top = {} <= bound = {}",
        c.top_degree, c.staircase_top_degree, c.bound
    )
    .map_err(io_failure)?;
    writeln!(out, "certificate: ok").map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    max_p: Option<u32>,
    catalog: Option<PathBuf>,
    json: Option<PathBuf>,
    config: EngineConfig,
    out: &mut dyn Write,
) -> Outcome {
    let entries = match catalog {
        Some(path) => Some(load_catalog(&path).map_err(io_failure)?),
        None => None,
    };
    let suite = SuiteConfig {
        max_p,
        entries,
        column_cap: config.column_cap,
        output: json,
    };
    let report = run_suite(&suite).map_err(io_failure)?;
    for e in &report.entries {
        let status = serde_json::to_string(&e.status).map_err(io_failure)?;
        let beta = e.beta.map_or("-".to_string(), |b| b.to_string());
        let expected = e.expected.as_ref().map_or("-".to_string(), |x| x.value.to_string());
        let note = e.note.as_deref().map(|n| format!("  ({n})")).unwrap_or_default();
        writeln!(
            out,
            "{:<12} p={:<3} beta={:<4} expected={:<4} {}{note}",
            e.spec,
            e.p,
            beta,
            expected,
            status.trim_matches('"')
        )
        .map_err(io_failure)?;
    }
    writeln!(out, "{} entries, overall {}", report.entries.len(), if report.pass { "pass" } else { "FAIL" })
        .map_err(io_failure)?;
    Ok(exit_code_for(report.entries.iter().map(|e| e.status)))
}
