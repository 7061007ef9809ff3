//! Command-line front end: closed-form Noether numbers, catalog runs and
//! machine-readable reports on top of `modinv-core`.

pub mod catalog;
pub mod cli;
pub mod expected;
pub mod report;
pub mod suite;

pub use catalog::{builtin_catalog, load_catalog, CatalogEntry, EntryMode};
pub use expected::{expected_beta, BetaRule, ExpectedBeta};
pub use report::{EntryReport, Status, SuiteReport};
pub use suite::{evaluate_entry, run_suite, SuiteConfig};
