//! Exact invariant theory for representations of the cyclic group of prime
//! order over F_p.
//!
//! A representation is a direct sum of Jordan blocks V_{d_1} + ... + V_{d_k}
//! ([`ModuleSpec`]). Everything is computed degree by degree (and multidegree
//! by multidegree) with exact linear algebra: invariant subspaces, the
//! decomposable part of the invariant ring, the Noether number, the Hilbert
//! ideal and the Hilbert function of the coinvariants.

pub mod action;
pub mod coinvariants;
pub mod error;
pub mod field;
pub mod invariants;
pub mod linalg;
pub mod module_spec;
pub mod monomial;
pub mod polynomial;

pub use error::{Error, Result};
pub use field::{Fp, PrimeField};
pub use module_spec::{ModuleSpec, VariableId};
pub use monomial::{DegreeConstraint, Monomial};
pub use polynomial::Polynomial;
