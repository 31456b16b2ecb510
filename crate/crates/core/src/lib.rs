//! Cocyclic modules of Hopf algebras and bialgebras with stable coefficients:
//! presets, coefficient modules, the operator calculus on the cyclic chain
//! complexes and exact Hochschild and cyclic cohomology.

pub mod cocyclic;
pub mod coefficients;
pub mod error;
pub mod exec;
pub mod homology;
pub mod hopf;
pub mod identities;
pub mod ledger;
pub mod linear;

pub use error::{HopfError, Result};
pub use hopf::{AlgebraElement, HopfPreset, Tensor, TensorElement, Word};
pub use ledger::LedgerEntry;
