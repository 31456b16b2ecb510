//! Commutator subspaces, coinvariants, the two constructions of the reduced
//! cocyclic module and its Hochschild and cyclic cohomology.

pub mod cohomology;
pub mod complex;
pub mod quotient;
pub mod space;
pub mod subspace;
pub mod vanishing;

pub use cohomology::{coboundary, coboundary_prime, cyclic_cohomology_bicomplex, hochschild_cohomology, HomologyReport, Theory};
pub use complex::{build_cm_complex, coinvariant_dims, coinvariant_route, compare_routes, p_image_route, CocyclicData, Route};
pub use quotient::{analyze_quotient, quotient_module_coalgebra, QuotientReport};
pub use space::{assemble, ChainSpace};
pub use subspace::{coinvariants, commutator_subspace, equivariant_dims, CommutatorSubspace, DegreeOperators, GradedSubspace};
pub use vanishing::{kappa_closed_form, uq_vanishing_check, uq_vanishing_ledger};
