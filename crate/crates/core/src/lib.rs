//! Finite groups as multiplication tables, with exact commutativity and
//! nilpotency degrees and a search for (relative) n-isoclinisms.
//!
//! ```
//! use isoclin_core::{catalog, commutativity_degree, are_n_isoclinic, ExactRatio};
//!
//! let d8 = catalog::get("dihedral:8").unwrap();
//! let q8 = catalog::get("quaternion8").unwrap();
//! assert_eq!(commutativity_degree(&d8), ExactRatio::new(5, 8));
//! assert!(are_n_isoclinic(&d8, &q8, 1).unwrap().is_some());
//! ```

pub mod catalog;
pub mod degrees;
pub mod error;
pub mod group;
pub mod io;
pub mod iso;
pub mod isoclinism;
pub mod ratio;
pub mod structure;
pub mod verify;

pub use degrees::{
    commutativity_degree, nilpotency_degree, nilpotency_degree_naive, relative_commutativity_degree,
    relative_nilpotency_degree,
};
pub use error::{AxiomViolation, Error, Result};
pub use group::{Element, FiniteGroup};
pub use iso::{find_isomorphism, Isomorphism};
pub use isoclinism::{
    are_n_isoclinic, are_relative_n_isoclinic, check_diagram, induced_subgroup, IsoclinismFrame, IsoclinismWitness,
};
pub use ratio::ExactRatio;
pub use structure::{QuotientGroup, Subgroup};
pub use verify::{Verdict, VerificationReport};
