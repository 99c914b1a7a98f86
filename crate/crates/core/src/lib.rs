//! Exact Tutte polynomials of ordered matroids and matroid perspectives.
//!
//! The crate computes the corank–nullity and activity expansions of the
//! (3-variable) Tutte polynomial, realizes its partial derivatives as
//! generating functions of internal/external activities, builds Dawson
//! partitions of the Boolean lattice, and ships a brute-force harness
//! ([`verify`]) that checks all of these against each other.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! subsets are bitmasks over a ground set of at most [`MAX_ELEMENTS`]
//! elements.

pub mod activity;
pub mod error;
pub mod matroid;
pub mod mpoly;
pub mod perspective;
pub mod subset;
pub mod tutte;
pub mod verify;

pub use activity::{active_sets, basis_activities, unique_witness_circuit, ActivityProfile};
pub use error::{Error, Result};
pub use matroid::{CircuitKind, Graph, Matroid, RankStats};
pub use mpoly::{Polynomial, Rational, Var};
pub use perspective::{DawsonInterval, Involution, Perspective};
pub use subset::{GroundSet, Subset, MAX_ELEMENTS};
pub use tutte::{DerivativeVariant, ExpansionSummand, Family, SpecializationSymbol};
pub use verify::{CensusTables, InstanceKind, Selection, VerificationReport};
