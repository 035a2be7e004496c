//! Exact invariants of integer hyperplane arrangements.
//!
//! The crate computes matroid data of an arrangement (flats, circuits,
//! minors), simplicial complexes and their h-polynomials, characteristic and
//! Tutte polynomials, Betti and intersection-cohomology Poincaré polynomials
//! of the associated hypertoric varieties, brute-force point counts over
//! prime fields, and Gröbner bases of circuit ideals. Every computation is
//! exact.

pub mod arrangement;
pub mod betti;
pub mod circuit_rings;
pub mod complexes;
pub mod error;
pub mod ffield;
pub mod fixtures;
pub mod invariants;
pub mod lattice;
pub mod poly;
pub mod subset;
pub mod verify;

pub use arrangement::{Arrangement, Circuit, Classification, Flat, FlatLattice, Minor};
pub use complexes::{HVector, SimplicialComplex};
pub use error::{Error, Result};
pub use poly::{BiPoly, UniPoly};
pub use subset::Subset;
