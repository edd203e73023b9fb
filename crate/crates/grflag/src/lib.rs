//! Symbolic computation engine for graded rings of the gamma filtration on
//! the K-theory of versal complete flag varieties.
//!
//! The crate is organized around six pieces:
//!
//! * [`ring`] -- exact arithmetic in finite-rank truncated graded algebras
//!   (the `P(y)` models) and Hilbert series.
//! * [`groebner`] -- Buchberger over prime fields and Hilbert series of
//!   homogeneous quotients, for the explicit `S(t)` presentations.
//! * [`liedata`] -- the case database: one record per group/prime pair with
//!   its Milnor operation tables and weighted transgression-element models.
//! * [`filtration`] -- the associated graded of the weight filtration on a
//!   model `K^0`, through integer lattice chains and Smith normal forms.
//! * [`kres`] -- v1-explicit restriction-image calculus, torsion-index
//!   bounds, the spin telescoping recursion, and Rost motive counts.
//! * [`verify`] -- batch suites binding everything to the cases' expected
//!   data, with machine-readable reports.

pub mod error;
pub mod filtration;
pub mod groebner;
pub mod kres;
pub mod liedata;
pub mod parse;
pub mod ring;
pub mod snf;
pub mod verify;

pub use error::{Error, Result};
