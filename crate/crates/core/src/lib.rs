//! Exact matroid toolkit: Tutte polynomials, cyclic flats and split
//! matroids, the Merino–Welsh inequalities, and a checked replay of the
//! induction that proves the multiplicative inequality for split matroids.

pub mod acceptance;
pub mod bitset;
pub mod cli;
pub mod corpus;
pub mod flats;
pub mod format;
pub mod graph;
pub mod iso;
pub mod matroid;
pub mod mw;
pub mod trace;
pub mod tutte;

pub use bitset::ElementSet;
pub use graph::Multigraph;
pub use matroid::{Matroid, MatroidError, Minor};
pub use mw::MwReport;
pub use tutte::TuttePolynomial;
