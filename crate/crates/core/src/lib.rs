//! Torsion orders of knot Floer complexes and the lower bounds they give on
//! bridge index, fusion number, band-unlinking number, slice-disk minima,
//! refined cobordism distance and ribbon distance.
//!
//! The crate works with algebraic models only: staircase complexes of
//! L-space knots built from Alexander polynomials, closed under mirroring
//! (duals) and connected sums (tensor products), plus complexes supplied as
//! documents.

pub mod algebra;
pub mod bounds;
pub mod complex;
pub mod homology;
pub mod knots;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Knot(#[from] knots::KnotError),
    #[error(transparent)]
    Homology(#[from] homology::HomologyError),
}
