//! Unoriented knot Floer torsion order for L-space knots, their mirrors and
//! connected sums, together with the non-orientable cobordism bounds it
//! feeds.
//!
//! The pipeline for a torus knot is
//! Alexander polynomial → exponent gaps → staircase complex over `F₂[U]`
//! → Smith normal form → homology → `Order_U`.

pub mod cobordism;
pub mod error;
pub mod fumod;
pub mod knots;
pub mod laurent;
pub mod selftest;
pub mod staircase;

pub use error::{Error, Result};
pub use fumod::{ChainComplex, FUMatrix, HomologyDecomposition, SmithForm, UPoly};
pub use knots::KnotExpr;
pub use laurent::{ExponentSequence, GapSequence, LaurentPoly};
