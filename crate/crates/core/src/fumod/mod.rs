//! Exact linear algebra over `F₂[U]`: polynomials, matrices, Smith normal
//! form, chain complexes of free modules and their homology.

mod complex;
mod matrix;
mod smith;
mod upoly;

pub use complex::{
    homology, torsion_order, ChainComplex, DegreeHomology, Generator, HomologyDecomposition,
};
pub use matrix::FUMatrix;
pub use smith::{invariant_factors, smith_normal_form, SmithForm};
pub use upoly::UPoly;
