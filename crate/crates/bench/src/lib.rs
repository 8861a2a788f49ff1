//! Fixtures for the benchmarks.

use utorsion_core::knots::KnotExpr;
use utorsion_core::{ChainComplex, FUMatrix, Result};

/// The torus knots `T(n, n+1)` timed by the staircase benchmark.
pub const STAIRCASE_SIZES: [u32; 4] = [8, 16, 24, 32];

/// Complex of `K(gamma, m)`, the largest single computation in the battery.
pub fn family_complex(gamma: u32, m: u32) -> Result<ChainComplex> {
    utorsion_core::knots::complex_of(&KnotExpr::family(gamma, m))
}

/// Largest differential of a complex, by entry count.
pub fn largest_differential(c: &ChainComplex) -> FUMatrix {
    c.degrees()
        .map(|k| c.differential(k))
        .max_by_key(|m| m.rows() * m.cols())
        .unwrap_or_else(|| FUMatrix::zero(0, 0))
}
