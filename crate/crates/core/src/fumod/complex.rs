use std::collections::BTreeMap;

use super::smith::invariant_factors;
use super::FUMatrix;
use crate::error::{Error, Result};

/// A basis element of one chain group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub label: String,
    /// Relative Maslov grading. Display only; homology ignores it.
    pub grading: Option<i64>,
}

impl Generator {
    pub fn new(label: impl Into<String>, grading: Option<i64>) -> Self {
        Self {
            label: label.into(),
            grading,
        }
    }
}

/// A bounded complex of finitely generated free `F₂[U]`-modules.
///
/// `differentials[k]` is the matrix of `∂_k : C_k -> C_{k-1}`, shape
/// `rank(C_{k-1}) x rank(C_k)`. Missing entries are zero maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    groups: BTreeMap<i32, Vec<Generator>>,
    differentials: BTreeMap<i32, FUMatrix>,
}

impl ChainComplex {
    /// Validates shapes and `∂∘∂ = 0`.
    pub fn new(
        groups: BTreeMap<i32, Vec<Generator>>,
        differentials: BTreeMap<i32, FUMatrix>,
    ) -> Result<Self> {
        let groups: BTreeMap<i32, Vec<Generator>> =
            groups.into_iter().filter(|(_, g)| !g.is_empty()).collect();
        let c = Self {
            groups,
            differentials,
        };
        for (&k, d) in &c.differentials {
            let (rows, cols) = (c.rank(k - 1), c.rank(k));
            if d.rows() != rows || d.cols() != cols {
                return Err(Error::invalid(format!(
                    "differential in degree {k} is {}x{}, expected {rows}x{cols}",
                    d.rows(),
                    d.cols()
                )));
            }
        }
        c.check_square_zero()?;
        Ok(c)
    }

    /// `∂_k ∘ ∂_{k+1} = 0` for all `k`.
    pub fn check_square_zero(&self) -> Result<()> {
        for (&k, d) in &self.differentials {
            if let Some(next) = self.differentials.get(&(k + 1)) {
                if !d.mul(next)?.is_zero() {
                    return Err(Error::invalid(format!(
                        "differential squares to a nonzero map from degree {}",
                        k + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self, k: i32) -> usize {
        self.groups.get(&k).map_or(0, Vec::len)
    }

    pub fn total_rank(&self) -> usize {
        self.groups.values().map(Vec::len).sum()
    }

    pub fn generators(&self, k: i32) -> &[Generator] {
        self.groups.get(&k).map_or(&[], Vec::as_slice)
    }

    /// Homological degrees with nonzero chain groups, ascending.
    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.groups.keys().copied()
    }

    pub fn groups(&self) -> &BTreeMap<i32, Vec<Generator>> {
        &self.groups
    }

    /// `∂_k`, materialized as a zero matrix when absent.
    pub fn differential(&self, k: i32) -> FUMatrix {
        self.differentials
            .get(&k)
            .cloned()
            .unwrap_or_else(|| FUMatrix::zero(self.rank(k - 1), self.rank(k)))
    }

    pub fn differential_ref(&self, k: i32) -> Option<&FUMatrix> {
        self.differentials.get(&k)
    }
}

/// `H_k = F[U]^{free_rank} ⊕ ⊕_i F[U]/U^{torsion_exponents[i]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DegreeHomology {
    pub free_rank: usize,
    pub torsion_exponents: Vec<u32>,
}

/// Total homology of a complex over `F₂[U]`, with the per-degree breakdown.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HomologyDecomposition {
    pub free_rank: usize,
    /// Sorted ascending.
    pub torsion_exponents: Vec<u32>,
    pub per_degree: BTreeMap<i32, DegreeHomology>,
}

/// Homology via invariant factors: `H_k` has free rank
/// `rank C_k - rank ∂_k - rank ∂_{k+1}` and one torsion summand per
/// non-unit invariant factor of `∂_{k+1}`.
pub fn homology(c: &ChainComplex) -> Result<HomologyDecomposition> {
    c.check_square_zero()?;
    let mut factors = BTreeMap::new();
    for (&k, d) in &c.differentials {
        factors.insert(k, invariant_factors(d)?);
    }
    let rank_of = |k: i32| factors.get(&k).map_or(0, Vec::len);

    let mut out = HomologyDecomposition::default();
    for k in c.degrees() {
        let free = c.rank(k) - rank_of(k) - rank_of(k + 1);
        let mut torsion = Vec::new();
        for f in factors.get(&(k + 1)).into_iter().flatten() {
            if f.is_one() {
                continue;
            }
            match f.monomial_exponent() {
                Some(e) => torsion.push(e as u32),
                None => return Err(Error::NonMonomialTorsion(f.to_string())),
            }
        }
        torsion.sort_unstable();
        out.free_rank += free;
        out.torsion_exponents.extend_from_slice(&torsion);
        out.per_degree.insert(
            k,
            DegreeHomology {
                free_rank: free,
                torsion_exponents: torsion,
            },
        );
    }
    out.torsion_exponents.sort_unstable();
    Ok(out)
}

/// Least `n` with `U^n · Tors = 0`.
pub fn torsion_order(h: &HomologyDecomposition) -> u32 {
    h.torsion_exponents.iter().copied().max().unwrap_or(0)
}
