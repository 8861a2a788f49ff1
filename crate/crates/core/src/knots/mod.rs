//! Knot expressions built from the unknot and torus knots by mirroring and
//! connected sum, with their complexes and concordance invariants.

mod parse;
mod signature;

use std::fmt;

pub use parse::parse_knot;
pub use signature::{
    seifert_signature, symmetric_signature, torus_seifert_matrix, torus_signature,
};

use crate::error::{Error, Result};
use crate::fumod::{homology, torsion_order, ChainComplex, HomologyDecomposition};
use crate::laurent::{gap_sequence, lspace_exponents, torus_alexander, GapSequence};
use crate::staircase::{mirror_complex, staircase_complex, tensor_complex, unknot_complex};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KnotExpr {
    Unknot,
    /// Always `1 < p < q` with `gcd(p, q) = 1`; `T(1, q)` becomes `Unknot`.
    Torus {
        p: u32,
        q: u32,
    },
    Mirror(Box<KnotExpr>),
    ConnectedSum(Box<KnotExpr>, Box<KnotExpr>),
}

impl KnotExpr {
    /// Torus knot leaf, normalizing `T(1, q)` to the unknot. Parameters are
    /// assumed valid; use [`parse_knot`] or [`KnotExpr::try_torus`] otherwise.
    pub fn torus(p: u32, q: u32) -> Self {
        if p == 1 {
            KnotExpr::Unknot
        } else {
            KnotExpr::Torus { p, q }
        }
    }

    pub fn try_torus(p: u32, q: u32) -> Result<Self> {
        crate::laurent::check_torus_params(p as i64, q as i64)?;
        Ok(Self::torus(p, q))
    }

    pub fn mirror(self) -> Self {
        KnotExpr::Mirror(Box::new(self))
    }

    pub fn sum(self, other: KnotExpr) -> Self {
        KnotExpr::ConnectedSum(Box::new(self), Box::new(other))
    }

    /// `T(2r-1, 2r) # mirror(T(2s-1, 2s))` with `r = gamma + m`, `s = m`.
    pub fn family(gamma: u32, m: u32) -> Self {
        let (r, s) = (gamma + m, m);
        KnotExpr::torus(2 * r - 1, 2 * r).sum(KnotExpr::torus(2 * s - 1, 2 * s).mirror())
    }

    /// True when the expression contains no mirrors or sums.
    pub fn is_leaf(&self) -> bool {
        matches!(self, KnotExpr::Unknot | KnotExpr::Torus { .. })
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Unknot => write!(f, "U"),
            KnotExpr::Torus { p, q } => write!(f, "T({p},{q})"),
            KnotExpr::Mirror(k) => write!(f, "mirror({k})"),
            // Right-nested sums print flat; connected sum is associative.
            KnotExpr::ConnectedSum(a, b) => write!(f, "{a} # {b}"),
        }
    }
}

/// Gap sequence of a torus knot, through its Alexander polynomial.
pub fn torus_gaps(p: u32, q: u32) -> Result<GapSequence> {
    let delta = torus_alexander(p as i64, q as i64)?;
    Ok(gap_sequence(&lspace_exponents(&delta)?))
}

pub fn complex_of(k: &KnotExpr) -> Result<ChainComplex> {
    match k {
        KnotExpr::Unknot => Ok(unknot_complex()),
        KnotExpr::Torus { p, q } => staircase_complex(&torus_gaps(*p, *q)?),
        KnotExpr::Mirror(inner) => mirror_complex(&complex_of(inner)?),
        KnotExpr::ConnectedSum(a, b) => tensor_complex(&complex_of(a)?, &complex_of(b)?),
    }
}

/// Homology of [`complex_of`], asserting a single free tower.
pub fn knot_homology(k: &KnotExpr) -> Result<HomologyDecomposition> {
    let h = homology(&complex_of(k)?)?;
    if h.free_rank != 1 {
        return Err(Error::internal(format!(
            "homology of {k} has free rank {}, expected 1",
            h.free_rank
        )));
    }
    Ok(h)
}

/// `Order_U` by structure: `⌊n/2⌋` on `T(n, n+1)`, invariant under mirrors,
/// max over connected sums. Other torus knots fall back to their staircase.
pub fn order_u_recursive(k: &KnotExpr) -> Result<u32> {
    Ok(match k {
        KnotExpr::Unknot => 0,
        KnotExpr::Torus { p, q } if *q == *p + 1 => *p / 2,
        KnotExpr::Torus { .. } => torsion_order(&knot_homology(k)?),
        KnotExpr::Mirror(inner) => order_u_recursive(inner)?,
        KnotExpr::ConnectedSum(a, b) => order_u_recursive(a)?.max(order_u_recursive(b)?),
    })
}

/// `Order_U` from the homology of the full complex.
pub fn order_u_direct(k: &KnotExpr) -> Result<u32> {
    Ok(torsion_order(&knot_homology(k)?))
}

/// Computes `Order_U` both directly and structurally and insists they agree.
pub fn order_u(k: &KnotExpr) -> Result<u32> {
    let direct = order_u_direct(k)?;
    check_order(k, direct)
}

fn check_order(k: &KnotExpr, direct: u32) -> Result<u32> {
    let recursive = order_u_recursive(k)?;
    if direct != recursive {
        return Err(Error::internal(format!(
            "Order_U({k}): homology gives {direct}, structural recursion gives {recursive}"
        )));
    }
    Ok(direct)
}

pub fn signature(k: &KnotExpr) -> i64 {
    match k {
        KnotExpr::Unknot => 0,
        KnotExpr::Torus { p, q } => torus_signature(*p, *q),
        KnotExpr::Mirror(inner) => -signature(inner),
        KnotExpr::ConnectedSum(a, b) => signature(a) + signature(b),
    }
}

/// `υ`, known in closed form `-r² + r` on `T(2r-1, 2r)` and extended by
/// negation and additivity. `None` outside that family.
pub fn upsilon(k: &KnotExpr) -> Option<i64> {
    match k {
        KnotExpr::Unknot => Some(0),
        KnotExpr::Torus { p, q } if *q == *p + 1 && *p % 2 == 1 => {
            let r = (*q / 2) as i64;
            Some(-r * r + r)
        }
        KnotExpr::Torus { .. } => None,
        KnotExpr::Mirror(inner) => upsilon(inner).map(|v| -v),
        KnotExpr::ConnectedSum(a, b) => Some(upsilon(a)? + upsilon(b)?),
    }
}

/// `max(0, υ - σ/2)`, a lower bound on the non-orientable 4-genus.
pub fn gamma4_lower_bound(k: &KnotExpr) -> Result<i64> {
    let u = upsilon(k)
        .ok_or_else(|| Error::BoundUnavailable(format!("υ({k}) is not known in closed form")))?;
    let sigma = signature(k);
    if sigma % 2 != 0 {
        return Err(Error::internal(format!("odd signature {sigma} for {k}")));
    }
    Ok((u - sigma / 2).max(0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub order_u: u32,
    pub signature: i64,
    pub upsilon: Option<i64>,
    pub gamma4_lower: Option<i64>,
    pub homology: HomologyDecomposition,
}

pub fn invariants(k: &KnotExpr) -> Result<InvariantReport> {
    let homology = knot_homology(k)?;
    let order_u = check_order(k, torsion_order(&homology))?;
    let gamma4_lower = match gamma4_lower_bound(k) {
        Ok(v) => Some(v),
        Err(Error::BoundUnavailable(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(InvariantReport {
        order_u,
        signature: signature(k),
        upsilon: upsilon(k),
        gamma4_lower,
        homology,
    })
}
