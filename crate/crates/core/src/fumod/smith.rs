//! Smith normal form over the Euclidean domain `F₂[U]`.

use super::{FUMatrix, UPoly};
use crate::error::{Error, Result};

/// `left · m · right` is diagonal with the invariant factors on the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<UPoly>,
    pub rank: usize,
    pub left_transform: FUMatrix,
    pub right_transform: FUMatrix,
}

impl SmithForm {
    /// The `rows x cols` diagonal matrix this form describes.
    pub fn diagonal(&self) -> FUMatrix {
        let mut d = FUMatrix::zero(self.left_transform.rows(), self.right_transform.cols());
        for (i, f) in self.invariant_factors.iter().enumerate() {
            d.set(i, i, f.clone());
        }
        d
    }
}

/// Computes the Smith normal form with both transforms, then checks
/// `left · m · right = diag` and the divisibility chain.
pub fn smith_normal_form(m: &FUMatrix) -> Result<SmithForm> {
    let mut work = m.clone();
    let mut left = FUMatrix::identity(m.rows());
    let mut right = FUMatrix::identity(m.cols());
    let rank = diagonalize(&mut work, Some(&mut left), Some(&mut right));
    let invariant_factors: Vec<UPoly> = (0..rank).map(|i| work.get(i, i).clone()).collect();
    let form = SmithForm {
        invariant_factors,
        rank,
        left_transform: left,
        right_transform: right,
    };
    let product = form.left_transform.mul(m)?.mul(&form.right_transform)?;
    if product != form.diagonal() || product != work {
        return Err(Error::internal(
            "Smith transforms do not reproduce the diagonal form",
        ));
    }
    check_chain(&form.invariant_factors)?;
    Ok(form)
}

/// Invariant factors only, skipping the transforms.
pub fn invariant_factors(m: &FUMatrix) -> Result<Vec<UPoly>> {
    let mut work = m.clone();
    let rank = diagonalize(&mut work, None, None);
    let factors: Vec<UPoly> = (0..rank).map(|i| work.get(i, i).clone()).collect();
    check_chain(&factors)?;
    Ok(factors)
}

fn check_chain(factors: &[UPoly]) -> Result<()> {
    for w in factors.windows(2) {
        if !w[0].divides(&w[1]) {
            return Err(Error::internal(format!(
                "divisibility chain broken: {} does not divide {}",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

fn min_degree_in_block(a: &FUMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for r in t..a.rows() {
        for c in t..a.cols() {
            if let Some(d) = a.get(r, c).degree() {
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, r, c));
                    if d == 0 {
                        return Some((r, c));
                    }
                }
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

/// Smallest-degree entry in row `t` or column `t` at or beyond the diagonal.
fn min_degree_in_cross(a: &FUMatrix, t: usize) -> (usize, usize) {
    let mut best = (a.get(t, t).degree().unwrap_or(usize::MAX), t, t);
    for c in t + 1..a.cols() {
        if let Some(d) = a.get(t, c).degree() {
            if d < best.0 {
                best = (d, t, c);
            }
        }
    }
    for r in t + 1..a.rows() {
        if let Some(d) = a.get(r, t).degree() {
            if d < best.0 {
                best = (d, r, t);
            }
        }
    }
    (best.1, best.2)
}

fn move_to_diagonal(
    a: &mut FUMatrix,
    left: &mut Option<&mut FUMatrix>,
    right: &mut Option<&mut FUMatrix>,
    t: usize,
    (r, c): (usize, usize),
) {
    a.swap_rows(t, r);
    if let Some(l) = left.as_deref_mut() {
        l.swap_rows(t, r);
    }
    a.swap_cols(t, c);
    if let Some(rt) = right.as_deref_mut() {
        rt.swap_cols(t, c);
    }
}

/// In-place reduction to diagonal form. Returns the rank.
///
/// Pivot: the minimal-degree nonzero entry of the trailing block, first in
/// row-major order.
fn diagonalize(
    a: &mut FUMatrix,
    mut left: Option<&mut FUMatrix>,
    mut right: Option<&mut FUMatrix>,
) -> usize {
    let n = a.rows().min(a.cols());
    let mut t = 0;
    while t < n {
        let Some(pos) = min_degree_in_block(a, t) else {
            break;
        };
        move_to_diagonal(a, &mut left, &mut right, t, pos);
        loop {
            let pivot = a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..a.rows() {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let (q, r) = a.get(i, t).divmod(&pivot).expect("nonzero pivot");
                a.add_row_multiple(i, t, &q, t);
                if let Some(l) = left.as_deref_mut() {
                    l.add_row_multiple(i, t, &q, 0);
                }
                dirty |= !r.is_zero();
            }
            for j in t + 1..a.cols() {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let (q, r) = a.get(t, j).divmod(&pivot).expect("nonzero pivot");
                a.add_col_multiple(j, t, &q, t);
                if let Some(rt) = right.as_deref_mut() {
                    rt.add_col_multiple(j, t, &q, 0);
                }
                dirty |= !r.is_zero();
            }
            if dirty {
                let pos = min_degree_in_cross(a, t);
                move_to_diagonal(a, &mut left, &mut right, t, pos);
                continue;
            }
            if pivot.is_one() {
                break;
            }
            let offender =
                (t + 1..a.rows()).find(|&i| (t + 1..a.cols()).any(|j| !pivot.divides(a.get(i, j))));
            match offender {
                Some(i) => {
                    a.add_row_multiple(t, i, &UPoly::one(), t);
                    if let Some(l) = left.as_deref_mut() {
                        l.add_row_multiple(t, i, &UPoly::one(), 0);
                    }
                }
                None => break,
            }
        }
        t += 1;
    }
    t
}
