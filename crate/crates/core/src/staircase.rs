//! Staircase complexes of L-space knots, duals (mirrors), tensor products
//! (connected sums) and graded-root summaries of their homology.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fumod::{ChainComplex, FUMatrix, Generator, HomologyDecomposition, UPoly};
use crate::laurent::GapSequence;

/// Relative gradings of `y_0, ..., y_{2l}` anchored at `χ(y_0) = 0`:
/// `χ(y_{2k}) - χ(y_{2k+1}) = d_{2k+1}` and `χ(y_{2k+2}) - χ(y_{2k+1}) = d_{2k+2}`.
pub fn staircase_gradings(gaps: &GapSequence) -> Vec<i64> {
    let mut out = Vec::with_capacity(gaps.len() + 1);
    let mut g = 0i64;
    out.push(g);
    for (i, &d) in gaps.as_slice().iter().enumerate() {
        if i % 2 == 0 {
            g -= d as i64;
        } else {
            g += d as i64;
        }
        out.push(g);
    }
    out
}

/// The two-term complex `∂y_{2k+1} = U^{d_{2k+1}} y_{2k} + U^{d_{2k+2}} y_{2k+2}`
/// with even generators in degree 0 and odd generators in degree 1.
pub fn staircase_complex(gaps: &GapSequence) -> Result<ChainComplex> {
    let d = gaps.as_slice();
    if !d.len().is_multiple_of(2) || d.contains(&0) {
        return Err(Error::invalid(
            "staircase needs an even number of positive gaps",
        ));
    }
    let l = d.len() / 2;
    let chi = staircase_gradings(gaps);
    let even: Vec<Generator> = (0..=l)
        .map(|k| Generator::new(format!("y{}", 2 * k), Some(chi[2 * k])))
        .collect();
    let odd: Vec<Generator> = (0..l)
        .map(|k| Generator::new(format!("y{}", 2 * k + 1), Some(chi[2 * k + 1])))
        .collect();

    let mut groups = BTreeMap::from([(0, even)]);
    let mut diffs = BTreeMap::new();
    if l > 0 {
        let mut m = FUMatrix::zero(l + 1, l);
        for k in 0..l {
            m.set(k, k, UPoly::monomial(d[2 * k] as usize));
            m.set(k + 1, k, UPoly::monomial(d[2 * k + 1] as usize));
        }
        groups.insert(1, odd);
        diffs.insert(1, m);
    }
    ChainComplex::new(groups, diffs)
}

/// The rank-one complex with zero differential.
pub fn unknot_complex() -> ChainComplex {
    staircase_complex(&GapSequence::empty()).expect("unknot complex is valid")
}

/// `Hom_{F[U]}(C, F[U])`: degrees and gradings negated, differentials
/// transposed.
pub fn mirror_complex(c: &ChainComplex) -> Result<ChainComplex> {
    let groups = c
        .groups()
        .iter()
        .map(|(&k, gens)| {
            let dual = gens
                .iter()
                .map(|g| Generator::new(dual_label(&g.label), g.grading.map(|x| -x)))
                .collect();
            (-k, dual)
        })
        .collect();
    let mut diffs = BTreeMap::new();
    for k in c.degrees() {
        if let Some(d) = c.differential_ref(k) {
            // ∂_k: C_k -> C_{k-1} dualizes to C*_{-(k-1)} -> C*_{-k}.
            diffs.insert(1 - k, d.transpose());
        }
    }
    ChainComplex::new(groups, diffs)
}

fn dual_label(label: &str) -> String {
    match label.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{label}*"),
    }
}

/// `C ⊗_{F[U]} D` with `∂(x⊗y) = ∂x⊗y + x⊗∂y`.
pub fn tensor_complex(a: &ChainComplex, b: &ChainComplex) -> Result<ChainComplex> {
    // Basis of degree n: (p, i, j) with x_i in a_p and y_j in b_{n-p}. Degrees
    // are visited in ascending p, so insertion order is (p, i, j) order.
    let mut index: BTreeMap<i32, BTreeMap<(i32, usize, usize), usize>> = BTreeMap::new();
    let mut groups: BTreeMap<i32, Vec<Generator>> = BTreeMap::new();
    for p in a.degrees() {
        for q in b.degrees() {
            let n = p + q;
            for (i, x) in a.generators(p).iter().enumerate() {
                for (j, y) in b.generators(q).iter().enumerate() {
                    let slot = index.entry(n).or_default();
                    let pos = slot.len();
                    slot.insert((p, i, j), pos);
                    let grading = match (x.grading, y.grading) {
                        (Some(g), Some(h)) => Some(g + h),
                        _ => None,
                    };
                    groups
                        .entry(n)
                        .or_default()
                        .push(Generator::new(format!("{}⊗{}", x.label, y.label), grading));
                }
            }
        }
    }
    let mut diffs = BTreeMap::new();
    for (&n, cols) in &index {
        let Some(rows) = index.get(&(n - 1)) else {
            continue;
        };
        let mut m = FUMatrix::zero(rows.len(), cols.len());
        let mut nonzero = false;
        for (&(p, i, j), &col) in cols {
            let q = n - p;
            if let Some(da) = a.differential_ref(p) {
                for r in 0..da.rows() {
                    let e = da.get(r, i);
                    if !e.is_zero() {
                        let row = rows[&(p - 1, r, j)];
                        *m.get_mut(row, col) += e;
                        nonzero = true;
                    }
                }
            }
            if let Some(db) = b.differential_ref(q) {
                for r in 0..db.rows() {
                    let e = db.get(r, j);
                    if !e.is_zero() {
                        let row = rows[&(p, i, r)];
                        *m.get_mut(row, col) += e;
                        nonzero = true;
                    }
                }
            }
        }
        if nonzero {
            diffs.insert(n, m);
        }
    }
    ChainComplex::new(groups, diffs).map_err(|e| match e {
        Error::InvalidInput(msg) => Error::internal(format!("tensor complex: {msg}")),
        other => other,
    })
}

/// One infinite tower plus finite branches whose lengths are the torsion
/// exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedRootSummary {
    pub tower_count: usize,
    /// Sorted ascending.
    pub branch_exponents: Vec<u32>,
}

pub fn graded_root_summary(h: &HomologyDecomposition) -> Result<GradedRootSummary> {
    if h.free_rank != 1 {
        return Err(Error::NotAKnotComplex(h.free_rank));
    }
    let mut branch_exponents = h.torsion_exponents.clone();
    branch_exponents.sort_unstable();
    Ok(GradedRootSummary {
        tower_count: h.free_rank,
        branch_exponents,
    })
}

/// A leaf `y_{2k}` of the graded root drawn from a staircase.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootLeaf {
    pub generator: String,
    pub grading: i64,
    /// Grading at which this branch joins an older branch; `None` for the
    /// leaf that carries the tower.
    pub merge_grading: Option<i64>,
    /// Index into the leaf list of the branch this one joins.
    pub parent: Option<usize>,
    /// Number of dots on this branch above its merge point. For the tower
    /// leaf this is measured down to the highest neighbouring merge.
    pub branch_length: u32,
    pub tower: bool,
}

/// Graded-root leaves of a staircase, paired by the elder rule: a leaf joins
/// the nearest strictly higher leaf (ties go to the smaller index) at the
/// highest connecting merge grading.
pub fn root_leaves(gaps: &GapSequence) -> Vec<RootLeaf> {
    let chi = staircase_gradings(gaps);
    let leaves: Vec<i64> = chi.iter().step_by(2).copied().collect();
    let merges: Vec<i64> = chi.iter().skip(1).step_by(2).copied().collect();
    let older = |i: usize, j: usize| leaves[j] > leaves[i] || (leaves[j] == leaves[i] && j < i);

    let mut out = Vec::with_capacity(leaves.len());
    for i in 0..leaves.len() {
        let mut best: Option<(i64, usize)> = None;
        // walk right
        let mut low = i64::MAX;
        for j in i + 1..leaves.len() {
            low = low.min(merges[j - 1]);
            if older(i, j) {
                best = Some((low, j));
                break;
            }
        }
        // walk left
        let mut low = i64::MAX;
        for j in (0..i).rev() {
            low = low.min(merges[j]);
            if older(i, j) {
                if best.is_none_or(|(m, _)| low > m) {
                    best = Some((low, j));
                }
                break;
            }
        }
        let (merge_grading, parent, length) = match best {
            Some((m, j)) => (Some(m), Some(j), (leaves[i] - m) as u32),
            None => {
                let neighbour = [i.checked_sub(1).map(|k| merges[k]), merges.get(i).copied()]
                    .into_iter()
                    .flatten()
                    .max();
                let len = neighbour.map_or(0, |m| (leaves[i] - m) as u32);
                (None, None, len)
            }
        };
        out.push(RootLeaf {
            generator: format!("y{}", 2 * i),
            grading: leaves[i],
            merge_grading,
            parent,
            branch_length: length,
            tower: best.is_none(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fumod::{homology, torsion_order};
    use crate::laurent::torus_gap_formula;

    fn gaps(v: &[u32]) -> GapSequence {
        GapSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn unknot_staircase() {
        let c = staircase_complex(&GapSequence::empty()).unwrap();
        assert_eq!(c.total_rank(), 1);
        let h = homology(&c).unwrap();
        assert_eq!((h.free_rank, h.torsion_exponents.len()), (1, 0));
    }

    #[test]
    fn trefoil_staircase() {
        let c = staircase_complex(&gaps(&[1, 1])).unwrap();
        let d = c.differential(1);
        assert_eq!((d.rows(), d.cols()), (2, 1));
        assert_eq!(d.get(0, 0), &UPoly::monomial(1));
        assert_eq!(d.get(1, 0), &UPoly::monomial(1));
        let h = homology(&c).unwrap();
        assert_eq!(h.free_rank, 1);
        assert_eq!(h.torsion_exponents, vec![1]);
        let gr: Vec<_> = c.generators(0).iter().map(|g| g.grading.unwrap()).collect();
        assert_eq!(gr, vec![0, 0]);
        assert_eq!(c.generators(1)[0].grading, Some(-1));
    }

    #[test]
    fn t34_staircase() {
        let c = staircase_complex(&gaps(&[1, 2, 2, 1])).unwrap();
        let d = c.differential(1);
        assert_eq!(d.get(0, 0), &UPoly::monomial(1));
        assert_eq!(d.get(1, 0), &UPoly::monomial(2));
        assert_eq!(d.get(1, 1), &UPoly::monomial(2));
        assert_eq!(d.get(2, 1), &UPoly::monomial(1));
        let h = homology(&c).unwrap();
        assert_eq!(h.torsion_exponents, vec![1, 1]);
    }

    #[test]
    fn rejects_bad_gaps() {
        assert!(GapSequence::new(vec![1]).is_err());
    }

    #[test]
    fn mirror_of_unknot_and_trefoil() {
        let u = unknot_complex();
        let mu = mirror_complex(&u).unwrap();
        assert_eq!(homology(&mu).unwrap(), homology(&u).unwrap());

        let t = staircase_complex(&gaps(&[1, 1])).unwrap();
        let mt = mirror_complex(&t).unwrap();
        assert_eq!(mt.differential(0), t.differential(1).transpose());
        assert_eq!(torsion_order(&homology(&mt).unwrap()), 1);
        let back = mirror_complex(&mt).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn tensor_with_unknot_is_identity() {
        let t = staircase_complex(&torus_gap_formula(5).unwrap()).unwrap();
        let u = unknot_complex();
        let h = homology(&t).unwrap();
        assert_eq!(
            homology(&tensor_complex(&t, &u).unwrap())
                .unwrap()
                .torsion_exponents,
            h.torsion_exponents
        );
        assert_eq!(
            homology(&tensor_complex(&u, &t).unwrap())
                .unwrap()
                .free_rank,
            1
        );
    }

    #[test]
    fn trefoil_squared() {
        let t = staircase_complex(&gaps(&[1, 1])).unwrap();
        let tt = tensor_complex(&t, &t).unwrap();
        assert_eq!(tt.total_rank(), 9);
        let h = homology(&tt).unwrap();
        assert_eq!(h.free_rank, 1);
        assert_eq!(torsion_order(&h), 1);
    }

    #[test]
    fn summary_requires_one_tower() {
        let h = HomologyDecomposition {
            free_rank: 2,
            ..Default::default()
        };
        assert_eq!(graded_root_summary(&h), Err(Error::NotAKnotComplex(2)));
    }

    #[test]
    fn t78_leaves() {
        let leaves = root_leaves(&torus_gap_formula(7).unwrap());
        let lens: Vec<u32> = leaves.iter().map(|l| l.branch_length).collect();
        assert_eq!(lens, vec![1, 2, 3, 4, 3, 2, 1]);
        assert!(leaves[3].tower);
        assert_eq!(leaves[3].grading, 9);
        assert_eq!(leaves.iter().filter(|l| l.tower).count(), 1);
    }

    #[test]
    fn t89_leaves_have_two_long_branches() {
        let leaves = root_leaves(&torus_gap_formula(8).unwrap());
        let lens: Vec<u32> = leaves.iter().map(|l| l.branch_length).collect();
        assert_eq!(lens, vec![1, 2, 3, 4, 4, 3, 2, 1]);
    }
}
