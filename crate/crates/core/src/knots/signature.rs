//! Two independent routes to the signature of a torus knot.

use num::{BigRational, Signed, Zero};

/// Lattice-point count: for `1 <= i < p`, `1 <= j < q`, each point with
/// `i/p + j/q` in `(1/2, 3/2)` contributes `-1` and every other point `+1`.
/// Normalized so that `σ(T(2,3)) = -2`.
pub fn torus_signature(p: u32, q: u32) -> i64 {
    let (p, q) = (p as i64, q as i64);
    let pq = p * q;
    let mut sigma = 0;
    for i in 1..p {
        for j in 1..q {
            // 2(i/p + j/q) compared against 1 and 3, scaled by pq
            let s = 2 * (i * q + j * p);
            if s > pq && s < 3 * pq {
                sigma -= 1;
            } else if s != pq && s != 3 * pq {
                sigma += 1;
            }
        }
    }
    sigma
}

/// Seifert matrix of `T(p,q)` as the negated tensor product of the
/// `(n-1) x (n-1)` forms with `1` on the diagonal and `-1` just above it.
pub fn torus_seifert_matrix(p: u32, q: u32) -> Vec<Vec<i64>> {
    let block = |n: u32| -> Vec<Vec<i64>> {
        let m = n.saturating_sub(1) as usize;
        (0..m)
            .map(|r| {
                (0..m)
                    .map(|c| match c as i64 - r as i64 {
                        0 => 1,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect()
    };
    let (a, b) = (block(p), block(q));
    let (na, nb) = (a.len(), b.len());
    let mut v = vec![vec![0i64; na * nb]; na * nb];
    for i in 0..na {
        for j in 0..na {
            for k in 0..nb {
                for l in 0..nb {
                    v[i * nb + k][j * nb + l] = -a[i][j] * b[k][l];
                }
            }
        }
    }
    v
}

/// Signature of a symmetric integer matrix by congruence diagonalization
/// over the rationals.
pub fn symmetric_signature(m: &[Vec<i64>]) -> i64 {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect();
    let mut sigma = 0i64;
    while !a.is_empty() {
        let n = a.len();
        let pivot = (0..n).find(|&i| !a[i][i].is_zero());
        let pivot = match pivot {
            Some(i) => i,
            None => {
                // zero diagonal: fold a nonzero off-diagonal entry onto it
                let Some((i, j)) = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero())
                else {
                    break;
                };
                let row_j = a[j].clone();
                for (x, y) in a[i].iter_mut().zip(row_j) {
                    *x += y;
                }
                for row in a.iter_mut() {
                    let add = row[j].clone();
                    row[i] += add;
                }
                i
            }
        };
        let d = a[pivot][pivot].clone();
        sigma += if d.is_positive() { 1 } else { -1 };
        let rest: Vec<usize> = (0..n).filter(|&k| k != pivot).collect();
        let next: Vec<Vec<BigRational>> = rest
            .iter()
            .map(|&r| {
                rest.iter()
                    .map(|&c| &a[r][c] - &a[r][pivot] * &a[pivot][c] / &d)
                    .collect()
            })
            .collect();
        a = next;
    }
    sigma
}

/// Signature of `V + Vᵀ` for the torus-knot Seifert matrix.
pub fn seifert_signature(p: u32, q: u32) -> i64 {
    let v = torus_seifert_matrix(p, q);
    let n = v.len();
    let sym: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| v[i][j] + v[j][i]).collect())
        .collect();
    symmetric_signature(&sym)
}
