//! Reference computations that share no code paths with the library's
//! division, staircase reduction or Smith form.

#![allow(dead_code)]

use utorsion_core::{ChainComplex, FUMatrix, UPoly};

/// Rows of bits, one `Vec<u64>` per row.
struct BitMatrix {
    cols: usize,
    rows: Vec<Vec<u64>>,
}

impl BitMatrix {
    fn new(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![vec![0; cols.div_ceil(64)]; rows],
        }
    }

    fn flip(&mut self, r: usize, c: usize) {
        self.rows[r][c / 64] ^= 1 << (c % 64);
    }

    fn rank(mut self) -> usize {
        let mut rank = 0;
        for c in 0..self.cols {
            let (w, b) = (c / 64, 1u64 << (c % 64));
            let Some(p) = (rank..self.rows.len()).find(|&r| self.rows[r][w] & b != 0) else {
                continue;
            };
            self.rows.swap(rank, p);
            let pivot = self.rows[rank].clone();
            for r in 0..self.rows.len() {
                if r != rank && self.rows[r][w] & b != 0 {
                    for (x, y) in self.rows[r].iter_mut().zip(&pivot) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Rank over F2 of `m` tensored with `F2[U]/U^n`, as an `F2`-linear map.
fn truncated_rank(m: &FUMatrix, n: usize) -> usize {
    let mut bits = BitMatrix::new(m.rows() * n, m.cols() * n);
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            for e in m.get(r, c).exponents() {
                for b in 0..n.saturating_sub(e) {
                    bits.flip(r * n + b + e, c * n + b);
                }
            }
        }
    }
    bits.rank()
}

/// Rank over F2 after setting `U = 1`.
fn rank_at_one(m: &FUMatrix) -> usize {
    let mut bits = BitMatrix::new(m.rows(), m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if m.get(r, c).exponents().count() % 2 == 1 {
                bits.flip(r, c);
            }
        }
    }
    bits.rank()
}

fn degrees(c: &ChainComplex) -> Vec<i32> {
    c.degrees().collect()
}

/// `dim H(C ⊗ F2[U]/U^n)` over F2.
fn truncated_dimension(c: &ChainComplex, n: usize) -> usize {
    degrees(c)
        .into_iter()
        .map(|k| {
            c.rank(k) * n
                - truncated_rank(&c.differential(k), n)
                - truncated_rank(&c.differential(k + 1), n)
        })
        .sum()
}

/// Total homology as `(free rank, sorted torsion exponents)`, assuming every
/// torsion summand is `F2[U]/U^k`.
///
/// Setting `U = 1` kills torsion and leaves the free rank. Truncating at
/// `U^n` gives dimension `free·n + 2·Σ min(k_i, n)`, so consecutive
/// differences count the exponents `k_i >= n`.
pub fn homology_oracle(c: &ChainComplex) -> (usize, Vec<u32>) {
    let free: usize = degrees(c)
        .into_iter()
        .map(|k| c.rank(k) - rank_at_one(&c.differential(k)) - rank_at_one(&c.differential(k + 1)))
        .sum();
    let mut torsion = Vec::new();
    let mut prev = 0;
    for n in 1.. {
        let dim = truncated_dimension(c, n);
        let at_least_n = (dim - prev - free) / 2;
        prev = dim;
        if at_least_n == 0 {
            break;
        }
        torsion.push(at_least_n);
    }
    // torsion[n-1] = #{k_i >= n}
    let mut exps = Vec::new();
    for (i, &count) in torsion.iter().enumerate() {
        let next = torsion.get(i + 1).copied().unwrap_or(0);
        exps.extend(std::iter::repeat_n((i + 1) as u32, count - next));
    }
    exps.sort_unstable();
    (free, exps)
}

pub fn order_oracle(c: &ChainComplex) -> u32 {
    homology_oracle(c).1.last().copied().unwrap_or(0)
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `t^n - 1` as coefficients from the constant term up.
fn t_pow_minus_one(n: usize) -> Vec<i64> {
    let mut v = vec![0; n + 1];
    v[0] = -1;
    v[n] = 1;
    v
}

/// Coefficients of the torus-knot Alexander polynomial (lowest degree 0),
/// checked by multiplying back.
pub fn alexander_oracle(p: usize, q: usize) -> Vec<i64> {
    let num = poly_mul(&t_pow_minus_one(p * q), &t_pow_minus_one(1));
    let den = poly_mul(&t_pow_minus_one(p), &t_pow_minus_one(q));
    // den is monic with constant term 1, so divide from the bottom up
    let mut rem = num.clone();
    let qlen = num.len() - den.len() + 1;
    let mut quot = vec![0i64; qlen];
    for i in 0..qlen {
        let c = rem[i] / den[0];
        quot[i] = c;
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    assert!(
        rem.iter().all(|&x| x == 0),
        "T({p},{q}): division leaves a remainder"
    );
    assert_eq!(poly_mul(&quot, &den), num, "T({p},{q}): product check");
    quot
}

/// Gaps between consecutive nonzero exponents, read from the top.
pub fn gaps_oracle(p: usize, q: usize) -> Vec<u32> {
    let coeffs = alexander_oracle(p, q);
    let exps: Vec<usize> = (0..coeffs.len())
        .rev()
        .filter(|&i| coeffs[i] != 0)
        .collect();
    for (i, &e) in exps.iter().enumerate() {
        let expected = if i % 2 == 0 { 1 } else { -1 };
        assert_eq!(
            coeffs[e], expected,
            "T({p},{q}): coefficients do not alternate"
        );
    }
    exps.windows(2).map(|w| (w[0] - w[1]) as u32).collect()
}

/// `(1, n-1, 2, n-2, ..., n-1, 1)`.
pub fn closed_form_gaps(n: u32) -> Vec<u32> {
    (1..n).flat_map(|i| [i, n - i]).collect()
}

/// Rank over the fraction field by cross-multiplying rows, never dividing.
pub fn fraction_free_rank(m: &FUMatrix) -> usize {
    let mut a: Vec<Vec<UPoly>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot_row = a[rank].clone();
        let pivot = pivot_row[c].clone();
        for row in a.iter_mut().skip(rank + 1) {
            let f = row[c].clone();
            if f.is_zero() {
                continue;
            }
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &(&pivot * x) + &(&f * p);
            }
        }
        rank += 1;
    }
    rank
}

/// Matrix product entry by entry.
pub fn naive_product(a: &FUMatrix, b: &FUMatrix) -> FUMatrix {
    assert_eq!(a.cols(), b.rows());
    let mut out = FUMatrix::zero(a.rows(), b.cols());
    for i in 0..a.rows() {
        for k in 0..b.cols() {
            let mut s = UPoly::zero();
            for j in 0..a.cols() {
                s += &(a.get(i, j) * b.get(j, k));
            }
            out.set(i, k, s);
        }
    }
    out
}

pub fn square_zero(c: &ChainComplex) -> bool {
    degrees(c)
        .into_iter()
        .all(|k| naive_product(&c.differential(k), &c.differential(k + 1)).is_zero())
}
