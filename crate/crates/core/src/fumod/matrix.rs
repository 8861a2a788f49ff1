use std::fmt;

use super::UPoly;
use crate::error::{Error, Result};

/// Dense row-major matrix over `F₂[U]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FUMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<UPoly>,
}

impl FUMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![UPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, UPoly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<UPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::invalid("ragged matrix rows"));
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &UPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut UPoly {
        &mut self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: UPoly) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[UPoly] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(UPoly::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j].add_product(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// `row[dst] += factor * row[src]`, restricted to columns `from..`.
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &UPoly, from: usize) {
        debug_assert_ne!(dst, src);
        for c in from..self.cols {
            let s = self.entries[src * self.cols + c].clone();
            if !s.is_zero() {
                self.entries[dst * self.cols + c].add_product(factor, &s);
            }
        }
    }

    /// `col[dst] += factor * col[src]`, restricted to rows `from..`.
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &UPoly, from: usize) {
        debug_assert_ne!(dst, src);
        for r in from..self.rows {
            let s = self.entries[r * self.cols + src].clone();
            if !s.is_zero() {
                self.entries[r * self.cols + dst].add_product(factor, &s);
            }
        }
    }

    /// Determinant by Laplace expansion; `None` for non-square or anything
    /// larger than 8x8.
    pub fn determinant_small(&self) -> Option<UPoly> {
        if self.rows != self.cols || self.rows > 8 {
            return None;
        }
        fn det(m: &FUMatrix, rows: &[usize], cols: &[usize]) -> UPoly {
            if rows.is_empty() {
                return UPoly::one();
            }
            let r = rows[0];
            let mut acc = UPoly::zero();
            for (k, &c) in cols.iter().enumerate() {
                let a = m.get(r, c);
                if a.is_zero() {
                    continue;
                }
                let sub_cols: Vec<usize> = cols
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != k)
                    .map(|(_, &x)| x)
                    .collect();
                let minor = det(m, &rows[1..], &sub_cols);
                acc.add_product(a, &minor);
            }
            acc
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Some(det(self, &idx, &idx))
    }
}

impl fmt::Display for FUMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(UPoly::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for FUMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FUMatrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}
