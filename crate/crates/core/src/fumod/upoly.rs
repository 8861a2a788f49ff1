use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};

/// A polynomial in `U` over the field with two elements, stored as a packed
/// little-endian bit vector. The top word is never zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    words: Vec<u64>,
}

impl UPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `U^d`.
    pub fn monomial(d: usize) -> Self {
        let mut words = vec![0u64; d / 64 + 1];
        words[d / 64] = 1u64 << (d % 64);
        Self { words }
    }

    /// Sum of `U^e` over the given exponents (repeats cancel).
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = Self::zero();
        for e in exps {
            p.flip_bit(e);
        }
        p.trim();
        p
    }

    fn flip_bit(&mut self, e: usize) {
        let w = e / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1u64 << (e % 64);
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    /// Degree of a nonzero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, e: usize) -> bool {
        self.words
            .get(e / 64)
            .is_some_and(|w| (w >> (e % 64)) & 1 == 1)
    }

    /// Exponents with coefficient 1, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// `Some(k)` when this is exactly `U^k`.
    pub fn monomial_exponent(&self) -> Option<usize> {
        let d = self.degree()?;
        let ones: u32 = self.words.iter().map(|w| w.count_ones()).sum();
        (ones == 1).then_some(d)
    }

    /// Multiplies by `U^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (ws, bs) = (k / 64, k % 64);
        let mut words = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + ws] ^= w << bs;
            if bs != 0 {
                words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        let mut p = Self { words };
        p.trim();
        p
    }

    /// `self += other * U^k`, in place.
    pub fn add_shifted(&mut self, other: &Self, k: usize) {
        if other.is_zero() {
            return;
        }
        let (ws, bs) = (k / 64, k % 64);
        let need = other.words.len() + ws + 1;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i + ws] ^= w << bs;
            if bs != 0 {
                self.words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        self.trim();
    }

    /// `self += a * b`, in place.
    pub fn add_product(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if a.words.len() == 1 && b.words.len() == 1 {
            let (lo, hi) = clmul(a.words[0], b.words[0]);
            if self.words.len() < 2 {
                self.words.resize(2, 0);
            }
            self.words[0] ^= lo;
            self.words[1] ^= hi;
            self.trim();
            return;
        }
        let (small, large) = if a.words.len() <= b.words.len() {
            (a, b)
        } else {
            (b, a)
        };
        for e in small.exponents() {
            self.add_shifted(large, e);
        }
    }

    /// Euclidean division: `self = divisor * q + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        let d = divisor
            .degree()
            .ok_or_else(|| Error::invalid("division by the zero polynomial"))?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r) = rem.degree() {
            if r < d {
                break;
            }
            quot.flip_bit(r - d);
            rem.add_shifted(divisor, r - d);
        }
        quot.trim();
        Ok((quot, rem))
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.words
            .iter()
            .position(|&w| w != 0)
            .map(|i| i * 64 + self.words[i].trailing_zeros() as usize)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        if let Some(k) = self.monomial_exponent() {
            return other.valuation().is_some_and(|v| v >= k);
        }
        other
            .divmod(self)
            .map(|(_, r)| r.is_zero())
            .unwrap_or(false)
    }

    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.divmod(&y).expect("nonzero divisor");
            x = y;
            y = r;
        }
        x
    }
}

/// Carry-less 64x64 -> 128 bit product.
fn clmul(a: u64, b: u64) -> (u64, u64) {
    let mut lo = 0u64;
    let mut hi = 0u64;
    let mut x = a;
    while x != 0 {
        let i = x.trailing_zeros();
        x &= x - 1;
        lo ^= b << i;
        if i != 0 {
            hi ^= b >> (64 - i);
        }
    }
    (lo, hi)
}

impl AddAssign<&UPoly> for UPoly {
    fn add_assign(&mut self, rhs: &UPoly) {
        self.add_shifted(rhs, 0);
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        let mut out = UPoly::zero();
        out.add_product(self, rhs);
        out
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let exps: Vec<usize> = self.exponents().collect();
        for (i, e) in exps.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "1")?,
                1 => write!(f, "U")?,
                _ => write!(f, "U^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}
