//! Integer Laurent polynomials in one variable `t`, torus-knot Alexander
//! polynomials, and the exponent/gap data of L-space knots.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A Laurent polynomial with integer coefficients. Zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, exp);
        p
    }

    /// Builds a polynomial from `(coefficient, exponent)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (c, e) in terms {
            p.add_term(c, e);
        }
        p
    }

    fn add_term(&mut self, coeff: i64, exp: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(exponent, coefficient)`, highest exponent first.
    pub fn terms_desc(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().rev().map(|(&e, &c)| (e, c))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    /// Substitutes `t -> t^{-1}`.
    pub fn reflect(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.reflect()
    }

    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// `t^n - 1`.
    pub fn t_pow_minus_one(n: i64) -> Self {
        Self::from_terms([(1, n), (-1, 0)])
    }

    /// Long division over the integers, as ordinary polynomials after shifting
    /// both operands to start at `t^0`. Quotient exponents never drop below
    /// `min_exp(self) - min_exp(divisor)`, and the remainder is what is left
    /// once the next quotient term would. The divisor's leading coefficient
    /// must divide every leading coefficient encountered.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let (d_top, d_lead) = match divisor.terms.iter().next_back() {
            Some((&e, &c)) => (e, c),
            None => return Err(Error::invalid("division by the zero polynomial")),
        };
        let floor = self.min_exp().unwrap_or(0) - divisor.min_exp().unwrap_or(0);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&r_top, &r_lead)) = rem.terms.iter().next_back() {
            if r_top - d_top < floor {
                break;
            }
            if r_lead % d_lead != 0 {
                return Err(Error::internal(format!(
                    "leading coefficient {r_lead} not divisible by {d_lead}"
                )));
            }
            let c = r_lead / d_lead;
            let e = r_top - d_top;
            quot.add_term(c, e);
            rem = &rem - &(divisor * &Self::monomial(c, e));
        }
        Ok((quot, rem))
    }

    /// Exact division; a nonzero remainder is an internal error.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::internal(format!(
                "inexact division: ({self}) / ({divisor}) leaves remainder {r}"
            )));
        }
        Ok(q)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(c, e);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(-c, e);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms_desc().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    match e {
                        1 => write!(f, "t")?,
                        _ => write!(f, "t^{e}")?,
                    }
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Checks `1 <= p < q` and `gcd(p, q) = 1`.
pub fn check_torus_params(p: i64, q: i64) -> Result<()> {
    if p < 1 || q <= p {
        return Err(Error::invalid(format!(
            "torus knot T({p},{q}) needs 1 <= p < q"
        )));
    }
    if gcd(p as u64, q as u64) != 1 {
        return Err(Error::invalid(format!(
            "torus knot T({p},{q}) needs gcd(p,q) = 1"
        )));
    }
    Ok(())
}

/// The symmetrized Alexander polynomial of the torus knot `T(p,q)`,
/// `(t^{pq}-1)(t-1) / ((t^p-1)(t^q-1))` recentred so that `Δ(t) = Δ(t^{-1})`.
pub fn torus_alexander(p: i64, q: i64) -> Result<LaurentPoly> {
    check_torus_params(p, q)?;
    let num = &LaurentPoly::t_pow_minus_one(p * q) * &LaurentPoly::t_pow_minus_one(1);
    let den = &LaurentPoly::t_pow_minus_one(p) * &LaurentPoly::t_pow_minus_one(q);
    let quot = num.div_exact(&den)?;
    let degree = (p - 1) * (q - 1);
    debug_assert_eq!(quot.max_exp(), Some(degree));
    let centred = quot.shift(-degree / 2);
    if !centred.is_symmetric() || centred.eval_at_one() != 1 {
        return Err(Error::internal(format!(
            "Alexander polynomial of T({p},{q}) failed normalization: {centred}"
        )));
    }
    Ok(centred)
}

/// Exponents `α_0 > α_1 > ... > α_{2l}` of an L-space Alexander polynomial
/// `Σ (-1)^k t^{α_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentSequence(Vec<i64>);

impl ExponentSequence {
    pub fn new(alphas: Vec<i64>) -> Result<Self> {
        if alphas.len().is_multiple_of(2) {
            return Err(Error::NotLSpaceForm(format!(
                "even number of terms ({})",
                alphas.len()
            )));
        }
        if alphas.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotLSpaceForm(
                "exponents are not strictly decreasing".into(),
            ));
        }
        let n = alphas.len();
        if (0..n).any(|k| alphas[k] + alphas[n - 1 - k] != 0) {
            return Err(Error::NotLSpaceForm(
                "exponents are not symmetric about 0".into(),
            ));
        }
        Ok(Self(alphas))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    /// The `l` in `2l + 1` terms; the genus for torus knots.
    pub fn half_len(&self) -> usize {
        self.0.len() / 2
    }
}

/// Positive gaps `d_1, ..., d_{2l}` between consecutive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GapSequence(Vec<u32>);

impl GapSequence {
    /// Any even-length list of positive integers. Gap data coming from an
    /// Alexander polynomial is additionally palindromic.
    pub fn new(gaps: Vec<u32>) -> Result<Self> {
        if !gaps.len().is_multiple_of(2) {
            return Err(Error::invalid(format!(
                "gap sequence has odd length {}",
                gaps.len()
            )));
        }
        if gaps.contains(&0) {
            return Err(Error::invalid("gap sequence contains a zero gap"));
        }
        Ok(Self(gaps))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&d| d as u64).sum()
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }
}

/// Reads off the exponent sequence of a polynomial of the form
/// `Σ_{k=0}^{2l} (-1)^k t^{α_k}`.
pub fn lspace_exponents(poly: &LaurentPoly) -> Result<ExponentSequence> {
    if poly.is_zero() {
        return Err(Error::NotLSpaceForm("zero polynomial".into()));
    }
    let mut alphas = Vec::with_capacity(poly.len());
    for (k, (e, c)) in poly.terms_desc().enumerate() {
        let expected = if k % 2 == 0 { 1 } else { -1 };
        if c.abs() != 1 {
            return Err(Error::NotLSpaceForm(format!(
                "coefficient {c} of t^{e} is not ±1"
            )));
        }
        if c != expected {
            return Err(Error::NotLSpaceForm(format!(
                "signs do not alternate from +1 (term t^{e} has sign {c})"
            )));
        }
        alphas.push(e);
    }
    ExponentSequence::new(alphas)
}

/// `d_k = α_{k-1} - α_k` for `k = 1..2l`.
pub fn gap_sequence(alphas: &ExponentSequence) -> GapSequence {
    let gaps: Vec<u32> = alphas
        .as_slice()
        .windows(2)
        .map(|w| u32::try_from(w[0] - w[1]).expect("gap fits in u32"))
        .collect();
    let gaps = GapSequence(gaps);
    debug_assert!(gaps.is_palindromic());
    gaps
}

/// Closed-form gaps of `T(n, n+1)`: `(1, n-1, 2, n-2, ..., n-1, 1)`.
pub fn torus_gap_formula(n: u32) -> Result<GapSequence> {
    if n < 2 {
        return Err(Error::invalid(format!("gap formula needs n >= 2, got {n}")));
    }
    let gaps = (1..n).flat_map(|k| [k, n - k]).collect();
    Ok(GapSequence(gaps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn trefoil_alexander() {
        let d = torus_alexander(2, 3).unwrap();
        assert_eq!(d, poly(&[(1, 1), (-1, 0), (1, -1)]));
        assert_eq!(d.to_string(), "t - 1 + t^-1");
    }

    #[test]
    fn t34_alexander() {
        let d = torus_alexander(3, 4).unwrap();
        let terms: Vec<_> = d.terms_desc().collect();
        assert_eq!(terms, vec![(3, 1), (2, -1), (0, 1), (-2, -1), (-3, 1)]);
    }

    #[test]
    fn unknot_as_t12() {
        assert_eq!(torus_alexander(1, 2).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn bad_torus_params() {
        assert!(matches!(torus_alexander(2, 4), Err(Error::InvalidInput(_))));
        assert!(matches!(torus_alexander(3, 2), Err(Error::InvalidInput(_))));
        assert!(matches!(torus_alexander(0, 2), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn inexact_division_is_internal() {
        let a = poly(&[(1, 2), (1, 0)]);
        let b = poly(&[(1, 1), (-1, 0)]);
        assert!(a.div_exact(&b).unwrap_err().is_internal());
        assert!(matches!(
            a.div_rem(&LaurentPoly::zero()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn division_below_divisor_range() {
        let a = poly(&[(-1, -2)]);
        assert_eq!(a.div_exact(&LaurentPoly::one()).unwrap(), a);
        let b = poly(&[(1, 1), (-1, 0)]);
        let prod = &poly(&[(3, 1), (2, -3)]) * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), poly(&[(3, 1), (2, -3)]));
    }

    #[test]
    fn exponents_of_trefoil_and_unknot() {
        let e = lspace_exponents(&torus_alexander(2, 3).unwrap()).unwrap();
        assert_eq!(e.as_slice(), &[1, 0, -1]);
        let u = lspace_exponents(&LaurentPoly::one()).unwrap();
        assert_eq!(u.as_slice(), &[0]);
    }

    #[test]
    fn non_lspace_forms() {
        let p = poly(&[(1, 2), (1, 0), (1, -2)]);
        assert!(matches!(lspace_exponents(&p), Err(Error::NotLSpaceForm(_))));
        let p = poly(&[(2, 1), (-3, 0), (2, -1)]);
        assert!(matches!(lspace_exponents(&p), Err(Error::NotLSpaceForm(_))));
        let p = poly(&[(1, 1), (-1, -1)]);
        assert!(matches!(lspace_exponents(&p), Err(Error::NotLSpaceForm(_))));
        assert!(lspace_exponents(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn gaps() {
        let e = ExponentSequence::new(vec![1, 0, -1]).unwrap();
        assert_eq!(gap_sequence(&e).as_slice(), &[1, 1]);
        let e = ExponentSequence::new(vec![0]).unwrap();
        assert!(gap_sequence(&e).is_empty());
        let e = lspace_exponents(&torus_alexander(3, 4).unwrap()).unwrap();
        assert_eq!(gap_sequence(&e).as_slice(), &[1, 2, 2, 1]);
    }

    #[test]
    fn gap_formula() {
        assert_eq!(torus_gap_formula(3).unwrap().as_slice(), &[1, 2, 2, 1]);
        assert_eq!(torus_gap_formula(2).unwrap().as_slice(), &[1, 1]);
        assert_eq!(
            torus_gap_formula(4).unwrap().as_slice(),
            &[1, 3, 2, 2, 3, 1]
        );
        assert!(torus_gap_formula(1).is_err());
    }

    #[test]
    fn gap_sequence_validation() {
        assert!(GapSequence::new(vec![1, 2, 3]).is_err());
        assert!(GapSequence::new(vec![1, 0]).is_err());
        assert!(GapSequence::new(vec![]).is_ok());
    }

    #[test]
    fn formula_matches_division() {
        for n in 2..=12u32 {
            let d = torus_alexander(n as i64, n as i64 + 1).unwrap();
            let gaps = gap_sequence(&lspace_exponents(&d).unwrap());
            assert_eq!(gaps, torus_gap_formula(n).unwrap(), "n = {n}");
        }
    }
}
