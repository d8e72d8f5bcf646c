//! Alexander polynomials of braid closures via the reduced Burau
//! representation, with the torus-knot closed form as an independent check.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::word::{closure_info, unknotting_number, BraidWord, TorusParams};

/// Integer Laurent polynomial in `t`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coefficient · t^exponent`
    pub fn monomial(coefficient: impl Into<BigInt>, exponent: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exponent, coefficient.into());
        p
    }

    /// Builds `Σ coefficients[i] · t^i`.
    pub fn from_coefficients(coefficients: &[i64]) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, &c) in coefficients.iter().enumerate() {
            p.add_term(e as i64, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, exponent: i64, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder (or `divisor` is zero).
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let (d_lo, d_hi) = (divisor.min_exponent()?, divisor.max_exponent()?);
        let d_lead = divisor.terms[&d_hi].clone();
        let Some(lo) = self.min_exponent() else {
            return Some(LaurentPoly::zero());
        };
        // No quotient term can sit below this exponent.
        let floor = lo - d_lo;
        let mut rem = self.clone();
        let mut quotient = LaurentPoly::zero();
        while let Some(hi) = rem.max_exponent() {
            let e = hi - d_hi;
            if e < floor {
                return None;
            }
            let (c, r) = rem.terms[&hi].div_rem(&d_lead);
            if !r.is_zero() {
                return None;
            }
            let term = LaurentPoly::monomial(c, e);
            rem = &rem - &(&term * divisor);
            quotient = &quotient + &term;
        }
        Some(quotient)
    }

    /// Shifts so the lowest exponent is 0 and flips the sign so the lowest
    /// coefficient is positive. Removes the `±t^k` ambiguity of the
    /// Alexander polynomial.
    pub fn normalized(&self) -> Self {
        let Some(lo) = self.min_exponent() else {
            return LaurentPoly::zero();
        };
        let shifted = self.shift(-lo);
        if shifted.terms[&0].is_negative() {
            -&shifted
        } else {
            shifted
        }
    }

    /// True iff the coefficient sequence reads the same backwards.
    pub fn is_palindromic(&self) -> bool {
        match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => self
                .terms()
                .all(|(e, c)| self.coefficient(lo + hi - e) == *c),
            _ => true,
        }
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// `1 - t + t^2`; exponents in increasing order, unit coefficients elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = magnitude.is_one();
            match e {
                0 => write!(f, "{magnitude}")?,
                _ if !unit => write!(f, "{magnitude}*")?,
                _ => {}
            }
            match e {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
fn determinant(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut sign_flip = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        let Some(pivot) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return LaurentPoly::zero();
        };
        if pivot != k {
            m.swap(pivot, k);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -&det
    } else {
        det
    }
}

/// Reduced Burau matrix of the word, `(n-1) × (n-1)`, built column-wise:
/// right multiplication by `σ_i` only rewrites column `i`.
fn reduced_burau(w: &BraidWord) -> Vec<Vec<LaurentPoly>> {
    let d = w.strands() as usize - 1;
    let mut m: Vec<Vec<LaurentPoly>> = (0..d)
        .map(|r| {
            (0..d)
                .map(|c| {
                    if r == c {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    }
                })
                .collect()
        })
        .collect();
    for &letter in w.letters() {
        let c = letter as usize - 1;
        for row in m.iter_mut() {
            let mut col = -&row[c].shift(1);
            if c > 0 {
                col = &col + &row[c - 1].shift(1);
            }
            if c + 1 < d {
                col = &col + &row[c + 1];
            }
            row[c] = col;
        }
    }
    m
}

/// `1 + t + ⋯ + t^{n-1}`
fn strand_factor(n: u32) -> LaurentPoly {
    LaurentPoly::from_coefficients(&alloc::vec![1; n as usize])
}

/// Normalized Alexander polynomial of the closure of `w`:
/// `det(I - B(w)) / (1 + t + ⋯ + t^{n-1})`.
pub fn alexander(w: &BraidWord) -> Result<LaurentPoly> {
    let info = closure_info(w);
    if !info.is_knot {
        return Err(Error::NotAKnot {
            components: info.components,
        });
    }
    let burau = reduced_burau(w);
    let d = burau.len();
    let i_minus_b: Vec<Vec<LaurentPoly>> = burau
        .iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(|(c, x)| if r == c { &LaurentPoly::one() - x } else { -x })
                .collect()
        })
        .collect();
    debug_assert_eq!(i_minus_b.len(), d);
    let det = determinant(i_minus_b);
    let poly = det
        .div_exact(&strand_factor(w.strands()))
        .expect("knot closures make det(I - B) divisible by 1 + ⋯ + t^(n-1)");
    Ok(poly.normalized())
}

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, normalized.
pub fn torus_alexander(params: TorusParams) -> Result<LaurentPoly> {
    params.require_knot()?;
    let TorusParams { p, q } = params;
    let t_pow_minus_one = |k: i64| &LaurentPoly::monomial(1, k) - &LaurentPoly::one();
    let numerator = &t_pow_minus_one(p as i64 * q as i64) * &t_pow_minus_one(1);
    let denominator = &t_pow_minus_one(p as i64) * &t_pow_minus_one(q as i64);
    let quotient = numerator
        .div_exact(&denominator)
        .expect("torus closed form divides exactly for coprime parameters");
    Ok(quotient.normalized())
}

/// Outcome of comparing two knot closures by invariants.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Evidence {
    /// Alexander polynomial and unknotting number agree (not a proof of isotopy).
    Consistent,
    /// Some invariant differs; the closures are distinct knots.
    Distinct,
}

pub fn closures_equivalent_evidence(a: &BraidWord, b: &BraidWord) -> Result<Evidence> {
    let (ua, ub) = (unknotting_number(a)?, unknotting_number(b)?);
    if ua == ub && alexander(a)? == alexander(b)? {
        Ok(Evidence::Consistent)
    } else {
        Ok(Evidence::Distinct)
    }
}
