//! Integer Laurent polynomials and rational series `num(t)/den(t)`.
//!
//! Every generating function in the crate lives here: Poincare series,
//! Bass series, Hilbert series. Coefficients are arbitrary-precision
//! integers; a rational series can be Taylor/Laurent-expanded exactly on any
//! window provided the lowest coefficient of its denominator is a unit `±1`
//! of `Z`. Equality of series is decided by cross-multiplication of the
//! representations, never by comparing finitely many coefficients.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Errors from series construction and division.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PowserError {
    /// The denominator vanishes identically.
    #[error("zero denominator")]
    ZeroDenominator,
    /// The lowest coefficient of the denominator is not `±1`, so the series
    /// has no integer Laurent expansion.
    #[error("denominator's lowest coefficient {0} is not a unit")]
    NonUnitDenominator(BigInt),
}

/// A Laurent polynomial over `Z`: finitely many terms `c * t^e`, `e` of
/// either sign. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// The monomial `c * t^e`.
    pub fn monomial(e: i64, c: i64) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(e, BigInt::from(c));
        }
        LaurentPoly { coeffs: m }
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, c)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut m: BTreeMap<i64, BigInt> = BTreeMap::new();
        for &(e, c) in terms {
            let entry = m.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        m.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs: m }
    }

    pub fn from_big_terms(terms: Vec<(i64, BigInt)>) -> Self {
        let mut m: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            let entry = m.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        m.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs: m }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lowest exponent with nonzero coefficient, if any.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest exponent with nonzero coefficient, if any.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut m = self.coeffs.clone();
        for (e, c) in &other.coeffs {
            let entry = m.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        m.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs: m }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                let entry = m.entry(e1 + e2).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        m.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs: m }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let big = BigInt::from(c);
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * &big)).collect() }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// The substitution `t ↦ t⁻¹`, negating every exponent.
    pub fn substitute_inverse(&self) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Exposes the coefficient map for serialization.
    pub fn coeff_map(&self) -> &BTreeMap<i64, BigInt> {
        &self.coeffs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if a.is_one() && *e != 0 {
                // coefficient 1 is implicit on nonconstant terms
            } else {
                write!(f, "{a}")?;
                if *e != 0 {
                    write!(f, "*")?;
                }
            }
            match *e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

/// A formal quotient of Laurent polynomials, expandable as an integer
/// Laurent series.
///
/// The denominator is normalized so its lowest coefficient is `+1`; equality
/// is by cross-multiplication, so reduced and unreduced representations of
/// the same series compare equal.
#[derive(Debug, Clone)]
pub struct RationalSeries {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalSeries {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, PowserError> {
        let Some(lo) = den.min_exp() else {
            return Err(PowserError::ZeroDenominator);
        };
        let lead = den.coeff(lo);
        if lead.abs() != BigInt::one() {
            return Err(PowserError::NonUnitDenominator(lead));
        }
        if lead.is_negative() {
            Ok(RationalSeries { num: num.neg(), den: den.neg() })
        } else {
            Ok(RationalSeries { num, den })
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalSeries { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Order of the series: the lowest exponent with nonzero coefficient
    /// (`None` for the zero series).
    pub fn order(&self) -> Option<i64> {
        let nlo = self.num.min_exp()?;
        let dlo = self.den.min_exp().expect("denominator nonzero");
        Some(nlo - dlo)
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        // Lowest den coefficients are both +1, so the product's is +1.
        RationalSeries { num, den }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalSeries { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalSeries { num: self.num.mul(&other.num), den: self.den.mul(&other.den) }
    }

    pub fn div(&self, other: &Self) -> Result<Self, PowserError> {
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        RationalSeries { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        RationalSeries { num: self.num.mul(p), den: self.den.clone() }
    }

    /// The substitution `t ↦ t⁻¹` applied to both polynomials. Fails when the
    /// highest coefficient of the denominator is not a unit, since that
    /// becomes the new lowest one.
    pub fn substitute_inverse(&self) -> Result<Self, PowserError> {
        Self::new(self.num.substitute_inverse(), self.den.substitute_inverse())
    }

    /// Exact Laurent coefficients of `t^lo .. t^hi` inclusive.
    pub fn taylor(&self, lo: i64, hi: i64) -> Vec<BigInt> {
        assert!(lo <= hi, "taylor window [{lo}, {hi}] is empty");
        let width = (hi - lo + 1) as usize;
        if self.num.is_zero() {
            return vec![BigInt::zero(); width];
        }
        let dlo = self.den.min_exp().expect("denominator nonzero");
        // den = t^dlo * (1 + d_1 t + ... ), num shifted accordingly.
        let num = self.num.shift(-dlo);
        let start = num.min_exp().expect("numerator nonzero");
        if start > hi {
            return vec![BigInt::zero(); width];
        }
        let dmax = self.den.max_exp().unwrap() - dlo;
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for j in start..=hi {
            // s_j = num_j - sum_{k >= 1} d_k s_{j-k}
            let mut v = num.coeff(j);
            for k in 1..=dmax {
                if j - k < start {
                    break;
                }
                let d = self.den.coeff(dlo + k);
                if !d.is_zero() {
                    v -= d * coeffs.get(&(j - k)).cloned().unwrap_or_else(BigInt::zero);
                }
            }
            coeffs.insert(j, v);
        }
        (lo..=hi).map(|j| coeffs.get(&j).cloned().unwrap_or_else(BigInt::zero)).collect()
    }

    /// One exact Laurent coefficient.
    pub fn coeff(&self, e: i64) -> BigInt {
        self.taylor(e, e).pop().unwrap()
    }

    /// Coefficientwise `self ≥ other` on every exponent `≤ n`.
    pub fn dominates(&self, other: &Self, n: i64) -> bool {
        let diff = self.sub(other);
        if diff.is_zero() {
            return true;
        }
        let lo = diff.order().unwrap();
        if lo > n {
            return true;
        }
        diff.taylor(lo, n).iter().all(|c| !c.is_negative())
    }
}

/// Cross-multiplication equality: `a/b = c/d  ⟺  ad = cb`.
impl PartialEq for RationalSeries {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RationalSeries {}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LaurentPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// `(1 + t)^n` as a polynomial, a recurring factor in the closed forms.
pub fn one_plus_t_pow(n: u32) -> LaurentPoly {
    LaurentPoly::from_terms(&[(0, 1), (1, 1)]).pow(n)
}

/// `(1 - t)^n`.
pub fn one_minus_t_pow(n: u32) -> LaurentPoly {
    LaurentPoly::from_terms(&[(0, 1), (1, -1)]).pow(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(num: &[(i64, i64)], den: &[(i64, i64)]) -> RationalSeries {
        RationalSeries::new(LaurentPoly::from_terms(num), LaurentPoly::from_terms(den)).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn geometric_series() {
        let s = series(&[(0, 1)], &[(0, 1), (1, -1)]);
        assert_eq!(s.taylor(0, 4), ints(&[1, 1, 1, 1, 1]));
        // negative window coefficients vanish
        assert_eq!(s.taylor(-2, 1), ints(&[0, 0, 1, 1]));
    }

    #[test]
    fn recurrence_expansion() {
        // 1/(1 - t - 2t^2): a_i = a_{i-1} + 2 a_{i-2}
        let s = series(&[(0, 1)], &[(0, 1), (1, -1), (2, -2)]);
        assert_eq!(s.taylor(0, 5), ints(&[1, 1, 3, 5, 11, 21]));
        // (2 + t - t^2)/(1 - t - 2t^2)
        let s2 = series(&[(0, 2), (1, 1), (2, -1)], &[(0, 1), (1, -1), (2, -2)]);
        assert_eq!(s2.taylor(0, 4), ints(&[2, 3, 6, 12, 24]));
    }

    #[test]
    fn non_unit_denominator_rejected() {
        let err = RationalSeries::new(LaurentPoly::one(), LaurentPoly::from_terms(&[(0, 2), (1, -1)]));
        assert_eq!(err.unwrap_err(), PowserError::NonUnitDenominator(BigInt::from(2)));
        assert!(RationalSeries::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn negative_lead_normalized() {
        // 1/(-1 + t) = -1/(1 - t)
        let s = series(&[(0, 1)], &[(0, -1), (1, 1)]);
        assert_eq!(s.den().coeff(0), BigInt::from(1));
        assert_eq!(s.taylor(0, 2), ints(&[-1, -1, -1]));
    }

    #[test]
    fn laurent_window() {
        // t^{-2} * 1/(1-t)
        let s = series(&[(-2, 1)], &[(0, 1), (1, -1)]);
        assert_eq!(s.order(), Some(-2));
        assert_eq!(s.taylor(-3, 1), ints(&[0, 1, 1, 1, 1]));
    }

    #[test]
    fn cross_multiplication_equality() {
        // 1/((1-t)^2 (1+t)) == (1/(1-t)) * (1/(1-t^2))
        let lhs = RationalSeries::new(
            LaurentPoly::one(),
            one_minus_t_pow(2).mul(&one_plus_t_pow(1)),
        )
        .unwrap();
        let rhs = series(&[(0, 1)], &[(0, 1), (1, -1)]).mul(&series(&[(0, 1)], &[(0, 1), (2, -1)]));
        assert_eq!(lhs, rhs);
        // unreduced vs reduced
        let a = series(&[(0, 1)], &[(0, 1), (1, -1)]);
        let b = series(&[(0, 1), (1, 1)], &[(0, 1), (1, 0), (2, -1)]);
        assert_eq!(a, b);
        assert_ne!(a, rhs);
    }

    #[test]
    fn inverse_product_is_one() {
        let s = series(&[(0, 1)], &[(0, 1), (1, -1)]);
        let p = RationalSeries::from_poly(LaurentPoly::from_terms(&[(0, 1), (1, -1)]));
        assert_eq!(s.mul(&p), RationalSeries::one());
    }

    #[test]
    fn substitute_inverse_involution() {
        let p = LaurentPoly::from_terms(&[(1, 2), (2, 1)]);
        let q = p.substitute_inverse();
        assert_eq!(q, LaurentPoly::from_terms(&[(-1, 2), (-2, 1)]));
        assert_eq!(q.substitute_inverse(), p);
        assert_eq!(LaurentPoly::one().substitute_inverse(), LaurentPoly::one());
    }

    #[test]
    fn dominance() {
        let geo = series(&[(0, 1)], &[(0, 1), (1, -1)]);
        let one = RationalSeries::one();
        assert!(geo.dominates(&one, 10));
        assert!(!one.dominates(&geo, 10));
        assert!(geo.dominates(&geo, 10));
    }

    #[test]
    fn division() {
        let a = series(&[(0, 1)], &[(0, 1), (1, -1)]);
        let b = a.div(&a).unwrap();
        assert_eq!(b, RationalSeries::one());
        // dividing by a series whose numerator starts with 2 fails
        let c = RationalSeries::from_poly(LaurentPoly::constant(2));
        assert!(a.div(&c).is_err());
    }

    #[test]
    fn display_format() {
        let p = LaurentPoly::from_terms(&[(-2, 3), (0, 1), (1, -1), (3, 1)]);
        assert_eq!(p.to_string(), "3*t^-2 + 1 - t + t^3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
