//! Bass-number growth certificates.
//!
//! For a non-Gorenstein ring of embedding codepth at most 3 the Bass numbers
//! grow strictly from `μ^d` on, except for a single flat step at the second
//! offset in exactly two presentations.  This module turns the closed-form
//! Bass series into exact difference sequences, exposes the two coefficient
//! families that bound those differences from below, detects the exceptional
//! tuples, and reports a window growth ratio as an exact rational.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::classtable::{bass_series, ClassId, ClasstableError, RingInvariants};
use crate::powser::{LaurentPoly, PowserError, RationalSeries};

#[derive(Debug, Error, PartialEq)]
pub enum GrowthError {
    #[error("Bass series has a nonzero coefficient at t^{found}, below the stated order t^{d}")]
    OrderMismatch { d: i64, found: i64 },
    #[error("s = {s} is outside 0..={max}")]
    SOutOfRange { s: i64, max: i64 },
    #[error("growth fails at offset {i}: mu = {cur} after {prev} is not an increase by 1")]
    GrowthViolation { i: usize, prev: BigInt, cur: BigInt },
    #[error("growth certificates assume a non-Gorenstein ring; Gorenstein Bass numbers are constant")]
    GorensteinInput,
    #[error("growth window must cover at least one step")]
    EmptyWindow,
    #[error(transparent)]
    Series(#[from] PowserError),
    #[error(transparent)]
    Classtable(#[from] ClasstableError),
}

/// The two presentations whose Bass numbers repeat once: `(wx, wy)` for
/// class `S` with `l = 1`, and `(wx, wy, z)` for class `H(2,1)` with
/// `l = 2`, `n = 1`.  Both have `μ^{d+2} = μ^{d+1} = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExceptionKind {
    Wxwy,
    Wxwyz,
}

impl fmt::Display for ExceptionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExceptionKind::Wxwy => "wxwy",
            ExceptionKind::Wxwyz => "wxwyz",
        })
    }
}

pub fn exception_kind(cls: ClassId, inv: &RingInvariants) -> Option<ExceptionKind> {
    match cls {
        ClassId::S if inv.l == 1 => Some(ExceptionKind::Wxwy),
        ClassId::H(2, 1) if inv.l == 2 && inv.n == 1 => Some(ExceptionKind::Wxwyz),
        _ => None,
    }
}

/// Whether the tuple names a Gorenstein ring: a complete intersection, or
/// `G(r)` at the self-dual corner `r = l + 1`.
pub fn is_gorenstein(cls: ClassId, inv: &RingInvariants) -> bool {
    match cls {
        ClassId::C(_) => true,
        ClassId::G(r) => r as i64 == inv.l + 1,
        _ => false,
    }
}

/// Differences `μ^{d+i} − μ^{d+i−1}` for `i = 0..=n`, with `μ^{d−1} = 0`:
/// the expansion of `(1 − t) · I_R / t^d`.
pub fn bass_diffs(s: &RationalSeries, d: i64, n: usize) -> Result<Vec<BigInt>, GrowthError> {
    if let Some(ord) = s.order() {
        if ord < d {
            return Err(GrowthError::OrderMismatch { d, found: ord });
        }
    }
    let w = s.shift(-d).mul_poly(&LaurentPoly::from_terms(&[(0, 1), (1, -1)]));
    Ok(w.taylor(0, n as i64))
}

/// Taylor coefficients `a_0..a_n` of `(f − g)/(1 − t²)`.  The first three
/// tie exactly to the Bass differences (`diff_0 = a_0 + 1`,
/// `diff_1 = a_1 − 1`, `diff_2 = a_2 + (l−1)a_0`); from `i = 3` on they
/// bound them from below when `l ≥ 1` and the `a_i` are nonnegative.
pub fn coeffs_a(f: &LaurentPoly, g: &LaurentPoly, n: usize) -> Result<Vec<BigInt>, GrowthError> {
    let den = LaurentPoly::from_terms(&[(0, 1), (2, -1)]);
    let s = RationalSeries::new(f.sub(g), den)?;
    Ok(s.taylor(0, n as i64))
}

/// Taylor coefficients `b_0..b_n` of `f(t)(1 + t³)^s / (1 − t²)²`, defined
/// for `0 ≤ s ≤ m − p` (the corank of `A_1·A_1` inside `A_2`).  The first
/// three tie exactly to the Bass differences (`diff_0 = b_0`,
/// `diff_1 = b_1`, `diff_2 = b_2 + (l−2)b_0`); from `i = 3` on they bound
/// them from below when `l ≥ 2` and the `b_i` are nonnegative.
pub fn coeffs_b(
    f: &LaurentPoly,
    s: i64,
    m_minus_p: i64,
    n: usize,
) -> Result<Vec<BigInt>, GrowthError> {
    if s < 0 || s > m_minus_p {
        return Err(GrowthError::SOutOfRange { s, max: m_minus_p });
    }
    let num = f.mul(&LaurentPoly::from_terms(&[(0, 1), (3, 1)]).pow(s as u32));
    let den = LaurentPoly::from_terms(&[(0, 1), (2, -1)]).pow(2);
    let series = RationalSeries::new(num, den)?;
    Ok(series.taylor(0, n as i64))
}

/// The `s` used by the per-class lower-bound arguments: 0 for `T`, 1 for
/// the `H(p,q)` rows with `p + q ≥ 1`, 0 otherwise.
pub fn canonical_s(cls: ClassId) -> i64 {
    match cls {
        ClassId::H(p, q) if p + q >= 1 => 1,
        _ => 0,
    }
}

/// Growth verdict over a window: Bass values, per-step strictness, the
/// exception slot if any, and the minimum consecutive ratio as an exact
/// rational.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthReport {
    pub window: usize,
    pub d: u32,
    /// `μ^{d+i}` for `i = 0..=window`.
    pub mu: Vec<BigInt>,
    /// Strict-increase flags for offsets `1..=window`.
    pub strict: Vec<bool>,
    pub exception: Option<ExceptionKind>,
    /// `min μ^{d+i}/μ^{d+i−1}` over the window, skipping the flat step of
    /// an exceptional tuple.  A window bound, not an asymptotic constant.
    pub gamma_window: BigRational,
}

pub fn growth_verdict(
    cls: ClassId,
    inv: &RingInvariants,
    n: usize,
) -> Result<GrowthReport, GrowthError> {
    if n < 3 {
        return Err(GrowthError::EmptyWindow);
    }
    if is_gorenstein(cls, inv) {
        return Err(GrowthError::GorensteinInput);
    }
    let series = bass_series(cls, inv, false)?;
    let diffs = bass_diffs(&series, inv.d as i64, n)?;
    let mut mu = Vec::with_capacity(n + 1);
    let mut acc = BigInt::zero();
    for dlt in &diffs {
        acc += dlt;
        mu.push(acc.clone());
    }
    let exception = exception_kind(cls, inv);
    let mut strict = Vec::with_capacity(n);
    for i in 1..=n {
        let ok = mu[i] >= &mu[i - 1] + 1;
        strict.push(ok);
        if i == 2 && exception.is_some() {
            if !(mu[2] == mu[1] && mu[1] == BigInt::from(2)) {
                return Err(GrowthError::GrowthViolation {
                    i,
                    prev: mu[1].clone(),
                    cur: mu[2].clone(),
                });
            }
            continue;
        }
        if !ok {
            return Err(GrowthError::GrowthViolation {
                i,
                prev: mu[i - 1].clone(),
                cur: mu[i].clone(),
            });
        }
    }
    let mut gamma: Option<BigRational> = None;
    for i in 1..=n {
        if i == 2 && exception.is_some() {
            continue;
        }
        let ratio = BigRational::new(mu[i].clone(), mu[i - 1].clone());
        if gamma.as_ref().map_or(true, |g| ratio < *g) {
            gamma = Some(ratio);
        }
    }
    Ok(GrowthReport {
        window: n,
        d: inv.d,
        mu,
        strict,
        exception,
        gamma_window: gamma.expect("window has at least one ratio"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classtable::fg_polys;
    use num_traits::{One, Signed};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn inv_for(cls: ClassId, h: u32, l: i64, n: u32) -> RingInvariants {
        RingInvariants::for_class(cls, h, l, n).unwrap()
    }

    #[test]
    fn diff_sequences() {
        let inv = inv_for(ClassId::S, 0, 2, 0);
        let s = bass_series(ClassId::S, &inv, false).unwrap();
        assert_eq!(bass_diffs(&s, 0, 4).unwrap(), ints(&[2, 1, 3, 6, 12]));

        // Constant Bass series: a single drop step, nothing after.
        let ci = inv_for(ClassId::C(3), 0, 2, 1);
        let s = bass_series(ClassId::C(3), &ci, false).unwrap();
        assert_eq!(bass_diffs(&s, 0, 5).unwrap(), ints(&[1, -1, 0, 0, 0, 0]));

        let exc = RingInvariants::new(3, 1, 1, 1, 1, 0, 0, 0, 0).unwrap();
        let s = bass_series(ClassId::S, &exc, false).unwrap();
        let d = bass_diffs(&s, 1, 4).unwrap();
        assert_eq!(d, ints(&[1, 1, 0, 2, 2]));

        assert_eq!(
            bass_diffs(&s, 2, 3),
            Err(GrowthError::OrderMismatch { d: 2, found: 1 })
        );
    }

    #[test]
    fn a_coefficients() {
        let inv = inv_for(ClassId::G(2), 1, 3, 1);
        let (f, g) = fg_polys(ClassId::G(2), &inv, false).unwrap();
        assert_eq!(coeffs_a(&f, &g, 4).unwrap(), ints(&[0, 2, 2, 2, 2]));

        let inv = inv_for(ClassId::B, 0, 4, 2);
        let (f, g) = fg_polys(ClassId::B, &inv, false).unwrap();
        assert_eq!(coeffs_a(&f, &g, 4).unwrap(), ints(&[1, 3, 4, 4, 4]));

        let zero = coeffs_a(&LaurentPoly::one(), &LaurentPoly::one(), 3).unwrap();
        assert_eq!(zero, ints(&[0, 0, 0, 0]));
    }

    #[test]
    fn b_coefficients() {
        let inv = inv_for(ClassId::T, 1, 2, 2);
        let (f, _) = fg_polys(ClassId::T, &inv, false).unwrap();
        let b = coeffs_b(&f, 0, (inv.m - inv.p) as i64, 6).unwrap();
        assert_eq!(b[3], BigInt::from(3));
        assert_eq!(b[5], BigInt::from(4));

        let inv = RingInvariants::new(3, 0, 0, 3, 5, 2, 3, 2, 2).unwrap();
        let (f, _) = fg_polys(ClassId::H(3, 2), &inv, false).unwrap();
        let b = coeffs_b(&f, 1, (inv.m - inv.p) as i64, 4).unwrap();
        assert_eq!(&b[..3], &ints(&[2, 1, 1])[..]);

        assert_eq!(
            coeffs_b(&f, 3, 2, 4),
            Err(GrowthError::SOutOfRange { s: 3, max: 2 })
        );
        let z = coeffs_b(&LaurentPoly::zero(), 0, 2, 3).unwrap();
        assert_eq!(z, ints(&[0, 0, 0, 0]));
    }

    #[test]
    fn exception_detection() {
        let s1 = inv_for(ClassId::S, 1, 1, 0);
        assert_eq!(exception_kind(ClassId::S, &s1), Some(ExceptionKind::Wxwy));
        let h21 = inv_for(ClassId::H(2, 1), 1, 2, 1);
        assert_eq!(exception_kind(ClassId::H(2, 1), &h21), Some(ExceptionKind::Wxwyz));
        let t = inv_for(ClassId::T, 0, 3, 2);
        assert_eq!(exception_kind(ClassId::T, &t), None);
        let s2 = inv_for(ClassId::S, 0, 2, 0);
        assert_eq!(exception_kind(ClassId::S, &s2), None);
    }

    #[test]
    fn verdict_exceptional_and_generic() {
        let s1 = inv_for(ClassId::S, 1, 1, 0);
        let rep = growth_verdict(ClassId::S, &s1, 12).unwrap();
        assert_eq!(rep.exception, Some(ExceptionKind::Wxwy));
        assert_eq!(&rep.mu[..6], &ints(&[1, 2, 2, 4, 6, 10])[..]);
        assert!(!rep.strict[1]);
        assert_eq!(rep.gamma_window, BigRational::new(3.into(), 2.into()));

        let g2 = inv_for(ClassId::G(2), 1, 3, 1);
        let rep = growth_verdict(ClassId::G(2), &g2, 12).unwrap();
        assert_eq!(rep.exception, None);
        assert!(rep.strict.iter().all(|&b| b));
        assert!(rep.gamma_window > BigRational::one());
    }

    #[test]
    fn verdict_rejects_gorenstein() {
        let ci = inv_for(ClassId::C(3), 0, 2, 1);
        assert_eq!(growth_verdict(ClassId::C(3), &ci, 12), Err(GrowthError::GorensteinInput));
        let gor = inv_for(ClassId::G(5), 0, 4, 1);
        assert!(is_gorenstein(ClassId::G(5), &gor));
        assert_eq!(growth_verdict(ClassId::G(5), &gor, 12), Err(GrowthError::GorensteinInput));
        let g2 = inv_for(ClassId::G(2), 1, 3, 1);
        assert!(!is_gorenstein(ClassId::G(2), &g2));
    }

    // The three routes to the same differences: direct expansion, the
    // a-family relations, and the b-family relations where defined.
    #[test]
    fn route_agreement_on_a_grid() {
        for entry in crate::classtable::admissible_grid(4, 3, 3, 3, 3) {
            if entry.gorenstein || entry.inv.c() < 3 {
                continue;
            }
            let (cls, inv) = (entry.cls, entry.inv);
            let series = bass_series(cls, &inv, false).unwrap();
            let diffs = bass_diffs(&series, inv.d as i64, 10).unwrap();
            let (f, g) = fg_polys(cls, &inv, false).unwrap();
            let a = coeffs_a(&f, &g, 10).unwrap();
            let l = inv.l;
            assert_eq!(diffs[0], &a[0] + 1, "{cls} {inv:?}");
            assert_eq!(diffs[1], &a[1] - 1, "{cls}");
            assert_eq!(diffs[2], &a[2] + (&a[0] * BigInt::from(l - 1)), "{cls}");

            let s = canonical_s(cls);
            if s <= (inv.m - inv.p) as i64 {
                let b = coeffs_b(&f, s, (inv.m - inv.p) as i64, 10).unwrap();
                assert_eq!(diffs[0], b[0], "{cls}");
                assert_eq!(diffs[1], b[1], "{cls}");
                assert_eq!(diffs[2], &b[2] + (&b[0] * BigInt::from(l - 2)), "{cls}");
            }
        }
    }

    // Dominance forms of the lower bounds, as series inequalities.
    #[test]
    fn dominance_bounds() {
        let t = LaurentPoly::from_terms(&[(1, 1)]);
        for entry in crate::classtable::admissible_grid(4, 3, 3, 3, 3) {
            if entry.gorenstein || entry.inv.c() < 3 {
                continue;
            }
            let (cls, inv) = (entry.cls, entry.inv);
            let (f, g) = fg_polys(cls, &inv, false).unwrap();
            let series = bass_series(cls, &inv, false).unwrap();
            let diff_series = series
                .shift(-(inv.d as i64))
                .mul_poly(&LaurentPoly::from_terms(&[(0, 1), (1, -1)]));
            let l = inv.l;

            let a = RationalSeries::new(
                f.sub(&g),
                LaurentPoly::from_terms(&[(0, 1), (2, -1)]),
            )
            .unwrap();
            let a_ok = a.taylor(0, 12).iter().all(|c| !c.is_negative());
            if l >= 1 && a_ok {
                let lhs = diff_series.add(&RationalSeries::from_poly(t.clone()));
                let rhs = a.mul_poly(&LaurentPoly::from_terms(&[(0, 1), (2, l - 1)]));
                assert!(lhs.dominates(&rhs, 12), "a-bound fails for {cls} {inv:?}");
            }

            let s = canonical_s(cls);
            if l >= 2 && s <= (inv.m - inv.p) as i64 {
                let b = RationalSeries::new(
                    f.mul(&LaurentPoly::from_terms(&[(0, 1), (3, 1)]).pow(s as u32)),
                    LaurentPoly::from_terms(&[(0, 1), (2, -1)]).pow(2),
                )
                .unwrap();
                if b.taylor(0, 12).iter().all(|c| !c.is_negative()) {
                    let rhs = b.mul_poly(&LaurentPoly::from_terms(&[(0, 1), (2, l - 2)]));
                    assert!(diff_series.dominates(&rhs, 12), "b-bound fails for {cls} {inv:?}");
                }
            }
        }
    }
}
